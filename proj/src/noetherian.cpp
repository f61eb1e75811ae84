#include "nadyn/noetherian.hpp"

#include "nadyn/error.hpp"
#include "nadyn/linalg.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <set>

namespace nadyn {

namespace {

constexpr std::size_t kNodeCap = std::size_t{1} << 20;
constexpr long kMaxStep = 4096;

Subset bit(std::size_t x) { return Subset{1} << x; }
bool has(Subset s, std::size_t x) { return (s >> x) & 1U; }

void check_map(std::size_t size, const SelfMap& f) {
    if (f.size() != size) fail(Errc::InvalidArgument, "self-map has the wrong length");
    for (auto y : f)
        if (y >= size) fail(Errc::InvalidArgument, "self-map value out of range");
}

void check_cover(const FinitePoset& X, const std::vector<Subset>& cover) {
    Subset u = 0;
    for (auto U : cover) {
        if ((U & ~X.all()) || !X.is_open(U)) fail(Errc::InvalidArgument, "cover member is not open");
        u |= U;
    }
    if (u != X.all()) fail(Errc::NotACover, "cover misses a point");
}

/// Sorted, nonempty, pairwise non-dominated members.
std::vector<Subset> maximal_members(std::vector<Subset> m) {
    std::sort(m.begin(), m.end());
    m.erase(std::unique(m.begin(), m.end()), m.end());
    m.erase(std::remove(m.begin(), m.end(), Subset{0}), m.end());
    std::vector<Subset> out;
    for (auto a : m) {
        const bool dominated = std::any_of(m.begin(), m.end(), [&](Subset b) { return b != a && (a & b) == a; });
        if (!dominated) out.push_back(a);
    }
    return out;
}

std::vector<Subset> refine_join(const SelfMap& f, const std::vector<Subset>& cover,
                                const std::vector<Subset>& prev) {
    std::vector<Subset> next;
    for (auto V : prev) {
        const Subset pre = preimage(f, V);
        for (auto U : cover) next.push_back(U & pre);
    }
    return maximal_members(std::move(next));
}

class SetCover {
public:
    SetCover(const std::vector<Subset>& members, Subset universe) : m_(members), all_(universe) {
        for (auto s : m_) widest_ = std::max(widest_, static_cast<std::size_t>(std::popcount(s)));
    }

    CoverComplexity solve() {
        // Greedy first, as the initial bound.
        Subset covered = 0;
        while (covered != all_) {
            std::size_t best = 0;
            int gain = -1;
            for (std::size_t i = 0; i < m_.size(); ++i) {
                const int g = std::popcount(m_[i] & ~covered);
                if (g > gain) {
                    gain = g;
                    best = i;
                }
            }
            best_.push_back(m_[best]);
            covered |= m_[best];
        }
        search(0);
        return {best_.size(), best_};
    }

private:
    const std::vector<Subset>& m_;
    Subset all_;
    std::size_t widest_ = 1;
    std::vector<Subset> chosen_, best_;
    std::size_t nodes_ = 0;

    void search(Subset covered) {
        if (++nodes_ > kNodeCap) fail(Errc::SearchBudget, "set-cover search exceeded 2^20 nodes");
        if (covered == all_) {
            if (chosen_.size() < best_.size()) best_ = chosen_;
            return;
        }
        const auto left = static_cast<std::size_t>(std::popcount(all_ & ~covered));
        if (chosen_.size() + (left + widest_ - 1) / widest_ >= best_.size()) return;
        std::size_t pivot = 0, fewest = SIZE_MAX;
        for (auto x : subset_elements(all_ & ~covered)) {
            std::size_t c = 0;
            for (auto s : m_) c += has(s, x);
            if (c < fewest) {
                fewest = c;
                pivot = x;
            }
        }
        for (auto s : m_)
            if (has(s, pivot)) {
                chosen_.push_back(s);
                search(covered | s);
                chosen_.pop_back();
            }
    }
};

}  // namespace

std::vector<std::size_t> subset_elements(Subset s) {
    std::vector<std::size_t> out;
    while (s) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(s)));
        s &= s - 1;
    }
    return out;
}

FinitePoset FinitePoset::make(const std::vector<std::vector<bool>>& leq) {
    const std::size_t m = leq.size();
    if (m == 0) fail(Errc::InvalidArgument, "empty poset");
    if (m > kMaxSize) fail(Errc::SizeBound, "posets are limited to 64 points");
    for (const auto& row : leq)
        if (row.size() != m) fail(Errc::InvalidArgument, "order relation is not square");
    const auto report = priestley_check(leq);
    if (!report.holds) fail(Errc::InvalidArgument, report.counterexample);
    FinitePoset X;
    X.down_.assign(m, 0);
    X.up_.assign(m, 0);
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y)
            if (leq[x][y]) {
                X.down_[y] |= bit(x);
                X.up_[x] |= bit(y);
            }
    return X;
}

FinitePoset FinitePoset::from_relations(std::size_t size,
                                        const std::vector<std::pair<std::size_t, std::size_t>>& less) {
    std::vector<std::vector<bool>> r(size, std::vector<bool>(size, false));
    for (std::size_t x = 0; x < size; ++x) r[x][x] = true;
    for (auto [a, b] : less) {
        if (a >= size || b >= size) fail(Errc::InvalidArgument, "relation out of range");
        r[a][b] = true;
    }
    for (std::size_t k = 0; k < size; ++k)
        for (std::size_t i = 0; i < size; ++i)
            if (r[i][k])
                for (std::size_t j = 0; j < size; ++j)
                    if (r[k][j]) r[i][j] = true;
    return make(r);
}

Subset FinitePoset::all() const noexcept {
    return size() == 64 ? ~Subset{0} : bit(size()) - 1;
}

Subset FinitePoset::down_closure(Subset s) const {
    Subset out = 0;
    for (auto x : subset_elements(s)) out |= down_[x];
    return out;
}

bool FinitePoset::is_open(Subset s) const {
    for (auto x : subset_elements(s))
        if ((up_[x] & s) != up_[x]) return false;
    return true;
}

bool FinitePoset::is_closed(Subset s) const { return is_open(all() & ~s); }

std::vector<std::size_t> FinitePoset::maximal(Subset s) const {
    std::vector<std::size_t> out;
    for (auto x : subset_elements(s))
        if ((up_[x] & s) == bit(x)) out.push_back(x);
    return out;
}

std::vector<std::vector<bool>> FinitePoset::relation() const {
    std::vector<std::vector<bool>> r(size(), std::vector<bool>(size(), false));
    for (std::size_t x = 0; x < size(); ++x)
        for (std::size_t y = 0; y < size(); ++y) r[x][y] = leq(x, y);
    return r;
}

void check_continuous(const FinitePoset& X, const SelfMap& f) {
    check_map(X.size(), f);
    for (std::size_t x = 0; x < X.size(); ++x)
        for (auto y : subset_elements(X.up(x)))
            if (!X.leq(f[x], f[y]))
                fail(Errc::NotContinuous, "f is not order preserving at " + std::to_string(x) + " <= " +
                                              std::to_string(y));
}

Subset preimage(const SelfMap& f, Subset s) {
    Subset out = 0;
    for (std::size_t x = 0; x < f.size(); ++x)
        if (has(s, f[x])) out |= bit(x);
    return out;
}

Subset image(const SelfMap& f, Subset s) {
    Subset out = 0;
    for (auto x : subset_elements(s)) out |= bit(f[x]);
    return out;
}

// ---- rings ---------------------------------------------------------------

FiniteRing FiniteRing::from_factors(std::vector<Factor> f, std::size_t bound) {
    FiniteRing R;
    R.factors_ = std::move(f);
    for (const auto& x : R.factors_) {
        if (R.size_ > bound / x.size)
            fail(Errc::SizeBound, "ring has more than " + std::to_string(bound) + " elements");
        R.size_ *= x.size;
    }
    if (R.size_ > bound) fail(Errc::SizeBound, "ring has more than " + std::to_string(bound) + " elements");
    return R;
}

FiniteRing FiniteRing::integers(long m, std::size_t bound) {
    if (m < 2) fail(Errc::InvalidArgument, "Z/m needs m >= 2");
    if (static_cast<std::size_t>(m) > bound)
        fail(Errc::SizeBound, "ring has more than " + std::to_string(bound) + " elements");
    return from_factors({{m, 0, 0, static_cast<std::size_t>(m)}}, bound);
}

FiniteRing FiniteRing::truncated(long p, unsigned k, std::size_t bound) {
    const Prime P(p);
    if (k == 0) fail(Errc::InvalidArgument, "F_p[x]/(x^k) needs k >= 1");
    std::size_t size = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (size > bound / static_cast<std::size_t>(p))
            fail(Errc::SizeBound, "ring has more than " + std::to_string(bound) + " elements");
        size *= static_cast<std::size_t>(p);
    }
    return from_factors({{p, p, k, size}}, bound);
}

FiniteRing FiniteRing::product(const std::vector<FiniteRing>& factors, std::size_t bound) {
    if (factors.empty()) fail(Errc::InvalidArgument, "empty product");
    std::vector<Factor> all;
    for (const auto& R : factors) all.insert(all.end(), R.factors_.begin(), R.factors_.end());
    return from_factors(std::move(all), bound);
}

std::vector<std::vector<long>> FiniteRing::split(std::uint32_t a) const {
    std::vector<std::vector<long>> parts;
    for (const auto& f : factors_) {
        const auto local = static_cast<long>(a % f.size);
        a = static_cast<std::uint32_t>(a / f.size);
        if (f.degree == 0) {
            parts.push_back({local});
        } else {
            std::vector<long> digits(f.degree);
            long r = local;
            for (auto& d : digits) {
                d = r % f.p;
                r /= f.p;
            }
            parts.push_back(std::move(digits));
        }
    }
    return parts;
}

std::uint32_t FiniteRing::join(const std::vector<std::vector<long>>& parts) const {
    std::uint64_t a = 0, stride = 1;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        long local = 0;
        if (f.degree == 0) {
            local = parts[i][0];
        } else {
            for (std::size_t d = f.degree; d-- > 0;) local = local * f.p + parts[i][d];
        }
        a += static_cast<std::uint64_t>(local) * stride;
        stride *= f.size;
    }
    return static_cast<std::uint32_t>(a);
}

std::uint32_t FiniteRing::one() const {
    std::vector<std::vector<long>> parts;
    for (const auto& f : factors_) {
        std::vector<long> v(f.degree == 0 ? 1 : f.degree, 0);
        v[0] = 1;
        parts.push_back(std::move(v));
    }
    return join(parts);
}

std::uint32_t FiniteRing::add(std::uint32_t a, std::uint32_t b) const {
    auto x = split(a);
    const auto y = split(b);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (std::size_t d = 0; d < x[i].size(); ++d) x[i][d] = (x[i][d] + y[i][d]) % factors_[i].modulus;
    return join(x);
}

std::uint32_t FiniteRing::neg(std::uint32_t a) const {
    auto x = split(a);
    for (std::size_t i = 0; i < factors_.size(); ++i)
        for (auto& d : x[i]) d = (factors_[i].modulus - d) % factors_[i].modulus;
    return join(x);
}

std::uint32_t FiniteRing::mul(std::uint32_t a, std::uint32_t b) const {
    const auto x = split(a);
    const auto y = split(b);
    std::vector<std::vector<long>> z;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const long m = factors_[i].modulus;
        std::vector<long> c(x[i].size(), 0);
        for (std::size_t s = 0; s < x[i].size(); ++s)
            for (std::size_t t = 0; s + t < c.size(); ++t) c[s + t] = (c[s + t] + x[i][s] * y[i][t]) % m;
        z.push_back(std::move(c));
    }
    return join(z);
}

std::uint32_t FiniteRing::pow(std::uint32_t a, unsigned e) const {
    std::uint32_t r = one();
    for (unsigned i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

std::string FiniteRing::element_str(std::uint32_t a) const {
    const auto parts = split(a);
    std::vector<std::string> out;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (factors_[i].degree == 0) {
            out.push_back(std::to_string(parts[i][0]));
            continue;
        }
        std::string s;
        for (std::size_t d = parts[i].size(); d-- > 0;) {
            const long c = parts[i][d];
            if (c == 0) continue;
            if (!s.empty()) s += "+";
            if (d == 0 || c != 1) s += std::to_string(c);
            if (d >= 1) s += "x";
            if (d >= 2) s += "^" + std::to_string(d);
        }
        out.push_back(s.empty() ? "0" : s);
    }
    if (out.size() == 1) return out[0];
    std::string s = "(";
    for (std::size_t i = 0; i < out.size(); ++i) s += (i ? "," : "") + out[i];
    return s + ")";
}

std::string FiniteRing::str() const {
    std::string s;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        if (i) s += " x ";
        const auto& f = factors_[i];
        s += f.degree == 0 ? "Z/" + std::to_string(f.modulus)
                           : "F_" + std::to_string(f.p) + "[x]/(x^" + std::to_string(f.degree) + ")";
    }
    return s;
}

FiniteRing finite_ring_from_json(const nlohmann::json& j) {
    try {
        const std::size_t bound = j.value("bound", FiniteRing::kDefaultBound);
        const auto kind = j.at("kind").get<std::string>();
        if (kind == "Z") return FiniteRing::integers(j.at("m").get<long>(), bound);
        if (kind == "truncated")
            return FiniteRing::truncated(j.at("p").get<long>(), j.at("k").get<unsigned>(), bound);
        if (kind == "product") {
            std::vector<FiniteRing> f;
            for (const auto& x : j.at("factors")) f.push_back(finite_ring_from_json(x));
            return FiniteRing::product(f, bound);
        }
        fail(Errc::Schema, "unknown ring kind '" + kind + "'");
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::Schema, std::string("ring: ") + e.what());
    }
}

// ---- ideals --------------------------------------------------------------

namespace {

using Members = std::vector<char>;

std::vector<std::uint32_t> to_list(const Members& m) {
    std::vector<std::uint32_t> out;
    for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i]) out.push_back(static_cast<std::uint32_t>(i));
    return out;
}

Members ideal_sum(const FiniteRing& R, const Members& I, const std::vector<std::uint32_t>& J) {
    Members out(R.size(), 0);
    for (auto a : to_list(I))
        for (auto b : J) out[R.add(a, b)] = 1;
    return out;
}

}  // namespace

std::optional<std::size_t> IdealLattice::find(const std::vector<std::uint32_t>& ideal) const {
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (ideals[i] == ideal) return i;
    return std::nullopt;
}

IdealLattice enumerate_ideals(const FiniteRing& R) {
    const std::size_t n = R.size();
    const std::uint32_t one = R.one();
    // Principal ideals R a, one per distinct ideal, keyed by least generator.
    std::vector<std::pair<std::uint32_t, std::vector<std::uint32_t>>> principal;
    std::vector<std::vector<std::uint32_t>> principal_of(n);
    std::set<std::vector<std::uint32_t>> seen_principal;
    for (std::uint32_t a = 0; a < n; ++a) {
        Members m(n, 0);
        for (std::uint32_t r = 0; r < n; ++r) m[R.mul(r, a)] = 1;
        principal_of[a] = to_list(m);
        if (seen_principal.insert(principal_of[a]).second) principal.emplace_back(a, principal_of[a]);
    }

    std::set<std::vector<std::uint32_t>> found;
    std::vector<Members> queue;
    Members zero(n, 0);
    zero[R.zero()] = 1;
    found.insert(to_list(zero));
    queue.push_back(zero);
    for (std::size_t q = 0; q < queue.size(); ++q) {
        const Members I = queue[q];
        for (const auto& [g, P] : principal) {
            if (I[g]) continue;
            Members J = ideal_sum(R, I, P);
            if (J[one]) continue;
            if (found.insert(to_list(J)).second) queue.push_back(std::move(J));
        }
    }

    IdealLattice L;
    L.ideals.assign(found.begin(), found.end());
    std::stable_sort(L.ideals.begin(), L.ideals.end(),
                     [](const auto& a, const auto& b) { return a.size() < b.size(); });
    const std::size_t k = L.ideals.size();
    L.contains.assign(k, std::vector<bool>(k, false));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            L.contains[i][j] = std::includes(L.ideals[i].begin(), L.ideals[i].end(), L.ideals[j].begin(),
                                              L.ideals[j].end());
    for (const auto& I : L.ideals) {
        Members cur = zero;
        std::vector<std::string> gens;
        for (auto a : I) {
            if (cur[a]) continue;
            cur = ideal_sum(R, cur, principal_of[a]);
            gens.push_back(R.element_str(a));
        }
        std::string s = "(";
        if (gens.empty()) s += "0";
        for (std::size_t i = 0; i < gens.size(); ++i) s += (i ? "," : "") + gens[i];
        L.names.push_back(s + ")");
    }
    return L;
}

FinitePoset ideal_space(const IdealLattice& L) { return FinitePoset::make(L.contains); }

SelfMap induced_ideal_map(const FiniteRing& R, const IdealLattice& L,
                          const std::vector<std::uint32_t>& phi) {
    const std::size_t n = R.size();
    if (phi.size() != n) fail(Errc::NotAHomomorphism, "element map has the wrong length");
    for (auto v : phi)
        if (v >= n) fail(Errc::NotAHomomorphism, "element map value out of range");
    if (phi[R.one()] != R.one()) fail(Errc::NotAHomomorphism, "phi(1) != 1");
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = a; b < n; ++b) {
            if (phi[R.add(a, b)] != R.add(phi[a], phi[b]))
                fail(Errc::NotAHomomorphism, "phi is not additive at (" + R.element_str(a) + ", " +
                                                 R.element_str(b) + ")");
            if (phi[R.mul(a, b)] != R.mul(phi[a], phi[b]))
                fail(Errc::NotAHomomorphism, "phi is not multiplicative at (" + R.element_str(a) + ", " +
                                                 R.element_str(b) + ")");
        }
    SelfMap out;
    for (const auto& I : L.ideals) {
        std::vector<std::uint32_t> pre;
        for (std::uint32_t a = 0; a < n; ++a)
            if (std::binary_search(I.begin(), I.end(), phi[a])) pre.push_back(a);
        const auto idx = L.find(pre);
        if (!idx) fail(Errc::NotAHomomorphism, "preimage of a proper ideal is not a proper ideal");
        out.push_back(*idx);
    }
    return out;
}

std::vector<std::uint32_t> power_endomorphism(const FiniteRing& R, unsigned e) {
    std::vector<std::uint32_t> phi;
    for (std::uint32_t a = 0; a < R.size(); ++a) phi.push_back(R.pow(a, e));
    return phi;
}

std::vector<Subset> principal_opens(const FiniteRing& R, const IdealLattice& L) {
    if (L.size() > FinitePoset::kMaxSize) fail(Errc::SizeBound, "ideal space exceeds 64 points");
    std::vector<Subset> out;
    for (std::uint32_t a = 0; a < R.size(); ++a) {
        Subset D = 0;
        for (std::size_t i = 0; i < L.size(); ++i)
            if (!std::binary_search(L.ideals[i].begin(), L.ideals[i].end(), a)) D |= bit(i);
        if (D != 0 && std::find(out.begin(), out.end(), D) == out.end()) out.push_back(D);
    }
    return out;
}

// ---- Priestley -----------------------------------------------------------

PriestleyReport priestley_check(const std::vector<std::vector<bool>>& leq) {
    const std::size_t m = leq.size();
    if (m > FinitePoset::kMaxSize) fail(Errc::SizeBound, "posets are limited to 64 points");
    PriestleyReport r;
    auto s = [](std::size_t x) { return std::to_string(x); };
    for (std::size_t x = 0; x < m; ++x) {
        if (leq[x].size() != m) fail(Errc::InvalidArgument, "order relation is not square");
        if (!leq[x][x]) {
            r.counterexample = "not reflexive at " + s(x);
            return r;
        }
    }
    for (std::size_t x = 0; x < m; ++x)
        for (std::size_t y = 0; y < m; ++y) {
            if (x != y && leq[x][y] && leq[y][x]) {
                r.counterexample = "not antisymmetric: " + s(x) + " <= " + s(y) + " <= " + s(x);
                return r;
            }
            if (!leq[x][y]) continue;
            for (std::size_t z = 0; z < m; ++z)
                if (leq[y][z] && !leq[x][z]) {
                    r.counterexample = "not transitive: " + s(x) + " <= " + s(y) + " <= " + s(z);
                    return r;
                }
        }
    for (std::size_t x = 0; x < m; ++x) {
        Subset K = 0;
        for (std::size_t z = 0; z < m; ++z)
            if (leq[z][x]) K |= bit(z);
        for (std::size_t y = 0; y < m; ++y)
            if (!leq[y][x]) r.witnesses.push_back({{y, x}, K});
    }
    r.holds = true;
    return r;
}

PriestleyReport priestley_check(const FinitePoset& X) { return priestley_check(X.relation()); }

// ---- cover complexity ----------------------------------------------------

std::vector<std::size_t> cover_complexity_series(const FinitePoset& X, const SelfMap& f,
                                                 const std::vector<Subset>& cover,
                                                 std::size_t nmax) {
    check_continuous(X, f);
    check_cover(X, cover);
    std::vector<std::size_t> out{1};
    std::vector<Subset> members{X.all()};
    for (std::size_t n = 1; n <= nmax; ++n) {
        members = refine_join(f, cover, members);
        out.push_back(SetCover(members, X.all()).solve().value);
    }
    return out;
}

CoverComplexity cover_complexity(const FinitePoset& X, const SelfMap& f,
                                 const std::vector<Subset>& cover, std::size_t n) {
    check_continuous(X, f);
    check_cover(X, cover);
    std::vector<Subset> members{X.all()};
    for (std::size_t k = 1; k <= n; ++k) members = refine_join(f, cover, members);
    return SetCover(members, X.all()).solve();
}

// ---- recurrence certificate ----------------------------------------------

namespace {

struct Construction {
    const FinitePoset& X;
    const SelfMap& f;
    const std::vector<Subset>& cover;

    /// A cover member meeting W in the most points, lowest index on ties.
    Subset pick(Subset W) const {
        Subset best = cover.front();
        int most = -1;
        for (auto U : cover) {
            const int c = std::popcount(U & W);
            if (c > most) {
                most = c;
                best = U;
            }
        }
        return best;
    }

    /// Z minus the points whose first N iterates follow the chosen members
    /// U_{j(f^i Z)}, i < N.
    Subset H(Subset Z, long N) const {
        std::vector<Subset> word;
        Subset W = Z;
        for (long i = 0; i < N; ++i) {
            word.push_back(pick(W));
            W = X.down_closure(image(f, W));
        }
        Subset out = 0;
        for (auto x : subset_elements(Z)) {
            std::size_t y = x;
            for (auto U : word) {
                if (!has(U, y)) {
                    out |= bit(x);
                    break;
                }
                y = f[y];
            }
        }
        return out;
    }

    Subset H_over_components(Subset S, long N) const {
        Subset out = 0;
        for (auto y : X.maximal(S)) out |= H(X.down(y), N);
        return out;
    }
};

}  // namespace

RecurrenceCertificate recurrence_certificate(const FinitePoset& X, const SelfMap& f,
                                             const std::vector<Subset>& cover,
                                             const Scalar& epsilon, std::size_t horizon) {
    check_continuous(X, f);
    check_cover(X, cover);
    if (epsilon <= 0) fail(Errc::InvalidArgument, "epsilon must be positive");
    Scalar eps = epsilon;
    eps.canonicalize();
    const Construction K{X, f, cover};

    RecurrenceCertificate c;
    c.epsilon = eps;
    Subset H = K.H(X.all(), 1);
    if (H == X.all()) {
        c.lead = X.maximal(X.all()).size();
        H = K.H_over_components(X.all(), 1);
    }
    c.chain_strict = H != X.all();
    Integer Mprod = 1;
    long prevN = 1;
    Integer ten_i = 1;
    while (H != 0) {
        c.H.push_back(H);
        Mprod *= static_cast<unsigned long>(X.maximal(H).size());
        const Integer Mi = Mprod * static_cast<unsigned long>(c.lead);
        ten_i *= 10;
        // Least N > N_{i-1} with (1+eps)^(N-1) >= M_i 10^i / eps.
        const Scalar target = Scalar(Mi * ten_i) / eps;
        long Ni = prevN + 1;
        Scalar power = 1;
        for (long e = 0; e < Ni - 1; ++e) power *= 1 + eps;
        while (power < target) {
            power *= 1 + eps;
            ++Ni;
            if (Ni > kMaxStep) fail(Errc::SearchBudget, "recurrence step exceeds " + std::to_string(kMaxStep));
        }
        c.M.push_back(Mi);
        c.N.push_back(Ni);
        const Subset next = K.H_over_components(H, Ni);
        if ((next & H) != next || next == H) c.chain_strict = false;
        if (next == H) break;
        H = next;
        prevN = Ni;
    }

    const auto Nk = static_cast<std::size_t>(c.N.empty() ? 1 : c.N.back());
    c.horizon = std::max(horizon, Nk + 4);
    c.complexity = cover_complexity_series(X, f, cover, c.horizon);
    c.recurrence_holds = true;
    for (std::size_t n = std::max<std::size_t>(Nk, 1); n <= c.horizon; ++n) {
        Integer rhs = Integer(static_cast<unsigned long>(c.lead)) * static_cast<unsigned long>(c.complexity[n - 1]);
        for (std::size_t i = 0; i < c.M.size(); ++i)
            rhs += c.M[i] * static_cast<unsigned long>(c.complexity[n - static_cast<std::size_t>(c.N[i])]);
        if (Integer(static_cast<unsigned long>(c.complexity[n])) > rhs) c.recurrence_holds = false;
    }
    const double base = 1 + eps.get_d();
    for (std::size_t n = 0; n <= Nk; ++n)
        c.C = std::max(c.C, static_cast<double>(c.complexity[n]) / std::pow(base, static_cast<double>(n)));
    c.bound_holds = true;
    for (std::size_t n = 0; n <= c.horizon; ++n)
        if (static_cast<double>(c.complexity[n]) > c.C * std::pow(base, static_cast<double>(n)) * (1 + 1e-12))
            c.bound_holds = false;
    return c;
}

nlohmann::json to_json(const RecurrenceCertificate& c) {
    nlohmann::json j;
    j["epsilon"] = scalar_str(c.epsilon);
    j["lead"] = c.lead;
    j["M"] = nlohmann::json::array();
    for (const auto& m : c.M) j["M"].push_back(m.get_str());
    j["N"] = c.N;
    j["H"] = nlohmann::json::array();
    for (auto h : c.H) j["H"].push_back(subset_elements(h));
    j["complexity"] = c.complexity;
    j["horizon"] = c.horizon;
    j["C"] = c.C;
    j["chain_strict"] = c.chain_strict;
    j["recurrence_holds"] = c.recurrence_holds;
    j["bound_holds"] = c.bound_holds;
    j["valid"] = c.valid();
    return j;
}

// ---- invariant measures --------------------------------------------------

std::vector<std::vector<std::size_t>> periodic_cycles(const SelfMap& f) {
    check_map(f.size(), f);
    const std::size_t m = f.size();
    std::vector<char> periodic(m, 0);
    for (std::size_t x = 0; x < m; ++x) {
        // x is periodic iff it returns to itself within m steps.
        std::size_t y = f[x];
        for (std::size_t k = 0; k < m && y != x; ++k) y = f[y];
        periodic[x] = y == x;
    }
    std::vector<char> done(m, 0);
    std::vector<std::vector<std::size_t>> cycles;
    for (std::size_t x = 0; x < m; ++x) {
        if (!periodic[x] || done[x]) continue;
        std::vector<std::size_t> cyc;
        std::size_t y = x;
        do {
            cyc.push_back(y);
            done[y] = 1;
            y = f[y];
        } while (y != x);
        cycles.push_back(std::move(cyc));
    }
    return cycles;
}

std::vector<std::vector<Scalar>> invariant_measure_basis(const SelfMap& f) {
    check_map(f.size(), f);
    const std::size_t m = f.size();
    RatMatrix A(m, std::vector<Scalar>(m, 0));
    for (std::size_t x = 0; x < m; ++x) {
        A[f[x]][x] += 1;
        A[x][x] -= 1;
    }
    return nullspace(std::move(A));
}

AtomicityReport atomicity_check(const SelfMap& f) {
    AtomicityReport r;
    const auto cycles = periodic_cycles(f);
    const auto basis = invariant_measure_basis(f);
    r.cycles = cycles.size();
    r.dimension = basis.size();
    std::vector<long> cycle_of(f.size(), -1);
    for (std::size_t c = 0; c < cycles.size(); ++c)
        for (auto x : cycles[c]) cycle_of[x] = static_cast<long>(c);
    r.atomic = r.dimension == r.cycles;
    for (const auto& v : basis)
        for (std::size_t x = 0; x < f.size(); ++x) {
            if (cycle_of[x] < 0) {
                if (v[x] != 0) r.atomic = false;
            } else if (v[x] != v[cycles[static_cast<std::size_t>(cycle_of[x])][0]]) {
                r.atomic = false;
            }
        }
    return r;
}

}  // namespace nadyn
