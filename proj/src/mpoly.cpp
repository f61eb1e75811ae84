#include "nadyn/mpoly.hpp"

#include "nadyn/error.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <vector>

namespace nadyn {

MPoly MPoly::monomial(const Exponent& e, const Integer& c) {
    MPoly m;
    m.add_term(e, c);
    return m;
}

void MPoly::add_term(const Exponent& e, const Integer& c) {
    if (c == 0) return;
    auto [it, fresh] = t_.try_emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second == 0) t_.erase(it);
    }
}

long MPoly::degree() const {
    long d = -1;
    for (const auto& [e, c] : t_) d = std::max<long>(d, e[0] + e[1] + e[2]);
    return d;
}

bool MPoly::is_homogeneous() const {
    const long d = degree();
    return std::all_of(t_.begin(), t_.end(),
                       [d](const auto& kv) { return kv.first[0] + kv.first[1] + kv.first[2] == d; });
}

std::size_t MPoly::max_coeff_bits() const {
    std::size_t b = 0;
    for (const auto& [e, c] : t_) b = std::max(b, mpz_sizeinbase(c.get_mpz_t(), 2));
    return b;
}

MPoly MPoly::operator+(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, c);
    return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
    MPoly r = *this;
    for (const auto& [e, c] : o.t_) r.add_term(e, -c);
    return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
    MPoly r;
    for (const auto& [e1, c1] : t_)
        for (const auto& [e2, c2] : o.t_)
            r.add_term({e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2]}, c1 * c2);
    return r;
}

MPoly MPoly::operator*(const Integer& c) const {
    MPoly r;
    for (const auto& [e, v] : t_) r.add_term(e, v * c);
    return r;
}

MPoly MPoly::divide(const MPoly& d) const {
    if (d.is_zero()) fail(Errc::ZeroPolynomial, "division by the zero polynomial");
    MPoly q, r = *this;
    const auto& [ld, lc] = *d.t_.rbegin();
    while (!r.is_zero()) {
        const auto& [le, c] = *r.t_.rbegin();
        Exponent e;
        for (int i = 0; i < 3; ++i) {
            if (le[i] < ld[i]) fail(Errc::InvalidArgument, "inexact polynomial division");
            e[i] = le[i] - ld[i];
        }
        if (!mpz_divisible_p(c.get_mpz_t(), lc.get_mpz_t()))
            fail(Errc::InvalidArgument, "inexact polynomial division");
        const MPoly t = monomial(e, c / lc);
        q = q + t;
        r = r - t * d;
    }
    return q;
}

Integer MPoly::content() const {
    Integer g = 0;
    for (const auto& [e, c] : t_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

MPoly MPoly::substitute(const std::array<MPoly, 3>& g) const {
    std::array<std::vector<MPoly>, 3> powers;
    for (int v = 0; v < 3; ++v) powers[v].push_back(constant(1));
    auto power = [&](int v, unsigned k) -> const MPoly& {
        while (powers[v].size() <= k) powers[v].push_back(powers[v].back() * g[v]);
        return powers[v][k];
    };
    MPoly r;
    for (const auto& [e, c] : t_) r = r + power(0, e[0]) * power(1, e[1]) * power(2, e[2]) * c;
    return r;
}

std::string MPoly::str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    const char* names = "XYZ";
    bool first = true;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        if (!first) os << " + ";
        first = false;
        os << it->second.get_str();
        for (int i = 0; i < 3; ++i) {
            if (it->first[i] == 0) continue;
            os << "*" << names[i];
            if (it->first[i] > 1) os << "^" << it->first[i];
        }
    }
    return os.str();
}

namespace {

// Z[Y], ascending.
using UPoly = std::vector<Integer>;
// Z[Y][X], ascending in X.
using BPoly = std::vector<UPoly>;

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}
void trim(BPoly& a) {
    while (!a.empty() && a.back().empty()) a.pop_back();
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()), Integer(0));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Integer content(const UPoly& a) {
    Integer g = 0;
    for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    return g;
}

UPoly scale_div(UPoly a, const Integer& c) {
    for (auto& v : a) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_mpz_t());
    return a;
}

// Exact quotient a / b in Z[Y].
UPoly exact_div(UPoly a, const UPoly& b) {
    if (a.empty()) return {};
    UPoly q(a.size() - b.size() + 1, Integer(0));
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t k = a.size() - b.size();
        q[k] = a.back() / b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= q[k] * b[i];
        trim(a);
    }
    trim(q);
    return q;
}

UPoly prem(UPoly a, const UPoly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t k = a.size() - b.size();
        const Integer la = a.back();
        for (auto& v : a) v *= b.back();
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] -= la * b[i];
        trim(a);
    }
    return a;
}

UPoly primitive(const UPoly& a) {
    if (a.empty()) return a;
    UPoly r = scale_div(a, content(a));
    if (r.back() < 0)
        for (auto& v : r) v = -v;
    return r;
}

UPoly ugcd(UPoly a, UPoly b) {
    Integer g = 0;
    mpz_gcd(g.get_mpz_t(), content(a).get_mpz_t(), content(b).get_mpz_t());
    a = primitive(a);
    b = primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        UPoly r = primitive(prem(a, b));
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& v : a) v *= g;
    return a;
}

UPoly upoly_gcd(const UPoly& a, const UPoly& b) {
    if (a.empty() && b.empty()) return {};
    if (a.empty() || b.empty()) {
        UPoly r = a.empty() ? b : a;
        if (r.back() < 0)
            for (auto& v : r) v = -v;
        return r;
    }
    return ugcd(a, b);
}

UPoly content(const BPoly& a) {
    UPoly g;
    for (const auto& c : a) {
        g = upoly_gcd(g, c);
        if (g.size() == 1 && (g[0] == 1 || g[0] == -1)) break;
    }
    return g;
}

BPoly primitive(const BPoly& a) {
    const UPoly c = content(a);
    BPoly r;
    for (const auto& v : a) r.push_back(exact_div(v, c));
    return r;
}

BPoly prem(BPoly a, const BPoly& b) {
    while (!a.empty() && a.size() >= b.size()) {
        const std::size_t k = a.size() - b.size();
        const UPoly la = a.back();
        for (auto& v : a) v = mul(v, b.back());
        for (std::size_t i = 0; i < b.size(); ++i) a[k + i] = sub(a[k + i], mul(la, b[i]));
        trim(a);
    }
    return a;
}

BPoly bgcd(BPoly a, BPoly b) {
    const UPoly c = upoly_gcd(content(a), content(b));
    a = primitive(a);
    b = primitive(b);
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BPoly r = prem(a, b);
        if (!r.empty()) r = primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    for (auto& v : a) v = mul(v, c);
    return a;
}

BPoly dehomogenize(const MPoly& f) {
    BPoly r;
    for (const auto& [e, c] : f.terms()) {
        if (r.size() <= e[0]) r.resize(e[0] + 1);
        UPoly& u = r[e[0]];
        if (u.size() <= e[1]) u.resize(e[1] + 1, Integer(0));
        u[e[1]] += c;
    }
    for (auto& u : r) trim(u);
    trim(r);
    return r;
}

MPoly homogenize(const BPoly& g) {
    long d = 0;
    for (std::size_t i = 0; i < g.size(); ++i)
        if (!g[i].empty()) d = std::max<long>(d, static_cast<long>(i + g[i].size() - 1));
    MPoly r;
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j)
            r.add_term({static_cast<unsigned>(i), static_cast<unsigned>(j),
                        static_cast<unsigned>(d - static_cast<long>(i + j))},
                       g[i][j]);
    return r;
}

Exponent min_exponent(const MPoly& a, Exponent m) {
    for (const auto& [e, c] : a.terms())
        for (int i = 0; i < 3; ++i) m[i] = std::min(m[i], e[i]);
    return m;
}

// Residues modulo a 31-bit prime, ascending and trimmed.
using Residues = std::vector<std::uint64_t>;

void trim(Residues& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Residues mul_mod(const Residues& a, const Residues& b, std::uint64_t q) {
    if (a.empty() || b.empty()) return {};
    Residues r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % q;
    return r;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t q) {
    std::uint64_t r = 1, e = q - 2;
    for (; e; e >>= 1, a = a * a % q)
        if (e & 1) r = r * a % q;
    return r;
}

std::size_t gcd_degree_mod(Residues a, Residues b, std::uint64_t q) {
    while (!b.empty()) {
        const std::uint64_t inv = inv_mod(b.back(), q);
        while (a.size() >= b.size()) {
            const std::uint64_t f = a.back() * inv % q;
            const std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + (q - f) * b[i]) % q;
            trim(a);
        }
        std::swap(a, b);
    }
    return a.size() - 1;
}

// f(s, a s + b, c s + d) mod q.
Residues restrict_to_line(const MPoly& f, const std::array<std::uint64_t, 4>& line, std::uint64_t q) {
    const std::size_t e = static_cast<std::size_t>(f.degree());
    std::vector<Residues> ys{{1}}, zs{{1}};
    for (std::size_t i = 1; i <= e; ++i) {
        ys.push_back(mul_mod(ys.back(), {line[1], line[0]}, q));
        zs.push_back(mul_mod(zs.back(), {line[3], line[2]}, q));
    }
    Residues out(e + 1, 0);
    for (const auto& [x, c] : f.terms()) {
        Integer cr = c % static_cast<unsigned long>(q);
        if (cr < 0) cr += static_cast<unsigned long>(q);
        const std::uint64_t cm = cr.get_ui();
        const Residues yz = mul_mod(ys[x[1]], zs[x[2]], q);
        for (std::size_t i = 0; i < yz.size(); ++i) out[x[0] + i] = (out[x[0] + i] + cm * yz[i]) % q;
    }
    trim(out);
    return out;
}

// Homogeneous f, g of positive degree share no factor over Q when their
// restrictions to some line keep full degree mod q and are coprime there.
bool certainly_coprime(const MPoly& f, const MPoly& g) {
    constexpr std::uint64_t q = 2147483647;
    for (const std::array<std::uint64_t, 4> line : {std::array<std::uint64_t, 4>{3, 5, 7, 11},
                                                    std::array<std::uint64_t, 4>{101, 13, 57, 29}}) {
        const Residues rf = restrict_to_line(f, line, q), rg = restrict_to_line(g, line, q);
        if (rf.size() != static_cast<std::size_t>(f.degree()) + 1 ||
            rg.size() != static_cast<std::size_t>(g.degree()) + 1)
            continue;
        return gcd_degree_mod(rf, rg, q) == 0;
    }
    return false;
}

MPoly strip(const MPoly& a, const Exponent& m) {
    MPoly r;
    for (const auto& [e, c] : a.terms()) r.add_term({e[0] - m[0], e[1] - m[1], e[2] - m[2]}, c);
    return r;
}

MPoly positive(MPoly a) {
    if (!a.is_zero() && a.terms().rbegin()->second < 0) a = a * Integer(-1);
    return a;
}

}  // namespace

MPoly gcd(const MPoly& a, const MPoly& b) {
    if (a.is_zero()) return positive(b);
    if (b.is_zero()) return positive(a);
    const unsigned big = ~0u;
    const Exponent m = min_exponent(b, min_exponent(a, {big, big, big}));
    const MPoly as = strip(a, m), bs = strip(b, m);
    Integer c;
    mpz_gcd(c.get_mpz_t(), as.content().get_mpz_t(), bs.content().get_mpz_t());
    MPoly core = MPoly::constant(c);
    if (!as.is_monomial() && !bs.is_monomial() && !certainly_coprime(as, bs)) {
        const BPoly g = bgcd(dehomogenize(as), dehomogenize(bs));
        MPoly h = homogenize(g);
        const Integer hc = h.content();
        MPoly hp;
        for (const auto& [e, v] : h.terms()) hp.add_term(e, v / hc);
        core = positive(hp) * c;
    }
    return positive(core * MPoly::monomial(m));
}

}  // namespace nadyn
