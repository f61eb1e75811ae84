#include "nadyn/dynamics_p1.hpp"

#include "nadyn/error.hpp"
#include "nadyn/linalg.hpp"

#include <algorithm>
#include <deque>

namespace nadyn {

namespace {

long w_multiplicity(const BinaryForm& F) {
    const long d = static_cast<long>(F.size()) - 1;
    return d - Poly(F).degree();
}

BinaryForm form_of(const Poly& P, std::size_t d) {
    BinaryForm out(d + 1, Scalar(0));
    const auto& c = P.coeffs();
    if (c.size() > d + 1) fail(Errc::InvalidArgument, "polynomial exceeds form degree");
    std::copy(c.begin(), c.end(), out.begin());
    return out;
}

// Polynomials over F_p as residue vectors (ascending, trimmed).
using ModPoly = std::vector<Integer>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly reduce_mod(const BinaryForm& F, const Integer& p) {
    ModPoly out;
    for (const auto& c : F) {
        Integer r = c.get_num() % p;
        if (r < 0) r += p;
        out.push_back(r);
    }
    trim(out);
    return out;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, const Integer& p) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), b.back().get_mpz_t(), p.get_mpz_t());
    while (a.size() >= b.size()) {
        const Integer f = a.back() * inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) {
            Integer& t = a[shift + i];
            t = (t - f * b[i]) % p;
            if (t < 0) t += p;
        }
        trim(a);
    }
    return a;
}

long mod_gcd_degree(ModPoly a, ModPoly b, const Integer& p) {
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<long>(a.size()) - 1;
}

// A trivial gcd modulo a prime not dividing the leading coefficients proves
// a trivial gcd over Q.
bool certainly_coprime(const Poly& a, const Poly& b) {
    for (long q : {2147483647L, 2147483629L, 2147483587L}) {
        const Integer Q(q);
        auto reduce = [&](const Poly& f, ModPoly& out) {
            Integer lcm = 1;
            for (const auto& c : f.coeffs()) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
            if (lcm % Q == 0) return false;
            BinaryForm scaled;
            for (const auto& c : f.coeffs()) scaled.push_back(c * lcm);
            out = reduce_mod(scaled, Q);
            return out.size() == scaled.size();
        };
        ModPoly ra, rb;
        if (!reduce(a, ra) || !reduce(b, rb)) continue;
        return mod_gcd_degree(ra, rb, Q) == 0;
    }
    return false;
}

// Image disk of zeta(a, r) under N/D when D has no zero in the disk.
std::pair<Scalar, PValue> quotient_image(const Poly& N, const Poly& D, const Disk& B,
                                         const Prime& p) {
    const Scalar Na = N(B.center), Da = D(B.center);
    const PValue num = gauss_norm(N * Da - D * Na, B, p);
    const PValue den = norm(Da, p);
    return {Na / Da, num * den.inverse().pow(2)};
}

bool zero_free(const Poly& D, const Disk& B, const Prime& p) {
    if (D.is_zero()) return false;
    if (D.degree() == 0) return true;
    for (const auto& rad : newton_root_radii(D.shifted(B.center).coeffs(), p))
        if (rad <= B.radius) return false;
    return true;
}

// A disk {|u - c| <= s} in the affine coordinate of chart `base`, as a point
// of whichever unit-disk chart contains it.
DiskPoint place(const Scalar& c, const PValue& s, Chart base, const Prime& p) {
    const Chart other = base == Chart::Z ? Chart::W : Chart::Z;
    const PValue cn = norm(c, p);
    if (cn <= PValue::one() && s <= PValue::one()) return DiskPoint::make(base, c, s, p);
    if (s < cn) return DiskPoint::make(other, Scalar(1) / c, s * cn.inverse().pow(2), p);
    return DiskPoint::make(other, 0, s.inverse(), p);
}

std::vector<Integer> sylvester_row(const BinaryForm& F, std::size_t width, std::size_t offset) {
    std::vector<Integer> row(width, Integer(0));
    const std::size_t d = F.size() - 1;
    for (std::size_t i = 0; i <= d; ++i) row[offset + i] = F[d - i].get_num();
    return row;
}

}  // namespace

RationalMapP1 RationalMapP1::normalize(const BinaryForm& F, const BinaryForm& G, const Prime& p) {
    if (F.size() != G.size() || F.size() < 2)
        fail(Errc::InvalidArgument, "F and G must be forms of the same degree d >= 1");
    const std::size_t d = F.size() - 1;
    const Poly Fz(F), Gz(G);
    if (Fz.is_zero() || Gz.is_zero())
        fail(Errc::DegenerateMap, "a zero component makes the map constant");

    const Poly h = certainly_coprime(Fz, Gz) ? Poly::constant(1) : gcd(Fz, Gz);
    const long w = std::min(w_multiplicity(F), w_multiplicity(G));
    const long common = h.degree() + w;
    if (common >= static_cast<long>(d))
        fail(Errc::DegenerateMap, "common factor of degree " + std::to_string(common) +
                                      " exhausts degree " + std::to_string(d));
    const std::size_t nd = d - static_cast<std::size_t>(common);
    BinaryForm nF = form_of(divmod(Fz, h).first, nd);
    BinaryForm nG = form_of(divmod(Gz, h).first, nd);

    Integer lcm = 1, content = 0;
    for (const auto* v : {&nF, &nG})
        for (const auto& c : *v) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    for (auto* v : {&nF, &nG})
        for (auto& c : *v) {
            c *= lcm;
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), c.get_num_mpz_t());
        }
    Scalar scale(Integer(1), content);
    const auto lead = std::find_if(nF.rbegin(), nF.rend(), [](const Scalar& c) { return c != 0; });
    if (*lead < 0) scale = -scale;
    for (auto* v : {&nF, &nG})
        for (auto& c : *v) {
            c *= scale;
            c.canonicalize();
        }
    return RationalMapP1(std::move(nF), std::move(nG), p);
}

RationalMapP1 RationalMapP1::polynomial(const Poly& P, const Prime& p) {
    if (P.degree() < 1) fail(Errc::DegenerateMap, "constant polynomial");
    const std::size_t d = static_cast<std::size_t>(P.degree());
    BinaryForm G(d + 1, Scalar(0));
    G[0] = 1;
    return normalize(form_of(P, d), G, p);
}

std::pair<Poly, Poly> RationalMapP1::chart_pair(Chart c) const {
    if (c == Chart::Z) return {Poly(F_), Poly(G_)};
    return {Poly(BinaryForm(F_.rbegin(), F_.rend())), Poly(BinaryForm(G_.rbegin(), G_.rend()))};
}

bool RationalMapP1::operator==(const RationalMapP1& o) const {
    return p_ == o.p_ && F_ == o.F_ && G_ == o.G_;
}

std::string RationalMapP1::str() const {
    auto form = [](const BinaryForm& F) {
        std::string out;
        const std::size_t d = F.size() - 1;
        for (std::size_t i = d + 1; i-- > 0;) {
            if (F[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += F[i].get_str();
            if (i) out += "*Z" + (i > 1 ? "^" + std::to_string(i) : std::string());
            if (d - i) out += "*W" + (d - i > 1 ? "^" + std::to_string(d - i) : std::string());
        }
        return out;
    };
    return "[" + form(F_) + " : " + form(G_) + "]";
}

RationalMapP1 compose(const RationalMapP1& f, const RationalMapP1& g) {
    if (!(f.prime() == g.prime())) fail(Errc::InvalidArgument, "maps over different primes");
    const Poly G1(g.F()), G2(g.G());
    const std::size_t d = f.degree(), e = g.degree();
    std::vector<Poly> p1(d + 1), p2(d + 1);
    p1[0] = p2[0] = Poly::constant(1);
    for (std::size_t i = 1; i <= d; ++i) {
        p1[i] = p1[i - 1] * G1;
        p2[i] = p2[i - 1] * G2;
    }
    auto substitute = [&](const BinaryForm& F) {
        Poly acc;
        for (std::size_t i = 0; i <= d; ++i)
            if (F[i] != 0) acc = acc + p1[i] * p2[d - i] * F[i];
        return form_of(acc, d * e);
    };
    return RationalMapP1::normalize(substitute(f.F()), substitute(f.G()), f.prime());
}

RationalMapP1 iterate(const RationalMapP1& f, unsigned n) {
    if (n == 0) fail(Errc::InvalidArgument, "iterate needs n >= 1");
    RationalMapP1 acc = f;
    for (unsigned i = 1; i < n; ++i) acc = compose(f, acc);
    return acc;
}

Integer resultant(const RationalMapP1& f) {
    const std::size_t d = f.degree(), n = 2 * d;
    IntMatrix m;
    for (std::size_t i = 0; i < d; ++i) m.push_back(sylvester_row(f.F(), n, i));
    for (std::size_t i = 0; i < d; ++i) m.push_back(sylvester_row(f.G(), n, i));
    return determinant(std::move(m));
}

bool good_reduction_test(const RationalMapP1& f) {
    const Valuation v = valuation(resultant(f), f.prime());
    return v && *v == 0;
}

unsigned reduced_degree(const RationalMapP1& f) {
    const Integer p = f.prime().integer();
    const ModPoly a = reduce_mod(f.F(), p), b = reduce_mod(f.G(), p);
    const long d = f.degree();
    if (a.empty() || b.empty()) return 0;
    const long wa = d - (static_cast<long>(a.size()) - 1);
    const long wb = d - (static_cast<long>(b.size()) - 1);
    const long common = mod_gcd_degree(a, b, p) + std::min(wa, wb);
    return static_cast<unsigned>(std::max(0L, d - common));
}

DiskPoint image_disk(const Poly& f, const DiskPoint& x) {
    if (x.chart() != Chart::Z)
        fail(Errc::ChartMismatch, "image_disk acts on the z chart, got " + x.str());
    if (gauss_norm(f, DiskPoint::gauss(x.prime())) > PValue::one())
        fail(Errc::DiskNotPreserved, f.str() + " does not map the unit disk into itself");
    const Poly taylor = f.shifted(x.center());
    PValue s = PValue::zero();
    const auto& c = taylor.coeffs();
    for (std::size_t i = 1; i < c.size() && !x.radius().is_zero(); ++i)
        if (c[i] != 0) s = std::max(s, norm(c[i], x.prime()) * x.radius().pow(static_cast<long>(i)));
    return DiskPoint::make(Chart::Z, taylor.coeff(0), s, x.prime());
}

DiskPoint rational_eval(const RationalMapP1& f, const DiskPoint& x) {
    const Prime& p = x.prime();
    if (!(p == f.prime())) fail(Errc::InvalidArgument, "point and map over different primes");
    const auto [N, D] = f.chart_pair(x.chart());
    const Disk B = x.disk();

    if (x.is_classical()) {
        const Scalar X = N(B.center), Y = D(B.center);
        if (Y != 0 && norm(X, p) <= norm(Y, p)) return place(X / Y, PValue::zero(), Chart::Z, p);
        return place(Y / X, PValue::zero(), Chart::W, p);
    }
    if (zero_free(D, B, p)) {
        const auto [c, s] = quotient_image(N, D, B, p);
        return place(c, s, Chart::Z, p);
    }
    if (zero_free(N, B, p)) {
        const auto [c, s] = quotient_image(D, N, B, p);
        return place(c, s, Chart::W, p);
    }
    fail(Errc::PoleInDisk, "both F and G vanish inside " + x.str());
}

std::vector<const PreimageNode*> PreimageTree::leaves() const {
    std::vector<const PreimageNode*> out;
    for (const auto& n : nodes)
        if (n.level == depth) out.push_back(&n);
    return out;
}

std::size_t PreimageTree::pruned_count() const {
    return static_cast<std::size_t>(
        std::count_if(nodes.begin(), nodes.end(), [](const auto& n) { return n.pruned; }));
}

PreimageTree preimage_tree(const Scalar& c, const Scalar& target, unsigned depth,
                           unsigned precision, const Prime& p) {
    if (!p.odd()) fail(Errc::EvenPrimeUnsupported, "preimage trees need an odd prime");
    PreimageTree tree;
    tree.depth = depth;
    tree.nodes.push_back({target, 0, 1, false, {}, -1});
    std::deque<std::size_t> queue{0};
    while (!queue.empty()) {
        const std::size_t idx = queue.front();
        queue.pop_front();
        if (tree.nodes[idx].level == depth) continue;
        const PreimageNode node = tree.nodes[idx];
        const Scalar a = node.value + c;
        if (a == 0) {
            tree.nodes.push_back({Scalar(0), node.level + 1, node.multiplicity * 2, false, {},
                                  static_cast<long>(idx)});
            queue.push_back(tree.nodes.size() - 1);
            continue;
        }
        Scalar r;
        try {
            r = hensel_sqrt(a, p, precision);
        } catch (const Error& e) {
            tree.nodes[idx].pruned = true;
            tree.nodes[idx].prune_reason = e.name();
            continue;
        }
        for (const Scalar& child : {Scalar(-r), r}) {
            tree.nodes.push_back(
                {child, node.level + 1, node.multiplicity, false, {}, static_cast<long>(idx)});
            queue.push_back(tree.nodes.size() - 1);
        }
    }
    return tree;
}

Valuation backward_orbit_error(const Scalar& c, const Scalar& target, unsigned n,
                               const Scalar& s, const Prime& p) {
    Scalar z = s;
    for (unsigned i = 0; i < n; ++i) z = z * z - c;
    return valuation(Scalar(z - target), p);
}

nlohmann::json to_json(const RationalMapP1& f) {
    auto form = [](const BinaryForm& F) {
        nlohmann::json arr = nlohmann::json::array();
        const std::size_t d = F.size() - 1;
        for (std::size_t i = d + 1; i-- > 0;)
            if (F[i] != 0)
                arr.push_back({scalar_str(F[i]), std::to_string(i) + "," + std::to_string(d - i)});
        return arr;
    };
    return {{"p", f.prime().value()}, {"type", "p1"}, {"F", form(f.F())}, {"G", form(f.G())}};
}

RationalMapP1 p1_map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("p") || !j["p"].is_number_integer())
        fail(Errc::Schema, "map spec needs an integer 'p'");
    if (j.contains("type") && j["type"] != "p1") fail(Errc::Schema, "map type must be \"p1\"");
    const Prime p(j["p"].get<std::int64_t>());

    struct Term {
        Scalar c;
        long ez, ew;
    };
    auto terms = [](const nlohmann::json& arr, const char* name) {
        if (!arr.is_array() || arr.empty())
            fail(Errc::Schema, std::string("'") + name + "' must be a nonempty array");
        std::vector<Term> out;
        for (const auto& t : arr) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
                fail(Errc::Schema, "monomials are [\"coefficient\", \"expZ,expW\"]");
            const std::string ex = t[1].get<std::string>();
            const auto comma = ex.find(',');
            if (comma == std::string::npos) fail(Errc::Schema, "bad exponent pair '" + ex + "'");
            Term term;
            try {
                term.c = parse_scalar(t[0].get<std::string>());
                term.ez = std::stol(ex.substr(0, comma));
                term.ew = std::stol(ex.substr(comma + 1));
            } catch (const std::exception& e) {
                fail(Errc::Schema, std::string("bad monomial: ") + e.what());
            }
            if (term.ez < 0 || term.ew < 0) fail(Errc::Schema, "negative exponent in '" + ex + "'");
            out.push_back(term);
        }
        return out;
    };
    if (!j.contains("F") || !j.contains("G")) fail(Errc::Schema, "map spec needs 'F' and 'G'");
    const auto tf = terms(j["F"], "F"), tg = terms(j["G"], "G");
    const long d = tf.front().ez + tf.front().ew;
    BinaryForm F(static_cast<std::size_t>(d) + 1, Scalar(0)), G = F;
    for (auto [terms_, form] : {std::pair{&tf, &F}, std::pair{&tg, &G}})
        for (const auto& t : *terms_) {
            if (t.ez + t.ew != d) fail(Errc::Schema, "F and G must be homogeneous of one degree");
            (*form)[static_cast<std::size_t>(t.ez)] += t.c;
        }
    return RationalMapP1::normalize(F, G, p);
}

}  // namespace nadyn
