#include "nadyn/degree_growth.hpp"

#include "nadyn/error.hpp"
#include "nadyn/linalg.hpp"
#include "nadyn/poly.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

namespace nadyn {

namespace mp = boost::multiprecision;

namespace {

using Real = mp::cpp_bin_float_50;
using Complex = mp::cpp_complex_50;

void check_budget(const MPoly& f, const SymbolicBudget& budget) {
    if (f.terms().size() > budget.terms)
        fail(Errc::BudgetExceeded, std::to_string(f.terms().size()) + " terms exceed the budget of " +
                                       std::to_string(budget.terms));
    if (f.max_coeff_bits() > budget.coeff_bits)
        fail(Errc::BudgetExceeded, std::to_string(f.max_coeff_bits()) +
                                       "-bit coefficient exceeds the budget of " +
                                       std::to_string(budget.coeff_bits) + " bits");
}

Integer ipow(unsigned base, unsigned e) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), base, e);
    return r;
}

// Yun's algorithm: P = prod a_i^i with each a_i squarefree.
std::vector<Poly> squarefree_factors(const Poly& P) {
    std::vector<Poly> out;
    Poly a0 = gcd(P, P.derivative());
    Poly b = divmod(P, a0).first;
    Poly c = divmod(P.derivative(), a0).first;
    Poly d = c - b.derivative();
    while (b.degree() > 0) {
        Poly a = gcd(b, d);
        out.push_back(a);
        b = divmod(b, a).first;
        c = divmod(d, a).first;
        d = c - b.derivative();
    }
    return out;
}

struct Disk2 {
    Complex center;
    Real radius;
};

// Durand-Kerner on a monic squarefree polynomial, followed by Weierstrass
// inclusion disks |z - z_i| <= m |p(z_i) / prod_{j != i} (z_i - z_j)|.
std::vector<Disk2> isolate_roots(const Poly& monic) {
    const std::size_t m = static_cast<std::size_t>(monic.degree());
    std::vector<Complex> c(m + 1);
    for (std::size_t i = 0; i <= m; ++i)
        c[i] = Complex(Real(monic.coeff(i).get_num().get_str()) /
                       Real(monic.coeff(i).get_den().get_str()));
    auto eval = [&](const Complex& z) {
        Complex acc = 0;
        for (std::size_t i = m + 1; i-- > 0;) acc = acc * z + c[i];
        return acc;
    };
    if (m == 1) return {{-c[0], Real(0)}};

    Real bound = 1;
    for (std::size_t i = 0; i < m; ++i) bound = std::max(bound, 1 + abs(c[i]));
    std::vector<Complex> z(m);
    const Complex seed(Real("0.4"), Real("0.9"));
    Complex w = 1;
    for (std::size_t i = 0; i < m; ++i) {
        w *= seed;
        z[i] = w * bound;
    }
    const Real tol("1e-45");
    for (int iter = 0; iter < 2000; ++iter) {
        Real step = 0;
        for (std::size_t i = 0; i < m; ++i) {
            Complex den = 1;
            for (std::size_t j = 0; j < m; ++j)
                if (j != i) den *= z[i] - z[j];
            const Complex delta = eval(z[i]) / den;
            z[i] -= delta;
            step = std::max(step, Real(abs(delta)));
        }
        if (step < tol) break;
    }
    std::vector<Disk2> disks;
    for (std::size_t i = 0; i < m; ++i) {
        Complex den = 1;
        for (std::size_t j = 0; j < m; ++j)
            if (j != i) den *= z[i] - z[j];
        disks.push_back({z[i], Real(m) * abs(eval(z[i]) / den) + Real("1e-40")});
    }
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (abs(disks[i].center - disks[j].center) <= disks[i].radius + disks[j].radius)
                fail(Errc::CertificationFailed, "root inclusion disks overlap");
    return disks;
}

Scalar pow_scalar(const Scalar& x, unsigned n) {
    Scalar r = 1;
    for (unsigned i = 0; i < n; ++i) r *= x;
    return r;
}

}  // namespace

PlaneMap PlaneMap::normalize(std::array<MPoly, 3> f) {
    long d = -1;
    for (const auto& c : f) {
        if (c.is_zero()) continue;
        if (!c.is_homogeneous()) fail(Errc::InvalidArgument, "component " + c.str() + " is not homogeneous");
        if (d >= 0 && c.degree() != d) fail(Errc::InvalidArgument, "components of different degrees");
        d = c.degree();
    }
    if (d < 0) fail(Errc::DegenerateMap, "all components vanish");
    MPoly g;
    for (const auto& c : f) {
        g = gcd(g, c);
        if (g.degree() == 0 && g.content() == 1) break;
    }
    for (auto& c : f)
        if (!c.is_zero()) c = c.divide(g);
    for (const auto& c : f)
        if (!c.is_zero()) {
            if (c.degree() < 1) fail(Errc::DegenerateMap, "common factor exhausts the degree");
            if (c.terms().rbegin()->second < 0)
                for (auto& v : f) v = v * Integer(-1);
            break;
        }
    return PlaneMap(std::move(f));
}

std::string PlaneMap::str() const {
    return "[" + f_[0].str() + " : " + f_[1].str() + " : " + f_[2].str() + "]";
}

PlaneMap compose(const PlaneMap& f, const PlaneMap& g, const SymbolicBudget& budget) {
    std::array<MPoly, 3> h;
    for (int i = 0; i < 3; ++i) {
        h[i] = f.components()[i].substitute(g.components());
        check_budget(h[i], budget);
    }
    return PlaneMap::normalize(std::move(h));
}

bool DegreeSequence::submultiplicative() const {
    const std::size_t n = entries.size();
    for (std::size_t a = 1; a <= n; ++a)
        for (std::size_t b = 1; a + b <= n; ++b)
            if (entries[a + b - 1] > entries[a - 1] * entries[b - 1]) return false;
    return true;
}

DegreeSequence plane_degree_sequence(const PlaneMap& f, unsigned nmax, const SymbolicBudget& budget) {
    if (nmax == 0) fail(Errc::InvalidArgument, "nmax must be positive");
    DegreeSequence seq;
    PlaneMap it = f;
    seq.entries.push_back(it.degree());
    for (unsigned n = 2; n <= nmax; ++n) {
        it = compose(f, it, budget);
        seq.entries.push_back(it.degree());
    }
    seq.lambda_estimate = std::pow(static_cast<double>(seq.entries.back()), 1.0 / nmax);
    seq.lambda_lower = 1;
    seq.lambda_upper = static_cast<double>(seq.entries.front());
    for (std::size_t n = 1; n <= seq.entries.size(); ++n)
        seq.lambda_upper = std::min(seq.lambda_upper, std::pow(static_cast<double>(seq.entries[n - 1]), 1.0 / static_cast<double>(n)));
    return seq;
}

std::vector<CertifiedReal> monomial_dynamical_degrees(const std::vector<std::vector<std::int64_t>>& A) {
    const std::size_t d = A.size();
    if (d == 0) fail(Errc::InvalidArgument, "empty matrix");
    IntMatrix M(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (A[i].size() != d) fail(Errc::InvalidArgument, "matrix is not square");
        for (auto v : A[i]) M[i].push_back(Integer(static_cast<long>(v)));
    }
    const Integer det = determinant(M);
    if (det == 0) fail(Errc::SingularMatrix, "det A = 0");

    std::vector<Scalar> cp;
    for (const auto& c : charpoly(M)) cp.push_back(Scalar(c));
    struct Modulus {
        Real lo, hi, mid;
    };
    std::vector<Modulus> moduli;
    const auto factors = squarefree_factors(Poly(cp));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        if (factors[k].degree() < 1) continue;
        const Poly monic = factors[k] * (Scalar(1) / factors[k].leading());
        for (const auto& disk : isolate_roots(monic)) {
            const Real r = abs(disk.center);
            for (std::size_t mult = 0; mult <= k; ++mult)
                moduli.push_back({std::max(Real(0), r - disk.radius), r + disk.radius, r});
        }
    }
    if (moduli.size() != d) fail(Errc::CertificationFailed, "root count mismatch");

    std::vector<Real> lo, hi, mid;
    for (const auto& m : moduli) {
        lo.push_back(m.lo);
        hi.push_back(m.hi);
        mid.push_back(m.mid);
    }
    std::sort(lo.begin(), lo.end(), std::greater<>());
    std::sort(hi.begin(), hi.end(), std::greater<>());
    std::sort(mid.begin(), mid.end(), std::greater<>());

    std::vector<CertifiedReal> out{{1.0, 1.0, 1.0}};
    Real plo = 1, phi = 1, pmid = 1;
    for (std::size_t k = 1; k <= d; ++k) {
        plo *= lo[k - 1];
        phi *= hi[k - 1];
        pmid *= mid[k - 1];
        CertifiedReal v;
        if (k == d) {
            const double exact = std::fabs(det.get_d());
            v = {exact, exact, exact};
        } else {
            v.value = static_cast<double>(pmid);
            v.lower = std::nextafter(static_cast<double>(plo), 0.0);
            v.upper = std::nextafter(static_cast<double>(phi), HUGE_VAL);
        }
        if (!(v.width() < 1e-9))
            fail(Errc::CertificationFailed, "lambda_" + std::to_string(k) + " bracket too wide");
        out.push_back(v);
    }
    return out;
}

Integer product_map_volume(unsigned d1, unsigned d2, unsigned n) {
    if (d1 == 0 || d2 == 0 || n == 0) fail(Errc::InvalidArgument, "degrees and n must be positive");
    Integer s1 = 0, s2 = 0;
    for (unsigned i = 0; i < n; ++i) {
        s1 += ipow(d1, i);
        s2 += ipow(d2, i);
    }
    return 2 * s1 * s2;
}

Integer product_map_volume_bruteforce(unsigned d1, unsigned d2, unsigned n) {
    Integer total = 0;
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = 0; j < n; ++j) total += ipow(d1, i) * ipow(d2, j) + ipow(d1, j) * ipow(d2, i);
    return total;
}

KeyLemmaReport key_lemma_check(unsigned d1, unsigned d2, const Scalar& eps, unsigned nmax) {
    if (eps <= 0) fail(Errc::InvalidArgument, "eps must be positive");
    if (nmax == 0) fail(Errc::InvalidArgument, "nmax must be positive");
    const Scalar base = Scalar(std::max({1u, d1, d2, d1 * d2})) + eps;
    KeyLemmaReport rep;
    for (unsigned n = 1; n <= nmax; ++n) {
        Scalar c = Scalar(product_map_volume(d1, d2, n)) / pow_scalar(base, n);
        c.canonicalize();
        if (n == 1 || c > rep.sup) {
            rep.sup = c;
            rep.sup_at = n;
        }
        rep.C.push_back(std::move(c));
    }
    rep.tail_start = nmax;
    while (rep.tail_start > 1 && rep.C[rep.tail_start - 1] <= rep.C[rep.tail_start - 2]) --rep.tail_start;
    rep.bounded = rep.tail_start <= std::max(1u, nmax / 2);
    return rep;
}

bool siu_surface_check(const std::array<Scalar, 2>& alpha, const std::array<Scalar, 2>& beta) {
    const auto& [a, b] = alpha;
    const auto& [c, e] = beta;
    if (a < 0 || b < 0) fail(Errc::InvalidArgument, "alpha must be nef");
    if (c <= 0 || e <= 0) fail(Errc::InvalidArgument, "beta must satisfy beta^2 > 0");
    const Scalar dot = a * e + b * c;
    const Scalar sq = 2 * c * e;
    const Scalar k = 2 * dot / sq;
    return a <= k * c && b <= k * e;
}

nlohmann::json to_json(const PlaneMap& f) {
    nlohmann::json comps = nlohmann::json::array();
    for (const auto& c : f.components()) {
        nlohmann::json terms = nlohmann::json::array();
        for (auto it = c.terms().rbegin(); it != c.terms().rend(); ++it)
            terms.push_back({it->second.get_str(), std::to_string(it->first[0]) + "," +
                                                       std::to_string(it->first[1]) + "," +
                                                       std::to_string(it->first[2])});
        comps.push_back(std::move(terms));
    }
    return {{"type", "plane"}, {"components", std::move(comps)}};
}

PlaneMap plane_map_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("components") || !j["components"].is_array() ||
        j["components"].size() != 3)
        fail(Errc::Schema, "plane map needs 'components' with three entries");
    if (j.contains("type") && j["type"] != "plane") fail(Errc::Schema, "map type must be \"plane\"");
    std::array<MPoly, 3> f;
    for (int i = 0; i < 3; ++i) {
        const auto& arr = j["components"][static_cast<std::size_t>(i)];
        if (!arr.is_array()) fail(Errc::Schema, "each component is an array of monomials");
        for (const auto& t : arr) {
            if (!t.is_array() || t.size() != 2 || !t[0].is_string() || !t[1].is_string())
                fail(Errc::Schema, "monomials are [\"coefficient\", \"eX,eY,eZ\"]");
            Exponent e{};
            Integer c;
            try {
                c = Integer(t[0].get<std::string>());
                const std::string s = t[1].get<std::string>();
                std::size_t pos = 0;
                for (int k = 0; k < 3; ++k) {
                    const std::size_t next = s.find(',', pos);
                    if ((k < 2) == (next == std::string::npos)) throw std::invalid_argument(s);
                    const long v = std::stol(s.substr(pos, next - pos));
                    if (v < 0) throw std::invalid_argument(s);
                    e[static_cast<std::size_t>(k)] = static_cast<unsigned>(v);
                    pos = next + 1;
                }
            } catch (const std::exception& ex) {
                fail(Errc::Schema, std::string("bad monomial: ") + ex.what());
            }
            f[static_cast<std::size_t>(i)].add_term(e, c);
        }
    }
    return PlaneMap::normalize(std::move(f));
}

}  // namespace nadyn
