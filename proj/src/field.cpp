#include "nadyn/field.hpp"

#include "nadyn/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace nadyn {

namespace {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    Integer z(static_cast<long>(n));
    return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

Integer pow_p(const Prime& p, unsigned k) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), p.integer().get_mpz_t(), k);
    return r;
}

// Square root of a quadratic residue u modulo an odd prime p (Tonelli-Shanks).
Integer sqrt_mod_prime(const Integer& u, const Integer& p) {
    Integer a = u % p;
    if (a < 0) a += p;
    if (a == 0) return 0;
    Integer q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Integer z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1) ++z;

    Integer m = s, c, t, r, e;
    mpz_powm(c.get_mpz_t(), z.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    mpz_powm(t.get_mpz_t(), a.get_mpz_t(), q.get_mpz_t(), p.get_mpz_t());
    e = (q + 1) / 2;
    mpz_powm(r.get_mpz_t(), a.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
    while (t != 1) {
        unsigned long i = 0;
        Integer tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Integer b = c;
        for (unsigned long j = 0; j + i + 1 < m.get_ui(); ++j) b = b * b % p;
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    return r;
}

bool is_rational_square(const Scalar& a, Scalar& root) {
    if (a < 0) return false;
    const mpz_srcptr num = a.get_num_mpz_t();
    const mpz_srcptr den = a.get_den_mpz_t();
    if (!mpz_perfect_square_p(num) || !mpz_perfect_square_p(den)) return false;
    Integer n, d;
    mpz_sqrt(n.get_mpz_t(), num);
    mpz_sqrt(d.get_mpz_t(), den);
    root = Scalar(n, d);
    root.canonicalize();
    return true;
}

}  // namespace

Prime::Prime(std::int64_t p) : p_(p) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
}

const Scalar& PValue::exponent() const {
    if (zero_) fail(Errc::InvalidArgument, "exponent of the zero absolute value");
    return exp_;
}

PValue PValue::operator*(const PValue& o) const {
    if (zero_ || o.zero_) return zero();
    return PValue(exp_ + o.exp_);
}

PValue PValue::pow(long n) const {
    if (n == 0) return one();
    if (zero_) return zero();
    return PValue(exp_ * Scalar(n));
}

PValue PValue::inverse() const {
    if (zero_) fail(Errc::InvalidArgument, "inverse of the zero absolute value");
    return PValue(-exp_);
}

std::strong_ordering PValue::operator<=>(const PValue& o) const {
    if (zero_ && o.zero_) return std::strong_ordering::equal;
    if (zero_) return std::strong_ordering::less;
    if (o.zero_) return std::strong_ordering::greater;
    const int c = cmp(exp_, o.exp_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

bool PValue::operator==(const PValue& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::string PValue::str() const {
    if (zero_) return "0";
    return "p^" + exp_.get_str();
}

PValue PValue::parse(std::string_view text) {
    if (text == "0") return zero();
    if (text.size() < 3 || text.substr(0, 2) != "p^")
        fail(Errc::InvalidArgument, "malformed absolute value '" + std::string(text) + "'");
    return power(parse_scalar(text.substr(2)));
}

double PValue::approx(const Prime& p) const {
    if (zero_) return 0.0;
    return std::pow(static_cast<double>(p.value()), exp_.get_d());
}

Valuation valuation(const Integer& x, const Prime& p) {
    if (x == 0) return std::nullopt;
    Integer rest;
    const auto v = mpz_remove(rest.get_mpz_t(), x.get_mpz_t(), p.integer().get_mpz_t());
    return static_cast<long>(v);
}

Valuation valuation(const Scalar& x, const Prime& p) {
    if (x == 0) return std::nullopt;
    const Integer num(x.get_num()), den(x.get_den());
    return *valuation(num, p) - *valuation(den, p);
}

PValue norm(const Scalar& x, const Prime& p) {
    const auto v = valuation(x, p);
    if (!v) return PValue::zero();
    return PValue::power(Scalar(-*v));
}

Integer residue_mod_power(const Scalar& x, const Prime& p, unsigned k) {
    const Integer mod = pow_p(p, k);
    const Integer den(x.get_den());
    Integer inv;
    if (k > 0 && mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t()) == 0)
        fail(Errc::InvalidArgument, "denominator of " + x.get_str() + " is divisible by p");
    if (k == 0) return 0;
    Integer r = Integer(x.get_num()) * inv % mod;
    if (r < 0) r += mod;
    return r;
}

Scalar hensel_sqrt(const Scalar& a, const Prime& p, unsigned precision) {
    if (!p.odd()) fail(Errc::EvenPrimeUnsupported, "square roots at p = 2 are not supported");
    if (a == 0) return Scalar(0);
    const long v = *valuation(a, p);
    if (v % 2 != 0)
        fail(Errc::OddValuation, "v_p(" + a.get_str() + ") = " + std::to_string(v) + " is odd");

    const Integer pz = p.integer();
    Scalar scale = 1;
    for (long i = 0; i < std::labs(v); ++i) scale *= Scalar(pz);
    const Scalar unit = v >= 0 ? Scalar(a / scale) : Scalar(a * scale);
    const Integer u1 = residue_mod_power(unit, p, 1);
    if (mpz_legendre(u1.get_mpz_t(), pz.get_mpz_t()) != 1)
        fail(Errc::NonSquareResidue,
             "unit part of " + a.get_str() + " is not a square mod " + pz.get_str());

    Scalar exact;
    if (is_rational_square(a, exact)) return exact;

    const unsigned m = std::max(1u, precision);
    const Integer mod = pow_p(p, m);
    const Integer u = residue_mod_power(unit, p, m);
    Integer s = sqrt_mod_prime(u1, pz);
    // Newton iteration s <- s - (s^2 - u)/(2s) modulo p^m doubles the
    // number of correct digits each round.
    for (;;) {
        Integer diff = (s * s - u) % mod;
        if (diff < 0) diff += mod;
        if (diff == 0) break;
        Integer two_s = 2 * s, inv;
        mpz_invert(inv.get_mpz_t(), two_s.get_mpz_t(), mod.get_mpz_t());
        s = (s - diff * inv) % mod;
        if (s < 0) s += mod;
    }
    const Integer lead = s % pz;
    if (lead > (pz - 1) / 2) s = mod - s;

    Scalar half = 1;
    for (long i = 0; i < std::labs(v) / 2; ++i) half *= Scalar(pz);
    Scalar root = v >= 0 ? Scalar(Scalar(s) * half) : Scalar(Scalar(s) / half);
    root.canonicalize();
    return root;
}

std::vector<PValue> newton_root_radii(const std::vector<Scalar>& coeffs, const Prime& p) {
    struct Pt {
        long x;
        Scalar y;
    };
    std::vector<Pt> pts;
    std::size_t zeros = 0;
    bool seen = false;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) {
            if (!seen) ++zeros;
            continue;
        }
        seen = true;
        pts.push_back({static_cast<long>(i), Scalar(*valuation(coeffs[i], p))});
    }
    if (pts.empty()) fail(Errc::ZeroPolynomial, "newton_root_radii of the zero polynomial");

    std::vector<Pt> hull;
    for (const auto& q : pts) {
        while (hull.size() >= 2) {
            const auto& o = hull[hull.size() - 2];
            const auto& a = hull.back();
            const Scalar cross = Scalar(a.x - o.x) * (q.y - o.y) - (a.y - o.y) * Scalar(q.x - o.x);
            if (cross > 0) break;
            hull.pop_back();
        }
        hull.push_back(q);
    }

    std::vector<PValue> out(zeros, PValue::zero());
    for (std::size_t i = 1; i < hull.size(); ++i) {
        const long len = hull[i].x - hull[i - 1].x;
        const Scalar slope = (hull[i].y - hull[i - 1].y) / Scalar(len);
        for (long k = 0; k < len; ++k) out.push_back(PValue::power(slope));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Scalar parse_scalar(std::string_view text) {
    std::string s(text);
    if (s.empty()) fail(Errc::InvalidArgument, "empty rational");
    for (char c : s) {
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/' || c == '+'))
            fail(Errc::InvalidArgument, "malformed rational '" + s + "'");
    }
    Scalar q;
    if (q.set_str(s, 10) != 0) fail(Errc::InvalidArgument, "malformed rational '" + s + "'");
    if (q.get_den() == 0) fail(Errc::InvalidArgument, "zero denominator in '" + s + "'");
    q.canonicalize();
    return q;
}

std::string scalar_str(const Scalar& x) {
    Scalar c = x;
    c.canonicalize();
    return c.get_str();
}

std::size_t bit_size(const Scalar& x) {
    return mpz_sizeinbase(x.get_num_mpz_t(), 2) + mpz_sizeinbase(x.get_den_mpz_t(), 2);
}

}  // namespace nadyn
