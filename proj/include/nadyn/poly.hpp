#pragma once

#include "nadyn/field.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace nadyn {

/// Dense univariate polynomial over Q; coeffs()[i] multiplies T^i.
/// The representation is kept trimmed (no zero leading coefficient), so the
/// zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Scalar> coeffs);
    Poly(std::initializer_list<Scalar> coeffs);

    static Poly constant(const Scalar& c);
    /// T^k
    static Poly monomial(std::size_t k, const Scalar& c = 1);

    const std::vector<Scalar>& coeffs() const noexcept { return c_; }
    bool is_zero() const noexcept { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    Scalar coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Scalar(0); }
    const Scalar& leading() const { return c_.back(); }

    Scalar operator()(const Scalar& t) const;

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Scalar& s) const;
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    Poly pow(unsigned n) const;
    /// P(T + a), exact Taylor recentering by repeated synthetic division.
    Poly shifted(const Scalar& a) const;
    /// P(Q(T)).
    Poly compose(const Poly& inner) const;
    Poly derivative() const;

    /// Max over coefficients of |c_i|_p (Zero for the zero polynomial).
    PValue coefficient_norm(const Prime& p) const;

    bool operator==(const Poly& o) const { return c_ == o.c_; }

    std::string str(const char* var = "T") const;

private:
    void trim();
    std::vector<Scalar> c_;
};

/// Euclidean division over Q; ZeroPolynomial on a zero divisor.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
/// Monic gcd over Q (zero iff both inputs are zero).
Poly gcd(const Poly& a, const Poly& b);

}  // namespace nadyn
