#pragma once

// Exact rationals with p-adic valuation semantics.
//
// Q with |.|_p stands in for Q_p: every scalar is an exact rational and every
// absolute value is an exact element of p^Q u {0}, so no norm is ever rounded.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nadyn {

using Scalar = mpq_class;
using Integer = mpz_class;

/// A rational prime, checked at construction.
class Prime {
public:
    explicit Prime(std::int64_t p);

    std::int64_t value() const noexcept { return p_; }
    Integer integer() const { return Integer(static_cast<long>(p_)); }
    bool odd() const noexcept { return p_ != 2; }

    friend bool operator==(Prime, Prime) = default;

private:
    std::int64_t p_;
};

/// p-adic valuation; std::nullopt stands for +infinity (the valuation of 0).
using Valuation = std::optional<long>;

/// A non-Archimedean absolute value: either 0 or p^exponent with an exact
/// rational exponent. Ordered with Zero below every p^q; products add
/// exponents.
class PValue {
public:
    static PValue zero() { return PValue(); }
    static PValue power(const Scalar& exponent) { return PValue(exponent); }
    static PValue one() { return PValue(Scalar(0)); }

    bool is_zero() const noexcept { return zero_; }
    /// Exponent q with |x| = p^q. Throws InvalidArgument on Zero.
    const Scalar& exponent() const;

    PValue operator*(const PValue& o) const;
    PValue pow(long n) const;
    /// 1 / |x|; InvalidArgument for Zero.
    PValue inverse() const;

    std::strong_ordering operator<=>(const PValue& o) const;
    bool operator==(const PValue& o) const;

    /// "0" or "p^q" with q in lowest terms ("p^-2", "p^1/2").
    std::string str() const;
    static PValue parse(std::string_view text);

    /// Magnitude as a double for reporting only; never used in comparisons.
    double approx(const Prime& p) const;

private:
    PValue() : zero_(true) {}
    explicit PValue(Scalar q) : zero_(false), exp_(std::move(q)) { exp_.canonicalize(); }

    bool zero_;
    Scalar exp_;
};

/// v_p of an integer; nullopt for 0.
Valuation valuation(const Integer& x, const Prime& p);
/// v_p of a rational; nullopt for 0.
Valuation valuation(const Scalar& x, const Prime& p);
/// |x|_p = p^(-v_p(x)).
PValue norm(const Scalar& x, const Prime& p);

/// x with denominator coprime to p, reduced to [0, p^k).
/// InvalidArgument when p divides the denominator.
Integer residue_mod_power(const Scalar& x, const Prime& p, unsigned k);

/// p-adic square root approximation.
///
/// Preconditions: p odd, v_p(a) even, the unit part of a is a square mod p.
/// When a is a square in Q the exact positive root is returned. Otherwise the
/// result s = u * p^(v/2) with u in [0, p^m), u mod p in {1..(p-1)/2}, and
/// v_p(s^2 - a) >= m + v_p(a). a = 0 returns 0.
Scalar hensel_sqrt(const Scalar& a, const Prime& p, unsigned precision);

/// Absolute values of the roots over an algebraic closure, with
/// multiplicity, read off the lower convex hull of (i, v_p(c_i)).
/// Roots at 0 are reported as PValue::zero(). Result is sorted ascending.
/// coeffs[i] is the coefficient of T^i.
std::vector<PValue> newton_root_radii(const std::vector<Scalar>& coeffs, const Prime& p);

/// Exact rational parsing of "num/den" or "num"; InvalidArgument on junk.
Scalar parse_scalar(std::string_view text);
/// Canonical "num/den" (den omitted when 1).
std::string scalar_str(const Scalar& x);

/// Bit size of numerator plus denominator, used by symbolic budgets.
std::size_t bit_size(const Scalar& x);

}  // namespace nadyn
