#pragma once

// Integer polynomials in X, Y, Z with sparse monomial storage.

#include "nadyn/field.hpp"

#include <array>
#include <map>
#include <string>

namespace nadyn {

using Exponent = std::array<unsigned, 3>;

class MPoly {
public:
    MPoly() = default;
    static MPoly monomial(const Exponent& e, const Integer& c = 1);
    static MPoly constant(const Integer& c) { return monomial({0, 0, 0}, c); }

    const std::map<Exponent, Integer>& terms() const noexcept { return t_; }
    bool is_zero() const noexcept { return t_.empty(); }
    /// Total degree; -1 for zero.
    long degree() const;
    bool is_homogeneous() const;
    bool is_monomial() const { return t_.size() == 1; }
    std::size_t max_coeff_bits() const;

    MPoly operator+(const MPoly& o) const;
    MPoly operator-(const MPoly& o) const;
    MPoly operator*(const MPoly& o) const;
    MPoly operator*(const Integer& c) const;
    bool operator==(const MPoly& o) const = default;

    /// Exact division; InvalidArgument when d does not divide this.
    MPoly divide(const MPoly& d) const;
    Integer content() const;

    /// this(g0, g1, g2).
    MPoly substitute(const std::array<MPoly, 3>& g) const;

    std::string str() const;

    void add_term(const Exponent& e, const Integer& c);

private:
    std::map<Exponent, Integer> t_;
};

/// Greatest common divisor in Z[X, Y, Z] of homogeneous polynomials, up to
/// sign (normalized to positive leading coefficient in lex order).
MPoly gcd(const MPoly& a, const MPoly& b);

}  // namespace nadyn
