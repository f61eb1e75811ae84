#pragma once

// Self-maps of P^1 in homogeneous coordinates [Z : W].

#include "nadyn/berkovich.hpp"

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace nadyn {

/// A binary form of degree d as coefficients c[i] of Z^i W^(d-i).
using BinaryForm = std::vector<Scalar>;

/// (F : G) with gcd(F, G) = 1, integer coefficients of content 1 and a fixed
/// sign (the first nonzero coefficient, reading F then G from Z^d down, is
/// positive).
class RationalMapP1 {
public:
    /// Removes the common factor (including powers of W) and clears to
    /// coprime integers. F and G must have the same length d + 1, d >= 1.
    /// DegenerateMap when the common factor has degree d.
    static RationalMapP1 normalize(const BinaryForm& F, const BinaryForm& G, const Prime& p);
    /// z -> P(z) as (P(Z/W) W^d : W^d).
    static RationalMapP1 polynomial(const Poly& P, const Prime& p);

    unsigned degree() const noexcept { return static_cast<unsigned>(F_.size() - 1); }
    const BinaryForm& F() const noexcept { return F_; }
    const BinaryForm& G() const noexcept { return G_; }
    const Prime& prime() const noexcept { return p_; }

    /// Dehomogenized numerator and denominator in the given chart:
    /// (F(t,1), G(t,1)) on Z and (F(1,t), G(1,t)) on W.
    std::pair<Poly, Poly> chart_pair(Chart c) const;

    bool operator==(const RationalMapP1& o) const;
    std::string str() const;

private:
    RationalMapP1(BinaryForm F, BinaryForm G, Prime p)
        : F_(std::move(F)), G_(std::move(G)), p_(p) {}

    BinaryForm F_, G_;
    Prime p_;
};

/// f o g, normalized. Both maps must share the prime (InvalidArgument).
RationalMapP1 compose(const RationalMapP1& f, const RationalMapP1& g);
/// f^n for n >= 1.
RationalMapP1 iterate(const RationalMapP1& f, unsigned n);

/// Res(F, G) as the Sylvester determinant of the two forms.
Integer resultant(const RationalMapP1& f);
/// v_p(Res(F, G)) == 0.
bool good_reduction_test(const RationalMapP1& f);
/// Degree of the reduction mod p after removing the common factor of the
/// reduced forms.
unsigned reduced_degree(const RationalMapP1& f);

/// Image of zeta(a, r) under a polynomial self-map of the unit disk:
/// zeta(f(a), max_{i>=1} |c_i| r^i). DiskNotPreserved when rho(f) > 1,
/// ChartMismatch for chart-W points.
DiskPoint image_disk(const Poly& f, const DiskPoint& x);

/// Image of x under f. Positive-radius points need a disk free of poles of
/// F/G or of zeros of F (then G/F is used in the other chart); PoleInDisk
/// otherwise.
DiskPoint rational_eval(const RationalMapP1& f, const DiskPoint& x);

struct PreimageNode {
    Scalar value;
    unsigned level = 0;
    /// Product of the local ramification indices along the path.
    unsigned multiplicity = 1;
    /// Set when value + c has no square root (the branch stops here).
    bool pruned = false;
    std::string prune_reason;
    long parent = -1;
};

struct PreimageTree {
    std::vector<PreimageNode> nodes;
    unsigned depth = 0;

    std::vector<const PreimageNode*> leaves() const;
    std::size_t pruned_count() const;
};

/// Backward orbits of z -> z^2 - c from target, `depth` levels deep, each
/// square root taken by hensel_sqrt at `precision`. Children are listed
/// minus-branch first.
PreimageTree preimage_tree(const Scalar& c, const Scalar& target, unsigned depth,
                           unsigned precision, const Prime& p);

/// v_p(f^n(s) - target) for f = z^2 - c; nullopt when exact.
Valuation backward_orbit_error(const Scalar& c, const Scalar& target, unsigned n,
                               const Scalar& s, const Prime& p);

/// {"p":3,"type":"p1","F":[["1","2,0"]],"G":[["1","0,2"]]}
nlohmann::json to_json(const RationalMapP1& f);
RationalMapP1 p1_map_from_json(const nlohmann::json& j);

}  // namespace nadyn
