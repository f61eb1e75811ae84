#pragma once

// Classical reduction and eps-reduction of disk points.
//
// The eps-reduction of zeta(a, r) is the ideal {f : |f(zeta(a,r))| < eps} of
// A_eps = A°/{rho < eps}; it is handled here only through that membership
// predicate and the resulting equivalence on points.

#include "nadyn/berkovich.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace nadyn {

/// An eps-reduction class, named by one of its points.
struct EpsClass {
    PValue eps;
    DiskPoint representative;
};

/// red_eps(x) == red_eps(y) iff x == y, or both radii < eps and
/// |a - alpha| < eps. ChartMismatch across charts; InvalidArgument unless
/// 0 < eps <= p^0.
bool eps_reduce_equal(const DiskPoint& x, const DiskPoint& y, const PValue& eps);

/// f in red_eps(x), i.e. |f(x)| < eps. f must satisfy rho(f) <= 1 on the
/// unit disk (SupNormExceedsOne otherwise).
bool ideal_member(const Poly& f, const DiskPoint& x, const PValue& eps);

/// For |fg(x)| < eps <= |f(x)|, the smallest n >= 1 with |g^n(x)| < eps.
/// std::nullopt when the hypothesis fails (the pair does not test primarity).
std::optional<long> primary_witness(const DiskPoint& x, const PValue& eps, const Poly& f,
                                    const Poly& g);

/// red_1 on the z chart: the closed point of the special fiber labelled by the
/// residue of the center (r < 1), or the generic point (Gauss point).
struct ClassicalReduction {
    bool generic = false;
    Integer residue;

    bool operator==(const ClassicalReduction&) const = default;
    std::string str() const;
};

ClassicalReduction red_classical(const DiskPoint& x);

/// String key with key(x) == key(y) iff eps_reduce_equal(x, y, eps) (same chart).
std::string eps_class_key(const DiskPoint& x, const PValue& eps);

/// Classes of the sample under eps-reduction, as index lists in first-seen
/// order. Points in different charts never share a class.
std::vector<std::vector<std::size_t>> partition_by_eps(std::span<const DiskPoint> sample,
                                                       const PValue& eps);

}  // namespace nadyn
