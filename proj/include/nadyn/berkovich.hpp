#pragma once

// Berkovich points zeta(a, r) of the closed unit disk, and of P^1 through its
// two unit-disk charts (z and w = 1/z).

#include "nadyn/field.hpp"
#include "nadyn/poly.hpp"

#include <json.hpp>

#include <string>

namespace nadyn {

enum class Chart { Z, W };

const char* chart_name(Chart c) noexcept;

/// A closed disk of the affine line with arbitrary center and radius.
/// radius == Zero is the single point {center}.
struct Disk {
    Scalar center;
    PValue radius;
};

/// zeta(a, r) in one chart of P^1. Invariants: |a| <= 1, r <= p^0.
///
/// Points are canonical: chart-W points on |w| = 1 are moved to chart Z, the
/// Gauss point always lives in chart Z, and for r > 0 the center is replaced
/// by its residue modulo p^ceil(-log_p r). Two canonical points describe the
/// same semi-norm iff they compare equal.
class DiskPoint {
public:
    /// Validates (InvalidPoint) and canonicalizes.
    static DiskPoint make(Chart chart, const Scalar& center, const PValue& radius, const Prime& p);
    static DiskPoint gauss(const Prime& p);
    /// Type I point for z in the affine line, in whichever chart holds it.
    static DiskPoint classical(const Scalar& z, const Prime& p);
    static DiskPoint infinity(const Prime& p);

    Chart chart() const noexcept { return chart_; }
    const Scalar& center() const noexcept { return center_; }
    const PValue& radius() const noexcept { return radius_; }
    const Prime& prime() const noexcept { return p_; }
    bool is_classical() const noexcept { return radius_.is_zero(); }
    bool is_gauss() const { return radius_ == PValue::one(); }
    Disk disk() const { return {center_, radius_}; }

    bool operator==(const DiskPoint& o) const;

    std::string str() const;

private:
    DiskPoint(Chart c, Scalar a, PValue r, Prime p)
        : chart_(c), center_(std::move(a)), radius_(std::move(r)), p_(p) {}

    Chart chart_;
    Scalar center_;
    PValue radius_;
    Prime p_;
};

/// sup over the disk of |P| = max_i |c_i| r^i, with P = sum c_i (T - a)^i.
PValue gauss_norm(const Poly& P, const Disk& disk, const Prime& p);
/// Same, for a point in the chart that P is written in.
PValue gauss_norm(const Poly& P, const DiskPoint& x);

/// Same chart, same radius, |a - alpha| <= r.
bool point_eq(const DiskPoint& x, const DiskPoint& y);
/// Disk containment; ChartMismatch across charts.
bool point_leq(const DiskPoint& x, const DiskPoint& y);

nlohmann::json to_json(const DiskPoint& x);
/// Schema errors raise Errc::Schema.
DiskPoint disk_point_from_json(const nlohmann::json& j, const Prime& p);

}  // namespace nadyn
