#include "nadyn/berkovich.hpp"

#include "nadyn/error.hpp"

#include <json.hpp>

namespace nadyn {

namespace {

// Smallest K >= 0 with p^-K <= r, i.e. K = ceil(-q) for r = p^q.
unsigned center_digits(const PValue& r) {
    const Scalar neg = -r.exponent();
    Integer k;
    mpz_cdiv_q(k.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    return static_cast<unsigned>(k.get_ui());
}

}  // namespace

const char* chart_name(Chart c) noexcept { return c == Chart::Z ? "Z" : "W"; }

DiskPoint DiskPoint::make(Chart chart, const Scalar& center, const PValue& radius, const Prime& p) {
    if (radius > PValue::one())
        fail(Errc::InvalidPoint, "radius " + radius.str() + " exceeds p^0");
    const PValue cn = norm(center, p);
    if (cn > PValue::one())
        fail(Errc::InvalidPoint, "center " + center.get_str() + " lies outside the unit disk");

    Chart c = chart;
    Scalar a = center;
    a.canonicalize();
    if (radius == PValue::one()) {
        c = Chart::Z;
        a = 0;
    } else if (c == Chart::W && cn == PValue::one()) {
        // |w| = 1 is the boundary annulus, stored in the z chart; inversion is
        // an isometry there so the radius is unchanged.
        c = Chart::Z;
        a = Scalar(1) / a;
    }
    if (!radius.is_zero()) a = Scalar(residue_mod_power(a, p, center_digits(radius)));
    return DiskPoint(c, std::move(a), radius, p);
}

DiskPoint DiskPoint::gauss(const Prime& p) {
    return make(Chart::Z, 0, PValue::one(), p);
}

DiskPoint DiskPoint::classical(const Scalar& z, const Prime& p) {
    if (norm(z, p) <= PValue::one()) return make(Chart::Z, z, PValue::zero(), p);
    return make(Chart::W, Scalar(1) / z, PValue::zero(), p);
}

DiskPoint DiskPoint::infinity(const Prime& p) {
    return make(Chart::W, 0, PValue::zero(), p);
}

bool DiskPoint::operator==(const DiskPoint& o) const {
    return p_ == o.p_ && chart_ == o.chart_ && radius_ == o.radius_ && center_ == o.center_;
}

std::string DiskPoint::str() const {
    return std::string("zeta_") + chart_name(chart_) + "(" + center_.get_str() + ", " +
           radius_.str() + ")";
}

PValue gauss_norm(const Poly& P, const Disk& disk, const Prime& p) {
    const Poly shifted = P.shifted(disk.center);
    PValue best = PValue::zero();
    const auto& c = shifted.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        best = std::max(best, norm(c[i], p) * disk.radius.pow(static_cast<long>(i)));
        if (disk.radius.is_zero()) break;
    }
    return best;
}

PValue gauss_norm(const Poly& P, const DiskPoint& x) {
    return gauss_norm(P, x.disk(), x.prime());
}

bool point_eq(const DiskPoint& x, const DiskPoint& y) {
    if (!(x.prime() == y.prime())) return false;
    return x.chart() == y.chart() && x.radius() == y.radius() &&
           norm(x.center() - y.center(), x.prime()) <= x.radius();
}

bool point_leq(const DiskPoint& x, const DiskPoint& y) {
    if (x.chart() != y.chart())
        fail(Errc::ChartMismatch, "point_leq across charts: " + x.str() + " vs " + y.str());
    return norm(x.center() - y.center(), x.prime()) <= y.radius() && x.radius() <= y.radius();
}

nlohmann::json to_json(const DiskPoint& x) {
    return {{"chart", chart_name(x.chart())},
            {"center", scalar_str(x.center())},
            {"radius", x.radius().str()}};
}

DiskPoint disk_point_from_json(const nlohmann::json& j, const Prime& p) {
    if (!j.is_object() || !j.contains("center") || !j["center"].is_string())
        fail(Errc::Schema, "disk point must be an object with a string 'center'");
    Chart chart = Chart::Z;
    if (j.contains("chart")) {
        const auto& c = j["chart"];
        if (c == "Z") chart = Chart::Z;
        else if (c == "W") chart = Chart::W;
        else fail(Errc::Schema, "chart must be \"Z\" or \"W\"");
    }
    PValue radius = PValue::zero();
    if (j.contains("radius")) {
        if (!j["radius"].is_string()) fail(Errc::Schema, "radius must be a string");
        try {
            radius = PValue::parse(j["radius"].get<std::string>());
        } catch (const Error& e) {
            fail(Errc::Schema, e.what());
        }
    }
    Scalar center;
    try {
        center = parse_scalar(j["center"].get<std::string>());
    } catch (const Error& e) {
        fail(Errc::Schema, e.what());
    }
    return DiskPoint::make(chart, center, radius, p);
}

}  // namespace nadyn
