#include "nadyn/reduction.hpp"

#include "nadyn/error.hpp"

#include <unordered_map>

namespace nadyn {

namespace {

void check_eps(const PValue& eps) {
    if (eps.is_zero() || eps > PValue::one())
        fail(Errc::InvalidArgument, "eps must satisfy 0 < eps <= p^0, got " + eps.str());
}

void check_unit_ball(const Poly& f, const Prime& p) {
    if (gauss_norm(f, DiskPoint::gauss(p)) > PValue::one())
        fail(Errc::SupNormExceedsOne, "rho(" + f.str() + ") > 1");
}

// |a - b| < p^e  <=>  v(a - b) >= floor(-e) + 1.
unsigned strict_digits(const PValue& eps) {
    const Scalar neg = -eps.exponent();
    Integer k;
    mpz_fdiv_q(k.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    return static_cast<unsigned>(k.get_ui()) + 1;
}

}  // namespace

bool eps_reduce_equal(const DiskPoint& x, const DiskPoint& y, const PValue& eps) {
    check_eps(eps);
    if (x.chart() != y.chart())
        fail(Errc::ChartMismatch, "eps-reduction across charts: " + x.str() + " vs " + y.str());
    if (point_eq(x, y)) return true;
    return x.radius() < eps && y.radius() < eps && norm(x.center() - y.center(), x.prime()) < eps;
}

bool ideal_member(const Poly& f, const DiskPoint& x, const PValue& eps) {
    check_eps(eps);
    check_unit_ball(f, x.prime());
    return gauss_norm(f, x) < eps;
}

std::optional<long> primary_witness(const DiskPoint& x, const PValue& eps, const Poly& f,
                                    const Poly& g) {
    check_eps(eps);
    check_unit_ball(f, x.prime());
    check_unit_ball(g, x.prime());
    if (!(gauss_norm(f * g, x) < eps) || gauss_norm(f, x) < eps) return std::nullopt;

    const PValue gx = gauss_norm(g, x);
    if (gx.is_zero()) return 1;
    // |g(x)| = p^q with q < 0 by multiplicativity; need n q < e.
    const Scalar ratio = eps.exponent() / gx.exponent();
    Integer fl;
    mpz_fdiv_q(fl.get_mpz_t(), ratio.get_num_mpz_t(), ratio.get_den_mpz_t());
    return fl.get_si() + 1;
}

std::string ClassicalReduction::str() const {
    return generic ? "Generic" : "Closed(" + residue.get_str() + ")";
}

ClassicalReduction red_classical(const DiskPoint& x) {
    if (x.chart() != Chart::Z)
        fail(Errc::ChartMismatch, "red_classical is defined on the z chart, got " + x.str());
    if (x.is_gauss()) return {true, 0};
    return {false, residue_mod_power(x.center(), x.prime(), 1)};
}

std::string eps_class_key(const DiskPoint& x, const PValue& eps) {
    check_eps(eps);
    std::string key = chart_name(x.chart());
    if (x.radius() < eps) {
        key += "|<|" + residue_mod_power(x.center(), x.prime(), strict_digits(eps)).get_str();
    } else {
        key += "|=|" + x.center().get_str() + "|" + x.radius().str();
    }
    return key;
}

std::vector<std::vector<std::size_t>> partition_by_eps(std::span<const DiskPoint> sample,
                                                       const PValue& eps) {
    std::vector<std::vector<std::size_t>> classes;
    std::unordered_map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        auto [it, fresh] = index.try_emplace(eps_class_key(sample[i], eps), classes.size());
        if (fresh) classes.emplace_back();
        classes[it->second].push_back(i);
    }
    return classes;
}

}  // namespace nadyn
