#include "nadyn/berkovich.hpp"
#include "nadyn/error.hpp"
#include "support.hpp"

#include <doctest.h>

using namespace nadyn;
using testing::pw;

namespace {

// Oracle: max of |P(t)| over sampled rationals t with |t - a| <= r, where
// t = a + u p^k with u a random integer. Equals the sup norm once a sample
// avoids the residue classes of the roots.
PValue sampled_sup(const Poly& P, const Scalar& a, long k, const Prime& p, std::mt19937_64& rng,
                   int samples) {
    std::uniform_int_distribution<long> u(-1000, 1000);
    PValue best = PValue::zero();
    for (int i = 0; i < samples; ++i) {
        const Scalar t = a + Scalar(u(rng)) * pw(p.value(), k);
        best = std::max(best, norm(P(t), p));
    }
    return best;
}

}  // namespace

TEST_CASE("gauss_norm examples") {
    const Prime p(3);
    CHECK(gauss_norm(Poly{0, 1}, DiskPoint::make(Chart::Z, 0, PValue::power(-1), p)) ==
          PValue::power(-1));
    CHECK(gauss_norm(Poly::constant(5), DiskPoint::gauss(p)) == PValue::one());
    CHECK(gauss_norm(Poly::constant(5), DiskPoint::classical(Scalar(1, 2), p)) == PValue::one());
    const Poly P{Scalar(-1, 9), 0, 1};
    CHECK(gauss_norm(P, Disk{Scalar(1, 3), PValue::power(-2)}, p) == PValue::power(-1));
    std::mt19937_64 rng(21);
    CHECK(sampled_sup(P, Scalar(1, 3), 2, p, rng, 1000) == PValue::power(-1));
}

TEST_CASE("gauss_norm agrees with sampled sup") {
    std::mt19937_64 rng(22);
    for (long pv : {3, 5}) {
        const Prime p(pv);
        for (int i = 0; i < 60; ++i) {
            const Poly P = testing::random_unit_poly(rng, pv, 4);
            const Scalar a = testing::random_scalar(rng, pv, 0, 2);
            std::uniform_int_distribution<long> k(0, 3);
            const long kk = k(rng);
            CHECK(gauss_norm(P, Disk{a, PValue::power(-kk)}, p) ==
                  sampled_sup(P, a, kk, p, rng, 400));
        }
    }
}

TEST_CASE("gauss_norm is a multiplicative semi-norm") {
    std::mt19937_64 rng(23);
    const Prime p(3);
    for (int i = 0; i < 200; ++i) {
        const auto x = testing::random_point(rng, p, 4, false);
        const Poly P = testing::random_unit_poly(rng, 3), Q = testing::random_unit_poly(rng, 3);
        CHECK(gauss_norm(P * Q, x) == gauss_norm(P, x) * gauss_norm(Q, x));
        CHECK(gauss_norm(P + Q, x) <= std::max(gauss_norm(P, x), gauss_norm(Q, x)));
        if (x.is_classical()) CHECK(gauss_norm(P, x) == norm(P(x.center()), p));
    }
}

TEST_CASE("point_eq examples") {
    const Prime p(3);
    auto Z = [&](Scalar a, PValue r) { return DiskPoint::make(Chart::Z, a, r, p); };
    CHECK(point_eq(Z(0, PValue::power(-1)), Z(3, PValue::power(-1))));
    CHECK_FALSE(point_eq(Z(0, PValue::zero()), Z(3, PValue::zero())));
    CHECK(point_eq(Z(0, PValue::one()), Z(1, PValue::one())));
    CHECK(Z(0, PValue::power(-1)) == Z(3, PValue::power(-1)));
}

TEST_CASE("point_leq examples") {
    const Prime p(3);
    auto Z = [&](Scalar a, PValue r) { return DiskPoint::make(Chart::Z, a, r, p); };
    CHECK(point_leq(Z(0, PValue::zero()), Z(0, PValue::one())));
    CHECK_FALSE(point_leq(Z(0, PValue::one()), Z(0, PValue::zero())));
    CHECK(point_leq(Z(1, PValue::power(-2)), Z(4, PValue::power(-1))));
    CHECK_THROWS_AS(point_leq(Z(0, PValue::zero()), DiskPoint::infinity(p)), Error);
}

TEST_CASE("points are validated and canonical") {
    const Prime p(3);
    CHECK_THROWS_AS(DiskPoint::make(Chart::Z, Scalar(1, 3), PValue::zero(), p), Error);
    CHECK_THROWS_AS(DiskPoint::make(Chart::Z, 0, PValue::power(1), p), Error);
    // |w| = 1 moves to the z chart.
    const auto w = DiskPoint::make(Chart::W, 2, PValue::zero(), p);
    CHECK(w.chart() == Chart::Z);
    CHECK(w.center() == Scalar(1, 2));
    CHECK(DiskPoint::classical(9, p).chart() == Chart::Z);
    const auto big = DiskPoint::classical(Scalar(1, 9), p);
    CHECK(big.chart() == Chart::W);
    CHECK(big.center() == 9);
    CHECK(DiskPoint::make(Chart::W, 5, PValue::one(), p).is_gauss());
}

TEST_CASE("point_eq is an equivalence and point_leq an order") {
    std::mt19937_64 rng(24);
    const Prime p(3);
    for (int i = 0; i < 500; ++i) {
        const auto x = testing::random_point(rng, p, 2, false);
        const auto y = testing::random_point(rng, p, 2, false);
        const auto z = testing::random_point(rng, p, 2, false);
        CHECK(point_eq(x, x));
        CHECK(point_eq(x, y) == point_eq(y, x));
        CHECK(point_eq(x, y) == (x == y));
        if (point_eq(x, y) && point_eq(y, z)) CHECK(point_eq(x, z));
        if (point_leq(x, y) && point_leq(y, x)) CHECK(point_eq(x, y));
        if (point_leq(x, y) && point_leq(y, z)) CHECK(point_leq(x, z));
        if (point_leq(x, y)) {
            const Poly P = testing::random_unit_poly(rng, 3);
            CHECK(gauss_norm(P, x) <= gauss_norm(P, y));
        }
    }
}

TEST_CASE("disk point json round trip") {
    const Prime p(3);
    const auto x = DiskPoint::make(Chart::W, Scalar(3, 2), PValue::power(-2), p);
    const auto j = to_json(x);
    CHECK(j["chart"] == "W");
    CHECK(disk_point_from_json(j, p) == x);
    const auto y = disk_point_from_json(nlohmann::json::parse(R"({"chart":"Z","center":"1/2"})"), p);
    CHECK(y == DiskPoint::classical(Scalar(1, 2), p));
    try {
        disk_point_from_json(nlohmann::json::parse(R"({"chart":"Q","center":"1"})"), p);
        FAIL("expected schema error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Schema);
    }
}
