#include "nadyn/entropy.hpp"
#include "nadyn/error.hpp"
#include "nadyn/reduction.hpp"
#include "support.hpp"

#include <doctest.h>

#include <cmath>
#include <set>

using namespace nadyn;
using testing::frac;

namespace {

const Prime p3(3);

MPoly mono(unsigned a, unsigned b, unsigned c) { return MPoly::monomial({a, b, c}); }

PlaneMap cremona() { return PlaneMap::normalize({mono(0, 1, 1), mono(1, 0, 1), mono(1, 1, 0)}); }

RationalMapP1 square_map() { return RationalMapP1::polynomial(Poly{0, 0, 1}, p3); }

std::vector<std::vector<std::size_t>> random_partition(std::mt19937_64& rng, std::size_t m, std::size_t k) {
    std::uniform_int_distribution<std::size_t> pick(0, k - 1);
    std::vector<std::vector<std::size_t>> cells(k);
    for (std::size_t a = 0; a < m; ++a) cells[a < k ? a : pick(rng)].push_back(a);
    return cells;
}

/// Split every cell of a partition in two at random.
std::vector<std::vector<std::size_t>> refine(std::mt19937_64& rng, const std::vector<std::vector<std::size_t>>& cells) {
    std::vector<std::vector<std::size_t>> out;
    std::bernoulli_distribution coin(0.5);
    for (const auto& c : cells) {
        std::vector<std::size_t> a, b;
        for (auto x : c) (coin(rng) ? a : b).push_back(x);
        if (!a.empty()) out.push_back(a);
        if (!b.empty()) out.push_back(b);
    }
    return out;
}

std::vector<long> random_system(std::mt19937_64& rng, std::size_t m, bool partial) {
    std::uniform_int_distribution<long> val(partial ? -1 : 0, static_cast<long>(m) - 1);
    std::vector<long> f(m);
    for (auto& v : f) v = val(rng);
    return f;
}

// Oracle: pairwise separation straight from the definition.
bool pairwise_separated(const OrbitTable& t, const std::vector<std::size_t>& s, std::size_t n, const Entourage& E) {
    for (std::size_t a = 0; a < s.size(); ++a)
        for (std::size_t b = a + 1; b < s.size(); ++b) {
            bool sep = false;
            for (std::size_t k = 0; k <= n; ++k)
                sep |= !E.close(static_cast<std::size_t>(t.orbit[s[a]][k]), static_cast<std::size_t>(t.orbit[s[b]][k]));
            if (!sep) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("partition entourages") {
    const auto E = Entourage::from_partition({{0, 3}, {1, 4}, {2}}, 5);
    CHECK(E.block_count() == 3);
    CHECK(E.close(0, 3));
    CHECK(E.close(3, 3));
    CHECK_FALSE(E.close(0, 1));
    const auto full = Entourage::from_partition({{0, 1, 2}}, 3);
    for (std::size_t a = 0; a < 3; ++a)
        for (std::size_t b = 0; b < 3; ++b) CHECK(full.close(a, b));
    try {
        Entourage::from_partition({{0, 1}, {1, 2}}, 3);
        FAIL("expected OverlappingCells");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::OverlappingCells);
    }
    try {
        Entourage::from_partition({{0}}, 2);
        FAIL("expected UncoveredPoint");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::UncoveredPoint);
    }
    const auto cover = Entourage::from_cells({{0, 1}, {1, 2}}, 3);
    CHECK(cover.close(0, 1));
    CHECK_FALSE(cover.close(0, 2));
    CHECK_FALSE(cover.square_within(cover));
    CHECK(cover.square_within(full));
}

TEST_CASE("eps entourage blocks match partition_by_eps") {
    std::mt19937_64 rng(41);
    std::vector<DiskPoint> pts;
    std::set<std::string> seen;
    while (pts.size() < 50) {
        auto x = testing::random_point(rng, p3);
        if (seen.insert(x.str()).second) pts.push_back(x);
    }
    const PValue eps = PValue::power(-1);
    const auto cells = partition_by_eps(pts, eps);
    const auto E = eps_entourage(pts, eps);
    CHECK(E.block_count() == cells.size());
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b)
            if (pts[a].chart() == pts[b].chart())
                CHECK(E.close(a, b) == eps_reduce_equal(pts[a], pts[b], eps));
            else
                CHECK_FALSE(E.close(a, b));
}

TEST_CASE("z^2 on {0, 1, 3} with residue cells") {
    const std::vector<DiskPoint> sample{DiskPoint::classical(0, p3), DiskPoint::classical(1, p3),
                                        DiskPoint::classical(3, p3)};
    const auto d = disk_orbit_table(square_map(), sample, 2);
    const auto E = eps_entourage(d.registry, PValue::one());
    CHECK(separated_set(d.table, 0, E).size() == 2);
    CHECK(separated_set(d.table, 2, E).size() == 2);
    CHECK(covering_number(d.table, 0, E) == 2);
    try {
        separated_set(d.table, 3, E);
        FAIL("expected HorizonTooShort");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::HorizonTooShort);
    }
}

TEST_CASE("identity map keeps S constant") {
    std::mt19937_64 rng(42);
    std::vector<long> id(12);
    for (long i = 0; i < 12; ++i) id[static_cast<std::size_t>(i)] = i;
    const auto t = finite_orbit_table(id, 6);
    const auto cells = random_partition(rng, 12, 4);
    const auto E = Entourage::from_partition(cells, 12);
    for (std::size_t n = 0; n <= 6; ++n) {
        CHECK(separated_set(t, n, E).size() == 4);
        CHECK(covering_number(t, n, E) == 4);
    }
    CHECK(covering_number(t, 3, Entourage::from_partition({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11}}, 12)) == 1);
}

TEST_CASE("preimage-tree leaves of z^2 - 1/9 are 2^n separated") {
    const unsigned depth = 8;
    const auto tree = preimage_tree(frac(1, 9), 0, depth, 24, p3);
    std::vector<DiskPoint> sample;
    for (auto* l : tree.leaves()) sample.push_back(DiskPoint::classical(l->value, p3));
    REQUIRE(sample.size() == 256);
    const auto f = RationalMapP1::polynomial(Poly{frac(-1, 9), 0, 1}, p3);
    const auto d = disk_orbit_table(f, sample, depth - 1);
    const auto E = eps_entourage(d.registry, PValue::power(-1));
    const auto rows = entropy_series(d.table, E, depth);
    std::vector<std::size_t> S;
    for (const auto& r : rows) {
        CHECK(r.S == (std::size_t{1} << r.n));
        CHECK(r.R == r.S);
        CHECK(pairwise_separated(d.table, separated_set(d.table, r.n - 1, E), r.n - 1, E));
        S.push_back(r.S);
    }
    const auto rate = entropy_rate(S);
    CHECK(std::abs(rate.rate - std::log(2.0)) < 1e-12);
    CHECK(std::abs(rate.average - std::log(2.0)) < 1e-12);
}

TEST_CASE("entropy_rate examples") {
    CHECK(entropy_rate({5, 5, 5, 5}).rate == 0);
    std::vector<std::size_t> pow2;
    for (int n = 1; n <= 10; ++n) pow2.push_back(std::size_t{1} << n);
    CHECK(std::abs(entropy_rate(pow2).rate - std::log(2.0)) < 1e-12);
    CHECK_THROWS_AS(entropy_rate({1, 2}), Error);
}

TEST_CASE("good reduction keeps the sampled rate at zero") {
    std::mt19937_64 rng(43);
    const auto f = RationalMapP1::polynomial(Poly{0, 3, 1}, p3);
    std::vector<DiskPoint> sample;
    std::uniform_int_distribution<long> num(-40, 40);
    for (int i = 0; i < 60; ++i) sample.push_back(DiskPoint::classical(frac(num(rng), 1), p3));
    const auto d = disk_orbit_table(f, sample, 9);
    const auto E = eps_entourage(d.registry, PValue::power(-1));
    std::vector<std::size_t> S;
    for (const auto& r : entropy_series(d.table, E, 10)) S.push_back(r.S);
    CHECK(entropy_rate(S).rate <= 0.01);
}

TEST_CASE("Cremona admissible mask") {
    const auto mask = admissible_mask(cremona(), {{1, 0, 0}, {1, 2, 3}}, 6);
    CHECK(mask[0][0]);
    for (std::size_t k = 1; k <= 6; ++k) CHECK_FALSE(mask[0][k]);
    for (std::size_t k = 0; k <= 6; ++k) CHECK(mask[1][k]);
    const auto morph = PlaneMap::normalize({mono(2, 0, 0), mono(0, 2, 0), mono(0, 0, 2)});
    for (const auto& row : admissible_mask(morph, {{1, 0, 0}, {1, -1, 2}, {0, 0, 5}}, 4))
        for (bool b : row) CHECK(b);
}

TEST_CASE("plane orbits use primitive representatives") {
    const auto t = plane_orbit_table(cremona(), {{2, 4, 6}}, 2);
    REQUIRE(t.table.orbit[0][0] >= 0);
    CHECK(t.registry[static_cast<std::size_t>(t.table.orbit[0][0])] == ProjectivePoint{1, 2, 3});
    // sigma[1:2:3] = [6:3:2], sigma^2 = identity.
    CHECK(t.registry[static_cast<std::size_t>(t.table.orbit[0][1])] == ProjectivePoint{6, 3, 2});
    CHECK(t.table.orbit[0][2] == t.table.orbit[0][0]);
    const auto E = reduction_entourage({{1, 2, 3}, {4, 5, 6}, {2, 0, 1}, {-1, 0, 1}}, p3);
    CHECK(E.close(0, 1));
    CHECK(E.close(2, 3));
    CHECK_FALSE(E.close(0, 2));
}

TEST_CASE("chain inequality on random exhaustive systems") {
    std::mt19937_64 rng(44);
    std::uniform_int_distribution<std::size_t> size(2, 15), blocks(1, 5), horizon(0, 4);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = size(rng);
        const auto coarse = random_partition(rng, m, std::min(m, blocks(rng)));
        const auto E = Entourage::from_partition(coarse, m);
        const auto E_fine = Entourage::from_partition(refine(rng, coarse), m);
        const auto t = finite_orbit_table(random_system(rng, m, trial % 3 == 0), 4);
        const std::size_t n = horizon(rng);
        const auto c = chain_inequality_check(t, n, E, E_fine);
        CHECK(c.holds);
        CHECK(covering_number(t, n, E) >= c.R);
        CHECK(separated_set(t, n, E).size() <= c.S);
        CHECK(pairwise_separated(t, separated_set(t, n, E), n, E));
        const auto same = chain_inequality_check(t, n, E, E);
        CHECK(same.R == same.S);
    }
    const auto t = finite_orbit_table({1, 2, 0}, 2);
    try {
        chain_inequality_check(t, 1, Entourage::from_partition({{0}, {1}, {2}}, 3),
                               Entourage::from_cells({{0, 1}, {1, 2}}, 3));
        FAIL("expected CompositionNotContained");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::CompositionNotContained);
    }
    std::vector<long> big(16, 0);
    try {
        exact_separated_number(finite_orbit_table(big, 1), 1, Entourage::from_partition({{0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15}}, 16));
        FAIL("expected SizeBound");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SizeBound);
    }
}

TEST_CASE("monotonicity of S") {
    std::mt19937_64 rng(45);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t m = 12;
        const auto coarse = random_partition(rng, m, 4);
        const auto E = Entourage::from_partition(coarse, m);
        const auto E_fine = Entourage::from_partition(refine(rng, coarse), m);
        const auto f = random_system(rng, m, trial % 2 == 0);
        const auto t = finite_orbit_table(f, 5);
        // n and refinement on exact values.
        for (std::size_t n = 0; n < 5; ++n) {
            if (trial % 2) CHECK(exact_separated_number(t, n + 1, E) >= exact_separated_number(t, n, E));
            CHECK(exact_separated_number(t, n, E_fine) >= exact_separated_number(t, n, E));
        }
        // Greedy S never shrinks when the sample grows.
        OrbitTable sub = t;
        sub.orbit.resize(8);
        CHECK(separated_set(t, 3, E).size() >= separated_set(sub, 3, E).size());
        // Masking points out never increases S.
        OrbitTable masked = t;
        masked.orbit[0].assign(6, -1);
        CHECK(exact_separated_number(masked, 3, E) <= exact_separated_number(t, 3, E));
    }
}
