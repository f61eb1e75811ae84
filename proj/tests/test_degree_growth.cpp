#include "nadyn/degree_growth.hpp"
#include "nadyn/error.hpp"

#include <doctest.h>
#include <Eigen/Dense>

#include <cmath>
#include <random>

using namespace nadyn;

namespace {

Scalar frac(long a, long b) {
    Scalar q(a, b);
    q.canonicalize();
    return q;
}

MPoly mono(unsigned x, unsigned y, unsigned z, long c = 1) { return MPoly::monomial({x, y, z}, c); }

PlaneMap cremona() { return PlaneMap::normalize({mono(0, 1, 1), mono(1, 0, 1), mono(1, 1, 0)}); }
PlaneMap intro_map() { return PlaneMap::normalize({mono(1, 0, 1) + mono(0, 0, 2), mono(0, 2, 0), mono(0, 0, 2)}); }

std::array<Integer, 3> eval(const PlaneMap& f, const std::array<Integer, 3>& pt) {
    std::array<Integer, 3> out;
    for (int i = 0; i < 3; ++i) {
        Integer acc = 0;
        for (const auto& [e, c] : f.components()[i].terms()) {
            Integer t = c;
            for (int k = 0; k < 3; ++k)
                for (unsigned j = 0; j < e[k]; ++j) t *= pt[k];
            acc += t;
        }
        out[i] = acc;
    }
    return out;
}

bool proportional(const std::array<Integer, 3>& a, const std::array<Integer, 3>& b) {
    return a[0] * b[1] == a[1] * b[0] && a[0] * b[2] == a[2] * b[0] && a[1] * b[2] == a[2] * b[1];
}

MPoly random_form(std::mt19937_64& rng, unsigned d) {
    std::uniform_int_distribution<long> c(-4, 4);
    MPoly f;
    for (unsigned i = 0; i <= d; ++i)
        for (unsigned j = 0; i + j <= d; ++j) f.add_term({i, j, d - i - j}, c(rng));
    return f;
}

// Oracle: spectral radius of the k-th compound matrix, in double precision.
double compound_radius(const std::vector<std::vector<std::int64_t>>& A, std::size_t k) {
    const std::size_t d = A.size();
    std::vector<std::vector<std::size_t>> subsets;
    for (unsigned mask = 0; mask < (1u << d); ++mask)
        if (static_cast<std::size_t>(__builtin_popcount(mask)) == k) {
            std::vector<std::size_t> s;
            for (std::size_t i = 0; i < d; ++i)
                if (mask & (1u << i)) s.push_back(i);
            subsets.push_back(s);
        }
    const auto n = static_cast<Eigen::Index>(subsets.size());
    Eigen::MatrixXd C(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
        for (Eigen::Index c = 0; c < n; ++c) {
            Eigen::MatrixXd minor(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j)
                    minor(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                        static_cast<double>(A[subsets[static_cast<std::size_t>(r)][i]][subsets[static_cast<std::size_t>(c)][j]]);
            C(r, c) = minor.determinant();
        }
    Eigen::EigenSolver<Eigen::MatrixXd> es(C);
    return es.eigenvalues().cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("gcd of trivariate forms") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 30; ++i) {
        const MPoly c = random_form(rng, 1 + i % 2), a = random_form(rng, 2), b = random_form(rng, 2);
        if (c.is_zero() || a.is_zero() || b.is_zero()) continue;
        const MPoly g = gcd(a * c, b * c);
        CHECK_NOTHROW((void)g.divide(c));
        CHECK_NOTHROW((void)(a * c).divide(g));
        CHECK_NOTHROW((void)(b * c).divide(g));
        CHECK(g.degree() >= c.degree());
    }
    CHECK(gcd(mono(1, 1, 0) * Integer(6), mono(0, 1, 1) * Integer(4)) == mono(0, 1, 0, 2));
}

TEST_CASE("gcd with factors vanishing along the probe direction") {
    const MPoly l1 = mono(0, 1, 0) - mono(1, 0, 0, 3), l2 = mono(0, 0, 1) - mono(1, 0, 0, 7);
    std::mt19937_64 rng(52);
    for (int i = 0; i < 20; ++i) {
        const MPoly a = random_form(rng, 3), b = random_form(rng, 3);
        if (a.is_zero() || b.is_zero()) continue;
        for (const MPoly& c : {l1, l2, l1 * l2}) {
            const MPoly g = gcd(a * c, b * c);
            CHECK_NOTHROW((void)g.divide(c));
        }
        if (a.degree() == 3 && b.degree() == 3) CHECK(gcd(a, b).degree() == 0);
    }
}

TEST_CASE("plane degree sequences") {
    const auto cr = plane_degree_sequence(cremona(), 4);
    CHECK(cr.entries == std::vector<long>{2, 1, 2, 1});
    CHECK(cr.submultiplicative());

    const auto in = plane_degree_sequence(intro_map(), 6);
    CHECK(in.entries == std::vector<long>{2, 4, 8, 16, 32, 64});
    CHECK(in.lambda_estimate == doctest::Approx(2.0));
    CHECK(in.submultiplicative());

    const auto sq = plane_degree_sequence(PlaneMap::normalize({mono(2, 0, 0), mono(0, 2, 0), mono(0, 0, 2)}), 5);
    CHECK(sq.entries == std::vector<long>{2, 4, 8, 16, 32});
}

TEST_CASE("iterates agree with pointwise iteration") {
    const auto f = intro_map();
    PlaneMap it = f;
    std::mt19937_64 rng(52);
    std::uniform_int_distribution<long> c(-9, 9);
    for (unsigned n = 2; n <= 4; ++n) {
        it = compose(f, it);
        for (int s = 0; s < 5; ++s) {
            std::array<Integer, 3> pt{c(rng), c(rng), c(rng)}, q = pt;
            for (unsigned k = 0; k < n; ++k) q = eval(f, q);
            const auto direct = eval(it, pt);
            if (direct == std::array<Integer, 3>{0, 0, 0}) continue;
            CHECK(proportional(q, direct));
        }
    }
}

TEST_CASE("random quadratic plane maps are submultiplicative") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 6; ++i) {
        std::array<MPoly, 3> comps;
        for (auto& c : comps) c = random_form(rng, 2);
        const auto f = PlaneMap::normalize(comps);
        const auto seq = plane_degree_sequence(f, 3);
        CHECK(seq.submultiplicative());
    }
}

TEST_CASE("symbolic budget is enforced") {
    SymbolicBudget tight;
    tight.terms = 10;
    try {
        const auto f = PlaneMap::normalize({mono(2, 0, 0) + mono(0, 2, 0) + mono(0, 0, 2), mono(1, 1, 0), mono(0, 0, 2)});
        plane_degree_sequence(f, 6, tight);
        FAIL("expected BudgetExceeded");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::BudgetExceeded);
    }
}

TEST_CASE("monomial dynamical degrees examples") {
    auto l = monomial_dynamical_degrees({{2, 1}, {1, 1}});
    CHECK(l[1].value == doctest::Approx((3 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    CHECK(l[1].lower <= (3 + std::sqrt(5.0)) / 2 + 1e-15);
    CHECK(l[1].upper >= (3 + std::sqrt(5.0)) / 2 - 1e-15);
    CHECK(l[2].value == 1);
    l = monomial_dynamical_degrees({{2, 0}, {0, 2}});
    CHECK(l[1].value == doctest::Approx(2.0));
    CHECK(l[2].value == 4);
    l = monomial_dynamical_degrees({{0, 1}, {1, 0}});
    CHECK(l[1].value == doctest::Approx(1.0));
    CHECK(l[2].value == 1);
    try {
        monomial_dynamical_degrees({{1, 2}, {2, 4}});
        FAIL("expected SingularMatrix");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SingularMatrix);
    }
}

TEST_CASE("monomial degrees match compound-matrix spectral radii") {
    std::mt19937_64 rng(54);
    std::uniform_int_distribution<std::int64_t> c(-3, 3);
    std::uniform_int_distribution<std::size_t> dim(2, 4);
    int done = 0;
    while (done < 40) {
        const std::size_t d = dim(rng);
        std::vector<std::vector<std::int64_t>> A(d, std::vector<std::int64_t>(d));
        for (auto& row : A)
            for (auto& v : row) v = c(rng);
        std::vector<CertifiedReal> l;
        try {
            l = monomial_dynamical_degrees(A);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::SingularMatrix);
            continue;
        }
        ++done;
        CHECK(l[0].value == 1);
        for (std::size_t k = 1; k <= d; ++k) {
            CHECK(l[k].width() < 1e-9);
            CHECK(l[k].value == doctest::Approx(compound_radius(A, k)).epsilon(1e-7));
        }
        for (std::size_t k = 1; k < d; ++k) CHECK(l[k].upper * l[k].upper >= l[k - 1].lower * l[k + 1].lower);
    }
}

TEST_CASE("repeated eigenvalues are certified") {
    const auto l = monomial_dynamical_degrees({{2, 1, 0}, {0, 2, 0}, {0, 0, -3}});
    CHECK(l[1].value == doctest::Approx(3.0));
    CHECK(l[2].value == doctest::Approx(6.0));
    CHECK(l[3].value == 12);
}

TEST_CASE("product map volume") {
    CHECK(product_map_volume(2, 1, 2) == 12);
    CHECK(product_map_volume(3, 5, 1) == 2);
    CHECK(product_map_volume(1, 1, 3) == 18);
    for (unsigned d1 = 1; d1 <= 5; ++d1)
        for (unsigned d2 = 1; d2 <= 5; ++d2)
            for (unsigned n = 1; n <= 50; n += 7)
                CHECK(product_map_volume(d1, d2, n) == product_map_volume_bruteforce(d1, d2, n));
}

TEST_CASE("key lemma constants are bounded") {
    auto r = key_lemma_check(2, 1, Scalar(1, 2), 20);
    CHECK(r.bounded);
    CHECK(r.C.size() == 20);
    r = key_lemma_check(1, 1, Scalar(1, 2), 10);
    CHECK(r.C[0] == Scalar(4, 3));
    CHECK(r.sup == Scalar(2 * 25, 1) / Scalar(243, 32));
    CHECK(r.sup_at == 5);
    CHECK(r.bounded);
    CHECK(key_lemma_check(3, 2, Scalar(1), 15).bounded);
}

TEST_CASE("siu inequality on P1 x P1") {
    CHECK(siu_surface_check({1, 0}, {1, 1}));
    CHECK(siu_surface_check({5, 7}, {2, 3}));
    std::mt19937_64 rng(55);
    std::uniform_int_distribution<long> v(0, 100), w(1, 100);
    for (int i = 0; i < 10000; ++i)
        CHECK(siu_surface_check({frac(v(rng), w(rng)), frac(v(rng), w(rng))},
                                {frac(w(rng), w(rng)), frac(w(rng), w(rng))}));
}

TEST_CASE("plane map json round trip") {
    const auto f = intro_map();
    const auto j = to_json(f);
    const auto g = plane_map_from_json(j);
    CHECK(g.components() == f.components());
    try {
        plane_map_from_json(nlohmann::json::parse(R"({"components":[[["1","1,0"]],[],[]]})"));
        FAIL("expected schema error");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Schema);
    }
}
