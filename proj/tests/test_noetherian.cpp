#include "nadyn/error.hpp"
#include "nadyn/noetherian.hpp"
#include "support.hpp"

#include <doctest.h>

#include <functional>
#include <set>

using namespace nadyn;

namespace {

// Oracle: every subset of R closed under addition and under multiplication
// by R, not containing 1.
std::size_t brute_force_ideal_count(const FiniteRing& R) {
    const std::size_t n = R.size();
    std::size_t count = 0;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
        if (!(mask & 1U) || ((mask >> R.one()) & 1U)) continue;
        bool ok = true;
        for (std::uint32_t a = 0; a < n && ok; ++a) {
            if (!((mask >> a) & 1U)) continue;
            for (std::uint32_t b = 0; b < n && ok; ++b) {
                if (((mask >> b) & 1U) && !((mask >> R.add(a, b)) & 1U)) ok = false;
                if (!((mask >> R.mul(a, b)) & 1U)) ok = false;
            }
        }
        count += ok;
    }
    return count;
}

// Oracle: N(U_n) from the word-indexed join, smallest k admitting a
// covering k-combination.
std::size_t brute_force_complexity(const FinitePoset& X, const SelfMap& f, const std::vector<Subset>& cover,
                                   std::size_t n) {
    std::vector<Subset> words{X.all()};
    for (std::size_t step = 0; step < n; ++step) {
        std::vector<Subset> next;
        for (auto w : words)
            for (auto U : cover) {
                Subset s = 0;
                for (std::size_t x = 0; x < X.size(); ++x)
                    if (((U >> x) & 1U) && ((w >> f[x]) & 1U)) s |= Subset{1} << x;
                next.push_back(s);
            }
        words = next;
    }
    for (std::size_t k = 1;; ++k) {
        std::function<bool(std::size_t, std::size_t, Subset)> rec = [&](std::size_t start, std::size_t left,
                                                                         Subset acc) {
            if (left == 0) return acc == X.all();
            for (std::size_t i = start; i < words.size(); ++i)
                if (rec(i + 1, left - 1, acc | words[i])) return true;
            return false;
        };
        if (rec(0, k, 0)) return k;
    }
}

Subset set_of(std::initializer_list<std::size_t> xs) {
    Subset s = 0;
    for (auto x : xs) s |= Subset{1} << x;
    return s;
}

}  // namespace

TEST_CASE("ideals of small rings") {
    const auto z8 = enumerate_ideals(FiniteRing::integers(8));
    CHECK(z8.names == std::vector<std::string>{"(0)", "(4)", "(2)"});
    CHECK(z8.contains[2][1]);
    CHECK(z8.contains[1][0]);
    const auto t4 = enumerate_ideals(FiniteRing::truncated(2, 4));
    CHECK(t4.names == std::vector<std::string>{"(0)", "(x^3)", "(x^2)", "(x)"});
    const auto f3 = enumerate_ideals(FiniteRing::integers(3));
    CHECK(f3.names == std::vector<std::string>{"(0)"});
    const auto prod = enumerate_ideals(FiniteRing::product({FiniteRing::integers(2), FiniteRing::integers(3)}));
    CHECK(prod.size() == 3);
    CHECK_THROWS_AS(FiniteRing::integers(5000), Error);
    try {
        FiniteRing::truncated(2, 13);
        FAIL("expected SizeBound");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::SizeBound);
    }
}

TEST_CASE("ideal enumeration matches the subset oracle") {
    const std::vector<FiniteRing> rings{
        FiniteRing::integers(8),      FiniteRing::integers(12),     FiniteRing::truncated(2, 4),
        FiniteRing::truncated(3, 2),  FiniteRing::integers(9),      FiniteRing::integers(16),
        FiniteRing::product({FiniteRing::integers(2), FiniteRing::truncated(2, 2)}),
        FiniteRing::product({FiniteRing::integers(2), FiniteRing::integers(2), FiniteRing::integers(3)})};
    for (const auto& R : rings) {
        INFO(R.str());
        const auto L = enumerate_ideals(R);
        CHECK(L.size() == brute_force_ideal_count(R));
        // Lattice closure: intersections of proper ideals are listed.
        for (const auto& I : L.ideals)
            for (const auto& J : L.ideals) {
                std::vector<std::uint32_t> meet;
                std::set_intersection(I.begin(), I.end(), J.begin(), J.end(), std::back_inserter(meet));
                CHECK(L.find(meet).has_value());
            }
    }
}

TEST_CASE("ring arithmetic") {
    const auto R = FiniteRing::truncated(2, 4);
    const std::uint32_t x = 2, x2 = 4;
    CHECK(R.mul(x, x) == x2);
    CHECK(R.element_str(R.add(x, 1)) == "x+1");
    CHECK(R.mul(x2, x2) == 0);
    const auto Z = FiniteRing::integers(6);
    CHECK(Z.add(5, 4) == 3);
    CHECK(Z.neg(2) == 4);
    CHECK(Z.mul(4, 5) == 2);
    const auto P = FiniteRing::product({FiniteRing::integers(2), FiniteRing::integers(3)});
    CHECK(P.element_str(P.one()) == "(1,1)");
}

TEST_CASE("induced ideal maps") {
    const auto R = FiniteRing::truncated(2, 4);
    const auto L = enumerate_ideals(R);
    const auto frob = induced_ideal_map(R, L, power_endomorphism(R, 2));
    // (0) -> (x^2), (x^3) -> (x^2), (x^2) -> (x), (x) -> (x)
    CHECK(frob == SelfMap{2, 2, 3, 3});
    std::vector<std::uint32_t> id(R.size());
    for (std::uint32_t a = 0; a < R.size(); ++a) id[a] = a;
    CHECK(induced_ideal_map(R, L, id) == SelfMap{0, 1, 2, 3});
    const auto Z = FiniteRing::integers(8);
    const auto LZ = enumerate_ideals(Z);
    std::vector<std::uint32_t> idz(8);
    for (std::uint32_t a = 0; a < 8; ++a) idz[a] = a;
    CHECK(induced_ideal_map(Z, LZ, idz) == SelfMap{0, 1, 2});
    try {
        induced_ideal_map(Z, LZ, power_endomorphism(Z, 2));
        FAIL("expected NotAHomomorphism");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotAHomomorphism);
    }
    // Reverse inclusion is preserved, so the map is continuous on Id(R).
    CHECK_NOTHROW(check_continuous(ideal_space(L), frob));
}

TEST_CASE("Frobenius preimages agree with a direct preimage computation") {
    for (unsigned k = 1; k <= 6; ++k) {
        const auto R = FiniteRing::truncated(2, k);
        const auto L = enumerate_ideals(R);
        const auto m = induced_ideal_map(R, L, power_endomorphism(R, 2));
        for (std::size_t i = 0; i < L.size(); ++i) {
            std::vector<std::uint32_t> pre;
            for (std::uint32_t a = 0; a < R.size(); ++a) {
                const std::uint32_t sq = R.mul(a, a);
                if (std::find(L.ideals[i].begin(), L.ideals[i].end(), sq) != L.ideals[i].end()) pre.push_back(a);
            }
            CHECK(L.ideals[m[i]] == pre);
        }
    }
}

TEST_CASE("Priestley checks") {
    const auto X = ideal_space(enumerate_ideals(FiniteRing::integers(8)));
    const auto r = priestley_check(X);
    CHECK(r.holds);
    for (const auto& [pair, K] : r.witnesses) {
        const auto [y, x] = pair;
        CHECK(((K >> x) & 1U));
        CHECK_FALSE(((K >> y) & 1U));
        CHECK(X.is_closed(K));
    }
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) CHECK(priestley_check(testing::random_poset_system(rng, 10).X).holds);
    // 0 <= 1 <= 2 without 0 <= 2.
    std::vector<std::vector<bool>> bad{{true, true, false}, {false, true, true}, {false, false, true}};
    const auto b = priestley_check(bad);
    CHECK_FALSE(b.holds);
    CHECK(b.counterexample.find("transitive") != std::string::npos);
    CHECK_THROWS_AS(FinitePoset::make(bad), Error);
}

TEST_CASE("cover complexity examples") {
    // s = 0 < eta = 1; opens {}, {eta}, X.
    const auto chain = FinitePoset::from_relations(2, {{0, 1}});
    for (std::size_t n = 0; n <= 5; ++n) CHECK(cover_complexity(chain, {0, 1}, {set_of({1}), set_of({0, 1})}, n).value == 1);

    std::mt19937_64 rng(52);
    for (int t = 0; t < 20; ++t) {
        auto sys = testing::random_poset_system(rng, 8);
        SelfMap id(8);
        for (std::size_t x = 0; x < 8; ++x) id[x] = x;
        const auto base = cover_complexity(sys.X, id, sys.cover, 1).value;
        for (std::size_t n = 1; n <= 4; ++n) CHECK(cover_complexity(sys.X, id, sys.cover, n).value == base);
    }

    // Two 3-chains swapped by f.
    const auto X = FinitePoset::from_relations(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
    const SelfMap swap{3, 4, 5, 0, 1, 2};
    const std::vector<Subset> cover{set_of({0, 1, 2}), set_of({4, 5}), set_of({1, 2, 3, 4, 5})};
    const auto series = cover_complexity_series(X, swap, cover, 4);
    for (std::size_t n = 0; n <= 3; ++n) CHECK(series[n] == brute_force_complexity(X, swap, cover, n));
    const auto c = cover_complexity(X, swap, cover, 3);
    Subset u = 0;
    for (auto s : c.subcover) u |= s;
    CHECK(u == X.all());
    CHECK(c.subcover.size() == c.value);

    try {
        cover_complexity(X, swap, {set_of({0, 1, 2})}, 1);
        FAIL("expected NotACover");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotACover);
    }
    try {
        cover_complexity(X, {2, 1, 0, 3, 4, 5}, cover, 1);
        FAIL("expected NotContinuous");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotContinuous);
    }
    CHECK_THROWS_AS(cover_complexity(X, swap, {set_of({0}), X.all()}, 1), Error);
}

TEST_CASE("cover complexity agrees with the word oracle on random systems") {
    std::mt19937_64 rng(53);
    for (int t = 0; t < 40; ++t) {
        auto sys = testing::random_poset_system(rng, 7);
        if (sys.cover.size() > 4) continue;
        const auto series = cover_complexity_series(sys.X, sys.f, sys.cover, 3);
        for (std::size_t n = 0; n <= 3; ++n) CHECK(series[n] == brute_force_complexity(sys.X, sys.f, sys.cover, n));
    }
}

TEST_CASE("cover complexity is submultiplicative, monotone and bounded") {
    std::mt19937_64 rng(54);
    for (int t = 0; t < 50; ++t) {
        auto sys = testing::random_poset_system(rng, 12);
        const auto N = cover_complexity_series(sys.X, sys.f, sys.cover, 10);
        for (std::size_t n = 0; n <= 10; ++n) {
            CHECK(N[n] <= sys.X.size());
            if (n) CHECK(N[n] >= N[n - 1]);
            for (std::size_t m = 0; n + m <= 10; ++m) CHECK(N[n + m] <= N[n] * N[m]);
        }
    }
}

TEST_CASE("recurrence certificates") {
    const auto chain = FinitePoset::from_relations(4, {{0, 1}, {1, 2}, {2, 3}});
    const auto trivial = recurrence_certificate(chain, {0, 0, 0, 0}, {set_of({2, 3}), chain.all()}, Scalar(1, 2));
    CHECK(trivial.M.empty());
    CHECK(trivial.valid());
    for (auto v : trivial.complexity) CHECK(v == 1);

    const auto R = FiniteRing::truncated(2, 4);
    const auto L = enumerate_ideals(R);
    const auto X = ideal_space(L);
    const auto frob = induced_ideal_map(R, L, power_endomorphism(R, 2));
    const auto cert = recurrence_certificate(X, frob, principal_opens(R, L), Scalar(1, 2), 20);
    CHECK(cert.valid());
    CHECK(cert.complexity.back() == cert.complexity[cert.complexity.size() - 2]);

    // Two 4-chains swapped.
    const auto Y = FinitePoset::from_relations(8, {{0, 1}, {1, 2}, {2, 3}, {4, 5}, {5, 6}, {6, 7}});
    const SelfMap swap{4, 5, 6, 7, 0, 1, 2, 3};
    const std::vector<Subset> cover{set_of({2, 3}), set_of({1, 2, 3, 6, 7}), set_of({0, 1, 2, 3}),
                                    set_of({4, 5, 6, 7}), set_of({3, 7})};
    const auto two = recurrence_certificate(Y, swap, cover, Scalar(1, 2));
    CHECK(two.valid());
    CHECK(two.H.size() <= 2);
    for (std::size_t i = 0; i + 1 < two.H.size(); ++i) {
        CHECK((two.H[i + 1] & two.H[i]) == two.H[i + 1]);
        CHECK(two.H[i + 1] != two.H[i]);
    }

    std::mt19937_64 rng(55);
    for (int t = 0; t < 30; ++t) {
        auto sys = testing::random_poset_system(rng, 9);
        const auto c = recurrence_certificate(sys.X, sys.f, sys.cover, Scalar(1, 2));
        CHECK(c.valid());
        CHECK(c.chain_strict);
        // M_i (1+eps)^(1-N_i) <= eps / 10^i, exactly.
        Scalar ten = 1;
        for (std::size_t i = 0; i < c.M.size(); ++i) {
            ten *= 10;
            Scalar power = 1;
            for (long e = 0; e < c.N[i] - 1; ++e) power *= Scalar(3, 2);
            CHECK(Scalar(c.M[i]) / power <= Scalar(1, 2) / ten);
            if (i) CHECK(c.N[i] > c.N[i - 1]);
        }
    }
    const auto j = to_json(cert);
    CHECK(j["valid"] == true);
    CHECK(j["epsilon"] == "1/2");
}

TEST_CASE("invariant measures are atomic on periodic cycles") {
    CHECK(periodic_cycles({1, 2, 0, 0, 3}) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    CHECK(periodic_cycles({0, 1, 1}) == std::vector<std::vector<std::size_t>>{{0}, {1}});
    const auto r = atomicity_check({1, 0, 0, 2, 4});
    CHECK(r.cycles == 2);
    CHECK(r.dimension == 2);
    CHECK(r.atomic);
    std::mt19937_64 rng(56);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<std::size_t> size(1, 14);
        const std::size_t m = size(rng);
        std::uniform_int_distribution<std::size_t> val(0, m - 1);
        SelfMap f(m);
        for (auto& v : f) v = val(rng);
        const auto a = atomicity_check(f);
        CHECK(a.atomic);
        CHECK(a.dimension == a.cycles);
        // Uniform cycle measures are invariant.
        for (const auto& cyc : periodic_cycles(f)) {
            std::vector<Scalar> mu(m, 0);
            for (auto x : cyc) mu[x] = Scalar(1, static_cast<long>(cyc.size()));
            std::vector<Scalar> push(m, 0);
            for (std::size_t x = 0; x < m; ++x) push[f[x]] += mu[x];
            CHECK(push == mu);
        }
    }
}
