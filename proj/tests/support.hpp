#pragma once

#include "nadyn/berkovich.hpp"

#include <random>

namespace testing {

using nadyn::Chart;
using nadyn::DiskPoint;
using nadyn::Poly;
using nadyn::PValue;
using nadyn::Prime;
using nadyn::Scalar;

inline Scalar frac(long a, long b) {
    Scalar q(a, b);
    q.canonicalize();
    return q;
}

inline Scalar pw(long p, long e) {
    Scalar r = 1;
    for (long i = 0; i < std::labs(e); ++i) r *= p;
    return e >= 0 ? r : Scalar(1 / r);
}

/// Random rational of the form u * p^k with u a small integer (p-adic unit
/// or not) and k in [kmin, kmax].
inline Scalar random_scalar(std::mt19937_64& rng, long p, long kmin, long kmax) {
    std::uniform_int_distribution<long> num(-200, 200), den(1, 30), ex(kmin, kmax);
    Scalar x = frac(num(rng), den(rng));
    while (x != 0 && x.get_den() % p == 0) {
        x *= p;
        x.canonicalize();
    }
    return x * pw(p, ex(rng));
}

/// A point in the unit disk of chart Z or W with radius Zero or p^-k.
inline DiskPoint random_point(std::mt19937_64& rng, const Prime& p, long max_depth = 4,
                              bool both_charts = true) {
    std::uniform_int_distribution<long> k(0, max_depth), coin(0, 3);
    const long pv = p.value();
    Scalar a = random_scalar(rng, pv, 0, 3);
    const Chart c = both_charts && coin(rng) == 0 ? Chart::W : Chart::Z;
    const PValue r = coin(rng) == 0 ? PValue::zero() : PValue::power(Scalar(-k(rng)));
    return DiskPoint::make(c, a, r, p);
}

/// Polynomial with every coefficient of norm <= 1.
inline Poly random_unit_poly(std::mt19937_64& rng, long p, int max_degree = 4) {
    std::uniform_int_distribution<int> deg(0, max_degree);
    std::vector<Scalar> c;
    const int d = deg(rng);
    for (int i = 0; i <= d; ++i) c.push_back(random_scalar(rng, p, 0, 2));
    return Poly(std::move(c));
}

}  // namespace testing

#include "nadyn/noetherian.hpp"

namespace testing {

struct PosetSystem {
    nadyn::FinitePoset X;
    nadyn::SelfMap f;
    std::vector<nadyn::Subset> cover;
};

/// Random poset on m points (relations only from lower to higher index), a
/// random order-preserving self-map and a random open cover.
inline PosetSystem random_poset_system(std::mt19937_64& rng, std::size_t m, double density = 0.3) {
    std::bernoulli_distribution edge(density);
    std::vector<std::pair<std::size_t, std::size_t>> less;
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
            if (edge(rng)) less.emplace_back(i, j);
    auto X = nadyn::FinitePoset::from_relations(m, less);

    nadyn::SelfMap f;
    for (int attempt = 0; attempt < 200 && f.size() < m; ++attempt) {
        f.clear();
        for (std::size_t x = 0; x < m; ++x) {
            nadyn::Subset allowed = X.all();
            for (auto y : nadyn::subset_elements(X.down(x)))
                if (y != x) allowed &= X.up(f[y]);
            const auto options = nadyn::subset_elements(allowed);
            if (options.empty()) break;
            f.push_back(options[std::uniform_int_distribution<std::size_t>(0, options.size() - 1)(rng)]);
        }
    }
    if (f.size() < m) {
        f.resize(m);
        for (std::size_t x = 0; x < m; ++x) f[x] = x;
    }

    std::uniform_int_distribution<std::size_t> pick(0, m - 1), count(2, 4);
    std::vector<nadyn::Subset> cover;
    const std::size_t k = count(rng);
    for (std::size_t i = 0; i < k; ++i) cover.push_back(X.up(pick(rng)) | X.up(pick(rng)));
    nadyn::Subset covered = 0;
    for (auto U : cover) covered |= U;
    for (auto x : nadyn::subset_elements(X.all() & ~covered))
        if (!((covered >> x) & 1U)) {
            cover.push_back(X.up(x));
            covered |= X.up(x);
        }
    return {X, f, cover};
}

}  // namespace testing
