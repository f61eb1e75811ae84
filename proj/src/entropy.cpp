#include "nadyn/entropy.hpp"

#include "nadyn/error.hpp"
#include "nadyn/reduction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <unordered_map>

namespace nadyn {

namespace {

constexpr std::size_t kExhaustiveLimit = 15;

void check_horizon(const OrbitTable& t, std::size_t n) {
    if (n > t.horizon)
        fail(Errc::HorizonTooShort,
             "n = " + std::to_string(n) + " exceeds the horizon " + std::to_string(t.horizon));
}

bool shadows(const OrbitTable& t, std::size_t i, std::size_t j, std::size_t n, const Entourage& E) {
    return !separated(t, i, j, n, E);
}

std::vector<std::size_t> exhaustive_points(const OrbitTable& t, std::size_t n) {
    check_horizon(t, n);
    auto pts = t.admissible(n);
    if (pts.size() > kExhaustiveLimit)
        fail(Errc::SizeBound, std::to_string(pts.size()) + " admissible points exceed the exhaustive limit of " +
                                  std::to_string(kExhaustiveLimit));
    return pts;
}

ProjectivePoint primitive(ProjectivePoint x) {
    Integer g = 0;
    for (const auto& c : x) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0) return x;
    for (auto& c : x) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    for (const auto& c : x)
        if (c != 0) {
            if (c < 0)
                for (auto& v : x) v = -v;
            break;
        }
    return x;
}

ProjectivePoint image(const PlaneMap& f, const ProjectivePoint& x) {
    ProjectivePoint out;
    for (int i = 0; i < 3; ++i) {
        Integer acc = 0;
        for (const auto& [e, c] : f.components()[static_cast<std::size_t>(i)].terms()) {
            Integer t = c, pw;
            for (int k = 0; k < 3; ++k) {
                mpz_pow_ui(pw.get_mpz_t(), x[static_cast<std::size_t>(k)].get_mpz_t(), e[static_cast<std::size_t>(k)]);
                t *= pw;
            }
            acc += t;
        }
        out[static_cast<std::size_t>(i)] = acc;
    }
    return out;
}

bool is_zero(const ProjectivePoint& x) { return x[0] == 0 && x[1] == 0 && x[2] == 0; }

std::string key(const ProjectivePoint& x) {
    return x[0].get_str() + ":" + x[1].get_str() + ":" + x[2].get_str();
}

}  // namespace

Entourage Entourage::from_partition(const std::vector<std::vector<std::size_t>>& cells,
                                    std::size_t ambient) {
    Entourage E = from_cells(cells, ambient);
    for (std::size_t a = 0; a < ambient; ++a)
        if (E.member_of_[a].size() > 1)
            fail(Errc::OverlappingCells, "ambient point " + std::to_string(a) + " lies in " +
                                             std::to_string(E.member_of_[a].size()) + " cells");
    return E;
}

Entourage Entourage::from_cells(const std::vector<std::vector<std::size_t>>& cells,
                                std::size_t ambient) {
    Entourage E;
    E.cells_ = cells.size();
    E.member_of_.assign(ambient, {});
    for (std::size_t c = 0; c < cells.size(); ++c)
        for (auto a : cells[c]) {
            if (a >= ambient) fail(Errc::InvalidArgument, "cell member out of range");
            auto& m = E.member_of_[a];
            if (m.empty() || m.back() != c) m.push_back(c);
        }
    for (std::size_t a = 0; a < ambient; ++a)
        if (E.member_of_[a].empty())
            fail(Errc::UncoveredPoint, "ambient point " + std::to_string(a) + " lies in no cell");
    return E;
}

bool Entourage::close(std::size_t a, std::size_t b) const {
    const auto& x = member_of_[a];
    const auto& y = member_of_[b];
    std::size_t i = 0, j = 0;
    while (i < x.size() && j < y.size()) {
        if (x[i] == y[j]) return true;
        x[i] < y[j] ? ++i : ++j;
    }
    return false;
}

bool Entourage::square_within(const Entourage& E) const {
    const std::size_t m = ambient();
    if (E.ambient() != m) return false;
    for (std::size_t b = 0; b < m; ++b) {
        std::vector<std::size_t> nbrs;
        for (std::size_t a = 0; a < m; ++a)
            if (close(a, b)) nbrs.push_back(a);
        for (auto a : nbrs)
            for (auto c : nbrs)
                if (!E.close(a, c)) return false;
    }
    return true;
}

std::vector<std::size_t> OrbitTable::admissible(std::size_t n) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        bool ok = true;
        for (std::size_t k = 0; k <= n && ok; ++k) ok = defined(i, k);
        if (ok) out.push_back(i);
    }
    return out;
}

DiskOrbitTable disk_orbit_table(const RationalMapP1& f, const std::vector<DiskPoint>& sample,
                                std::size_t horizon) {
    DiskOrbitTable out;
    std::unordered_map<std::string, long> ids;
    auto id_of = [&](const DiskPoint& x) {
        auto [it, fresh] = ids.try_emplace(x.str(), static_cast<long>(out.registry.size()));
        if (fresh) out.registry.push_back(x);
        return it->second;
    };
    out.table.horizon = horizon;
    for (const auto& x0 : sample) {
        std::vector<long> row(horizon + 1, -1);
        DiskPoint x = x0;
        row[0] = id_of(x);
        for (std::size_t k = 1; k <= horizon; ++k) {
            try {
                x = rational_eval(f, x);
            } catch (const Error& e) {
                if (e.code() != Errc::PoleInDisk) throw;
                break;
            }
            row[k] = id_of(x);
        }
        out.table.orbit.push_back(std::move(row));
    }
    out.table.ambient = out.registry.size();
    return out;
}

Entourage eps_entourage(const std::vector<DiskPoint>& registry, const PValue& eps) {
    return Entourage::from_partition(partition_by_eps(registry, eps), registry.size());
}

PlaneOrbitTable plane_orbit_table(const PlaneMap& f, const std::vector<ProjectivePoint>& sample,
                                  std::size_t horizon) {
    PlaneOrbitTable out;
    std::unordered_map<std::string, long> ids;
    auto id_of = [&](const ProjectivePoint& x) {
        auto [it, fresh] = ids.try_emplace(key(x), static_cast<long>(out.registry.size()));
        if (fresh) out.registry.push_back(x);
        return it->second;
    };
    out.table.horizon = horizon;
    for (const auto& x0 : sample) {
        std::vector<long> row(horizon + 1, -1);
        ProjectivePoint x = primitive(x0);
        if (!is_zero(x)) {
            row[0] = id_of(x);
            for (std::size_t k = 1; k <= horizon; ++k) {
                x = primitive(image(f, x));
                if (is_zero(x)) break;
                row[k] = id_of(x);
            }
        }
        out.table.orbit.push_back(std::move(row));
    }
    out.table.ambient = out.registry.size();
    return out;
}

std::vector<std::vector<bool>> admissible_mask(const PlaneMap& f,
                                               const std::vector<ProjectivePoint>& sample,
                                               std::size_t n) {
    const auto t = plane_orbit_table(f, sample, n);
    std::vector<std::vector<bool>> mask;
    for (const auto& row : t.table.orbit) {
        std::vector<bool> m;
        for (auto v : row) m.push_back(v >= 0);
        mask.push_back(std::move(m));
    }
    return mask;
}

Entourage reduction_entourage(const std::vector<ProjectivePoint>& registry, const Prime& p) {
    const Integer P = p.integer();
    std::map<std::string, std::size_t> cell_index;
    std::vector<std::vector<std::size_t>> cells;
    for (std::size_t i = 0; i < registry.size(); ++i) {
        // Primitive points reduce to a nonzero vector; scale its first
        // nonzero entry to 1.
        ProjectivePoint r;
        for (int k = 0; k < 3; ++k) {
            r[static_cast<std::size_t>(k)] = registry[i][static_cast<std::size_t>(k)] % P;
            if (r[static_cast<std::size_t>(k)] < 0) r[static_cast<std::size_t>(k)] += P;
        }
        Integer inv;
        for (const auto& c : r)
            if (c != 0) {
                mpz_invert(inv.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
                break;
            }
        for (auto& c : r) c = c * inv % P;
        auto [it, fresh] = cell_index.try_emplace(key(r), cells.size());
        if (fresh) cells.emplace_back();
        cells[it->second].push_back(i);
    }
    return Entourage::from_partition(cells, registry.size());
}

OrbitTable finite_orbit_table(const std::vector<long>& f, std::size_t horizon) {
    const auto m = static_cast<long>(f.size());
    for (auto v : f)
        if (v < -1 || v >= m) fail(Errc::InvalidArgument, "finite map value out of range");
    OrbitTable t;
    t.horizon = horizon;
    t.ambient = f.size();
    for (long x = 0; x < m; ++x) {
        std::vector<long> row(horizon + 1, -1);
        long y = x;
        for (std::size_t k = 0; k <= horizon && y >= 0; ++k) {
            row[k] = y;
            y = f[static_cast<std::size_t>(y)];
        }
        t.orbit.push_back(std::move(row));
    }
    return t;
}

bool separated(const OrbitTable& t, std::size_t i, std::size_t j, std::size_t n, const Entourage& E) {
    for (std::size_t k = 0; k <= n; ++k)
        if (!E.close(static_cast<std::size_t>(t.orbit[i][k]), static_cast<std::size_t>(t.orbit[j][k])))
            return true;
    return false;
}

std::vector<std::size_t> separated_set(const OrbitTable& t, std::size_t n, const Entourage& E) {
    check_horizon(t, n);
    std::vector<std::size_t> chosen;
    for (auto i : t.admissible(n)) {
        const bool ok = std::all_of(chosen.begin(), chosen.end(),
                                    [&](std::size_t j) { return separated(t, i, j, n, E); });
        if (ok) chosen.push_back(i);
    }
    return chosen;
}

std::vector<std::size_t> covering_set(const OrbitTable& t, std::size_t n, const Entourage& E) {
    check_horizon(t, n);
    const auto pts = t.admissible(n);
    std::vector<std::vector<std::size_t>> covers(pts.size());
    for (std::size_t a = 0; a < pts.size(); ++a)
        for (std::size_t b = 0; b < pts.size(); ++b)
            if (shadows(t, pts[a], pts[b], n, E)) covers[a].push_back(b);
    std::vector<bool> covered(pts.size(), false);
    std::size_t left = pts.size();
    std::vector<std::size_t> chosen;
    while (left > 0) {
        std::size_t best = 0, best_gain = 0;
        for (std::size_t a = 0; a < pts.size(); ++a) {
            std::size_t gain = 0;
            for (auto b : covers[a]) gain += !covered[b];
            if (gain > best_gain) {
                best_gain = gain;
                best = a;
            }
        }
        chosen.push_back(pts[best]);
        for (auto b : covers[best])
            if (!covered[b]) {
                covered[b] = true;
                --left;
            }
    }
    return chosen;
}

std::size_t covering_number(const OrbitTable& t, std::size_t n, const Entourage& E) {
    return covering_set(t, n, E).size();
}

std::size_t exact_separated_number(const OrbitTable& t, std::size_t n, const Entourage& E) {
    const auto pts = exhaustive_points(t, n);
    const std::size_t m = pts.size();
    std::vector<std::uint32_t> sep(m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (a != b && separated(t, pts[a], pts[b], n, E)) sep[a] |= 1u << b;
    std::size_t best = 0;
    for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size <= best) continue;
        bool ok = true;
        for (std::size_t a = 0; a < m && ok; ++a)
            if (mask & (1u << a)) ok = (sep[a] & mask) == (mask & ~(1u << a));
        if (ok) best = size;
    }
    return best;
}

std::size_t exact_covering_number(const OrbitTable& t, std::size_t n, const Entourage& E) {
    const auto pts = exhaustive_points(t, n);
    const std::size_t m = pts.size();
    if (m == 0) return 0;
    std::vector<std::uint32_t> cov(m, 0);
    for (std::size_t a = 0; a < m; ++a)
        for (std::size_t b = 0; b < m; ++b)
            if (shadows(t, pts[a], pts[b], n, E)) cov[a] |= 1u << b;
    const std::uint32_t all = (m == 32) ? ~0u : ((1u << m) - 1);
    std::size_t best = m;
    for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
        const auto size = static_cast<std::size_t>(std::popcount(mask));
        if (size >= best) continue;
        std::uint32_t u = 0;
        for (std::size_t a = 0; a < m; ++a)
            if (mask & (1u << a)) u |= cov[a];
        if (u == all) best = size;
    }
    return best;
}

ChainCheck chain_inequality_check(const OrbitTable& t, std::size_t n, const Entourage& E,
                                  const Entourage& E_fine) {
    if (!E_fine.square_within(E))
        fail(Errc::CompositionNotContained, "E' o E' is not contained in E on the sample");
    ChainCheck c;
    c.R = exact_covering_number(t, n, E);
    c.S = exact_separated_number(t, n, E);
    c.R_fine = exact_covering_number(t, n, E_fine);
    c.holds = c.R <= c.S && c.S <= c.R_fine;
    return c;
}

RateEstimate entropy_rate(const std::vector<std::size_t>& series) {
    const std::size_t N = series.size();
    if (N < 3) fail(Errc::InvalidArgument, "entropy_rate needs N >= 3");
    for (auto s : series)
        if (s == 0) fail(Errc::InvalidArgument, "series entries must be positive");
    RateEstimate r;
    const double last = std::log(static_cast<double>(series.back()));
    r.average = last / static_cast<double>(N);
    r.rate = 0;
    for (std::size_t m = 1; m < N; ++m) {
        const double slope =
            (last - std::log(static_cast<double>(series[m - 1]))) / static_cast<double>(N - m);
        r.rate = std::max(r.rate, slope);
    }
    return r;
}

std::vector<SeriesRow> entropy_series(const OrbitTable& t, const Entourage& E, std::size_t N) {
    if (N == 0 || N > t.horizon + 1)
        fail(Errc::HorizonTooShort, "series length " + std::to_string(N) +
                                        " needs a horizon of at least " + std::to_string(N - 1));
    std::vector<SeriesRow> rows;
    for (std::size_t n = 1; n <= N; ++n)
        rows.push_back({n, separated_set(t, n - 1, E).size(), covering_number(t, n - 1, E)});
    return rows;
}

}  // namespace nadyn
