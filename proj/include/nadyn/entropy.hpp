#pragma once

// Separated and covering sets of finite samples under partially defined maps.
//
// Orbit entries are ids into an ambient registry (distinct disk points,
// projective points or states of a finite system); entourages are symmetric
// relations on those ids of the form E = union of U x U over a family of
// cells.

#include "nadyn/degree_growth.hpp"
#include "nadyn/dynamics_p1.hpp"

#include <cstdint>
#include <vector>

namespace nadyn {

class Entourage {
public:
    /// Pairwise disjoint cells covering 0..ambient-1. OverlappingCells,
    /// UncoveredPoint.
    static Entourage from_partition(const std::vector<std::vector<std::size_t>>& cells,
                                    std::size_t ambient);
    /// A cover by possibly overlapping cells. UncoveredPoint.
    static Entourage from_cells(const std::vector<std::vector<std::size_t>>& cells,
                                std::size_t ambient);

    bool close(std::size_t a, std::size_t b) const;
    std::size_t ambient() const noexcept { return member_of_.size(); }
    std::size_t block_count() const noexcept { return cells_; }
    /// (a,b), (b,c) in this  =>  (a,c) in E, over the whole ambient set.
    bool square_within(const Entourage& E) const;

private:
    std::size_t cells_ = 0;
    /// Sorted cell indices per ambient id.
    std::vector<std::vector<std::size_t>> member_of_;
};

/// orbit[i][k] is the id of f^k(x_i), or -1 once the orbit has left the
/// domain of definition (the admissible mask).
struct OrbitTable {
    std::size_t horizon = 0;
    std::size_t ambient = 0;
    std::vector<std::vector<long>> orbit;

    bool defined(std::size_t i, std::size_t k) const { return orbit[i][k] >= 0; }
    /// Points admissible through step n.
    std::vector<std::size_t> admissible(std::size_t n) const;
};

struct DiskOrbitTable {
    OrbitTable table;
    std::vector<DiskPoint> registry;
};

/// Orbits of the sample under f up to the horizon; a PoleInDisk step ends
/// the orbit (mask false from there on).
DiskOrbitTable disk_orbit_table(const RationalMapP1& f, const std::vector<DiskPoint>& sample,
                                std::size_t horizon);
/// Partition entourage by eps-reduction classes of the registry.
Entourage eps_entourage(const std::vector<DiskPoint>& registry, const PValue& eps);

using ProjectivePoint = std::array<Integer, 3>;

struct PlaneOrbitTable {
    OrbitTable table;
    /// Primitive representatives with first nonzero coordinate positive.
    std::vector<ProjectivePoint> registry;
};

/// Exact orbits in P^2(Q); an orbit stops where all components vanish.
PlaneOrbitTable plane_orbit_table(const PlaneMap& f, const std::vector<ProjectivePoint>& sample,
                                  std::size_t horizon);
/// mask[i][k] for k = 0..n: the first k iterates avoid the indeterminacy locus.
std::vector<std::vector<bool>> admissible_mask(const PlaneMap& f,
                                               const std::vector<ProjectivePoint>& sample,
                                               std::size_t n);
/// Partition by reduction mod p in P^2(F_p).
Entourage reduction_entourage(const std::vector<ProjectivePoint>& registry, const Prime& p);

/// A self-map of {0..m-1}; -1 marks points outside the domain.
OrbitTable finite_orbit_table(const std::vector<long>& f, std::size_t horizon);

/// (f^k x, f^k y) not in E for some 0 <= k <= n.
bool separated(const OrbitTable& t, std::size_t i, std::size_t j, std::size_t n, const Entourage& E);

/// Greedy maximal (n,E)-separated subset, scanning points in input order.
/// HorizonTooShort when n exceeds the table.
std::vector<std::size_t> separated_set(const OrbitTable& t, std::size_t n, const Entourage& E);
/// Greedy (n,E)-covering subset of the sample (largest coverage first,
/// lowest index on ties); its size bounds the exact R from above.
std::vector<std::size_t> covering_set(const OrbitTable& t, std::size_t n, const Entourage& E);
std::size_t covering_number(const OrbitTable& t, std::size_t n, const Entourage& E);

/// Exact S(n,E) and R(n,E) of the sample by exhaustive search; SizeBound
/// above 15 admissible points.
std::size_t exact_separated_number(const OrbitTable& t, std::size_t n, const Entourage& E);
std::size_t exact_covering_number(const OrbitTable& t, std::size_t n, const Entourage& E);

struct ChainCheck {
    std::size_t R = 0, S = 0, R_fine = 0;
    bool holds = false;
};

/// R(n,E) <= S(n,E) <= R(n,E'), exactly. CompositionNotContained unless
/// E' o E' is inside E.
ChainCheck chain_inequality_check(const OrbitTable& t, std::size_t n, const Entourage& E,
                                  const Entourage& E_fine);

struct RateEstimate {
    /// max over m < N of (log S(N) - log S(m)) / (N - m).
    double rate = 0;
    /// (1/N) log S(N).
    double average = 0;
};

/// series[n-1] = S~(n) for n = 1..N, N >= 3.
RateEstimate entropy_rate(const std::vector<std::size_t>& series);

struct SeriesRow {
    std::size_t n = 0;
    std::size_t S = 0;
    std::size_t R = 0;
};

/// Rows n = 1..N over orbit segments of length n (steps 0..n-1).
std::vector<SeriesRow> entropy_series(const OrbitTable& t, const Entourage& E, std::size_t N);

}  // namespace nadyn
