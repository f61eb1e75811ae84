#pragma once

// Finite spectral spaces: posets with the up-set topology, ideal spaces of
// small finite rings, exact cover complexity and the sub-exponential
// recurrence certificate.
//
// Convention: x <= y iff x lies in the closure of {y}. Opens are up-sets,
// closed sets are down-sets, and the irreducible closed sets are the
// principal down-sets of their generic points.

#include "nadyn/field.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nadyn {

/// Subsets of a space of at most 64 points.
using Subset = std::uint64_t;
using SelfMap = std::vector<std::size_t>;

std::vector<std::size_t> subset_elements(Subset s);

class FinitePoset {
public:
    static constexpr std::size_t kMaxSize = 64;

    /// Validates reflexivity, antisymmetry and transitivity
    /// (InvalidArgument); SizeBound above 64 points.
    static FinitePoset make(const std::vector<std::vector<bool>>& leq);
    /// Reflexive-transitive closure of the given strict relations.
    static FinitePoset from_relations(std::size_t size,
                                      const std::vector<std::pair<std::size_t, std::size_t>>& less);

    std::size_t size() const noexcept { return down_.size(); }
    bool leq(std::size_t x, std::size_t y) const { return (down_[y] >> x) & 1U; }
    Subset all() const noexcept;
    Subset down(std::size_t x) const { return down_[x]; }
    Subset up(std::size_t x) const { return up_[x]; }
    Subset down_closure(Subset s) const;
    bool is_open(Subset s) const;
    bool is_closed(Subset s) const;
    /// Maximal points of s, i.e. generic points of the irreducible
    /// components when s is closed.
    std::vector<std::size_t> maximal(Subset s) const;
    std::vector<std::vector<bool>> relation() const;

private:
    std::vector<Subset> down_, up_;
};

/// NotContinuous unless f is order preserving, i.e. preimages of opens are
/// open.
void check_continuous(const FinitePoset& X, const SelfMap& f);
Subset preimage(const SelfMap& f, Subset s);
Subset image(const SelfMap& f, Subset s);

/// Z/m, F_p[x]/(x^k), and finite products of these. Elements are indices
/// 0..size-1 in mixed radix over the factors; inside F_p[x]/(x^k) the digit
/// of x^i has weight p^i.
class FiniteRing {
public:
    static constexpr std::size_t kDefaultBound = 4096;

    static FiniteRing integers(long m, std::size_t bound = kDefaultBound);
    static FiniteRing truncated(long p, unsigned k, std::size_t bound = kDefaultBound);
    static FiniteRing product(const std::vector<FiniteRing>& factors, std::size_t bound = kDefaultBound);

    std::size_t size() const noexcept { return size_; }
    std::uint32_t zero() const noexcept { return 0; }
    std::uint32_t one() const;
    std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t neg(std::uint32_t a) const;
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    std::uint32_t pow(std::uint32_t a, unsigned e) const;
    std::string element_str(std::uint32_t a) const;
    std::string str() const;

private:
    struct Factor {
        long modulus;  // Z/m when degree == 0
        long p;
        unsigned degree;
        std::size_t size;
    };
    std::vector<Factor> factors_;
    std::size_t size_ = 1;

    std::vector<std::vector<long>> split(std::uint32_t a) const;
    std::uint32_t join(const std::vector<std::vector<long>>& parts) const;
    static FiniteRing from_factors(std::vector<Factor> f, std::size_t bound);
};

/// {"kind":"Z","m":8}, {"kind":"truncated","p":2,"k":4},
/// {"kind":"product","factors":[...]}; optional "bound".
FiniteRing finite_ring_from_json(const nlohmann::json& j);

struct IdealLattice {
    /// Proper ideals as sorted element lists, ordered by size then
    /// lexicographically, so (0) comes first.
    std::vector<std::vector<std::uint32_t>> ideals;
    /// contains[i][j]: ideal j is a subset of ideal i.
    std::vector<std::vector<bool>> contains;
    /// "(g1,g2,...)" with a greedy generating set.
    std::vector<std::string> names;

    std::size_t size() const noexcept { return ideals.size(); }
    std::optional<std::size_t> find(const std::vector<std::uint32_t>& ideal) const;
};

/// Every proper ideal. SizeBound above the ring's bound.
IdealLattice enumerate_ideals(const FiniteRing& R);

/// Id(R) as a finite space: I <= J iff I contains J.
FinitePoset ideal_space(const IdealLattice& L);

/// I -> phi^{-1}(I) as a self-map of the lattice indices.
/// NotAHomomorphism unless phi is a unital ring endomorphism.
SelfMap induced_ideal_map(const FiniteRing& R, const IdealLattice& L,
                          const std::vector<std::uint32_t>& phi);
/// a -> a^e.
std::vector<std::uint32_t> power_endomorphism(const FiniteRing& R, unsigned e);
/// The distinct nonempty D(a) = {I : a not in I}, in order of least a.
std::vector<Subset> principal_opens(const FiniteRing& R, const IdealLattice& L);

struct PriestleyReport {
    bool holds = false;
    /// For each pair (y, x) with y not <= x: the witness down-set, which is
    /// always the closure of x.
    std::vector<std::pair<std::pair<std::size_t, std::size_t>, Subset>> witnesses;
    std::string counterexample;
};

/// Checks the order axioms on a raw relation, then records separation
/// witnesses. Descending chains are finite at this size.
PriestleyReport priestley_check(const std::vector<std::vector<bool>>& leq);
PriestleyReport priestley_check(const FinitePoset& X);

struct CoverComplexity {
    std::size_t value = 0;
    /// The members of U_n used by the optimum found first in search order.
    std::vector<Subset> subcover;
};

/// Exact N(U_n), U_n = U v f^-1 U v ... v f^-(n-1) U, with N(U_0) = 1.
/// NotContinuous, NotACover, InvalidArgument for non-open members,
/// SearchBudget past 2^20 search nodes.
CoverComplexity cover_complexity(const FinitePoset& X, const SelfMap& f,
                                 const std::vector<Subset>& cover, std::size_t n);
/// N(U_0), ..., N(U_nmax).
std::vector<std::size_t> cover_complexity_series(const FinitePoset& X, const SelfMap& f,
                                                 const std::vector<Subset>& cover,
                                                 std::size_t nmax);

struct RecurrenceCertificate {
    Scalar epsilon;
    /// Coefficient of N(n-1): 1 when H(X,1) is already proper, otherwise the
    /// number of irreducible components of X.
    std::size_t lead = 1;
    std::vector<Integer> M;
    std::vector<long> N;
    /// H_1 > H_2 > ... > H_k, strictly decreasing; H_{k+1} is empty.
    std::vector<Subset> H;
    /// N(U_0..U_horizon).
    std::vector<std::size_t> complexity;
    std::size_t horizon = 0;
    /// max over n <= N_k of N(U_n) / (1+eps)^n.
    double C = 0;
    bool chain_strict = false;
    bool recurrence_holds = false;
    bool bound_holds = false;
    bool valid() const { return chain_strict && recurrence_holds && bound_holds; }
};

/// The H-chain construction with M_i (1+eps)^(1-N_i) <= eps/10^i, and the
/// recurrence N(n) <= lead N(n-1) + sum M_i N(n-N_i) checked for
/// N_k <= n <= horizon (the horizon is raised to N_k + 4 if smaller).
RecurrenceCertificate recurrence_certificate(const FinitePoset& X, const SelfMap& f,
                                             const std::vector<Subset>& cover,
                                             const Scalar& epsilon, std::size_t horizon = 0);

nlohmann::json to_json(const RecurrenceCertificate& c);

/// Periodic cycles of a total self-map, each listed from its least element,
/// ordered by that element.
std::vector<std::vector<std::size_t>> periodic_cycles(const SelfMap& f);

/// Basis of the signed measures mu with f_* mu = mu.
std::vector<std::vector<Scalar>> invariant_measure_basis(const SelfMap& f);

struct AtomicityReport {
    std::size_t cycles = 0;
    std::size_t dimension = 0;
    /// Every invariant measure is a combination of uniform cycle measures.
    bool atomic = false;
};

AtomicityReport atomicity_check(const SelfMap& f);

}  // namespace nadyn
