#pragma once

// Degree growth of plane maps, dynamical degrees of monomial maps, and the
// volume and Key Lemma bounds for products of P^1 morphisms.

#include "nadyn/mpoly.hpp"

#include <json.hpp>

#include <cstdint>
#include <vector>

namespace nadyn {

/// Limits on intermediate symbolic size; exceeding either raises
/// BudgetExceeded.
struct SymbolicBudget {
    std::size_t coeff_bits = 4096;
    std::size_t terms = 200000;
};

/// [f0 : f1 : f2], homogeneous of a common degree >= 1, with no common factor
/// and content 1.
class PlaneMap {
public:
    /// Removes the common factor; DegenerateMap if nothing of positive degree
    /// is left, InvalidArgument for inhomogeneous input.
    static PlaneMap normalize(std::array<MPoly, 3> f);

    const std::array<MPoly, 3>& components() const noexcept { return f_; }
    long degree() const { return f_[0].degree(); }
    std::string str() const;

private:
    explicit PlaneMap(std::array<MPoly, 3> f) : f_(std::move(f)) {}
    std::array<MPoly, 3> f_;
};

/// f o g with the common factor removed.
PlaneMap compose(const PlaneMap& f, const PlaneMap& g, const SymbolicBudget& budget = {});

struct DegreeSequence {
    /// entries[n-1] = deg(f^n).
    std::vector<long> entries;
    /// deg(f^nmax)^(1/nmax).
    double lambda_estimate = 0;
    /// lambda_1 >= 1 for a dominant map, and lambda_1 = inf_n deg(f^n)^(1/n).
    double lambda_lower = 0;
    double lambda_upper = 0;

    /// deg(f^(n+m)) <= deg(f^n) deg(f^m) for every recorded n + m.
    bool submultiplicative() const;
};

DegreeSequence plane_degree_sequence(const PlaneMap& f, unsigned nmax,
                                     const SymbolicBudget& budget = {});

/// Certified value of lambda_k: the interval [lower, upper] contains it.
struct CertifiedReal {
    double value = 0;
    double lower = 0;
    double upper = 0;
    double width() const { return upper - lower; }
};

/// lambda_0 .. lambda_d for the monomial map with exponent matrix A:
/// lambda_k = product of the k largest |eigenvalues| of A, each bracketed to
/// width < 1e-9. SingularMatrix when det A = 0; CertificationFailed if the
/// root isolation cannot reach the required width.
std::vector<CertifiedReal> monomial_dynamical_degrees(const std::vector<std::vector<std::int64_t>>& A);

/// c_1(L_n)^2 for f1 x f2 on P^1 x P^1, deg f_i = d_i:
/// sum_{i,j<n} (d1^i d2^j + d1^j d2^i) = 2 (sum_{i<n} d1^i)(sum_{j<n} d2^j).
Integer product_map_volume(unsigned d1, unsigned d2, unsigned n);
/// The same number by the explicit double sum.
Integer product_map_volume_bruteforce(unsigned d1, unsigned d2, unsigned n);

struct KeyLemmaReport {
    /// C[n-1] = volume(n) / (d1 d2 + eps)^n.
    std::vector<Scalar> C;
    Scalar sup;
    unsigned sup_at = 1;
    /// First n from which C is non-increasing up to nmax.
    unsigned tail_start = 1;
    /// tail_start <= nmax / 2.
    bool bounded = false;
};

KeyLemmaReport key_lemma_check(unsigned d1, unsigned d2, const Scalar& eps, unsigned nmax);

/// alpha <= 2 (alpha.beta)/(beta^2) beta on P^1 x P^1, componentwise, for
/// alpha = (a, b) nef and beta = (c, e) with c, e > 0.
bool siu_surface_check(const std::array<Scalar, 2>& alpha, const std::array<Scalar, 2>& beta);

/// {"type":"plane","components":[[["1","1,0,1"],["1","0,0,2"]], ...]}
nlohmann::json to_json(const PlaneMap& f);
PlaneMap plane_map_from_json(const nlohmann::json& j);

}  // namespace nadyn
