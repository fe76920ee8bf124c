#ifndef POLSYM_NORMS_HPP
#define POLSYM_NORMS_HPP

#include <optional>

#include "polsym/schur.hpp"

namespace polsym {

/// A 1-unconditional norm on C^n: either plain l_p (1 <= p <= infinity) or a
/// weighted l_p with positive weights, (sum_k w_k |x_k|^p)^(1/p)
/// (max_k w_k |x_k| at p = infinity).
class NormSpec {
public:
    enum class Family { lp, weighted_lp };

    static NormSpec lp(double p, int n);
    static NormSpec weighted_lp(double p, std::vector<double> weights);

    Family family() const { return family_; }
    double p() const { return p_; }
    int n() const { return n_; }
    const std::vector<double>& weights() const { return weights_; }

private:
    NormSpec(Family family, double p, int n, std::vector<double> weights);

    Family family_;
    double p_;
    int n_;
    std::vector<double> weights_;  // empty for plain lp
};

double norm_eval(const NormSpec& spec, std::span<const Complex> x);

// A unit vector (norm_eval == 1) maximizing Re sum_k c_k x_k; the achieved
// value is the dual norm of c. Ties in the l_1 dual go to the lowest index.
ComplexVector dual_norming_vector(const NormSpec& spec, std::span<const Complex> c);
double dual_norm(const NormSpec& spec, std::span<const Complex> c);

enum class NormMethod { alternating, phase_grid_bracket, exhaustive };
const char* norm_method_name(NormMethod method);

/// A witnessed estimate of sup |L(x^(1),...,x^(m))| over unit balls:
/// `lower` is always attained by `witness`; `upper`, when present, is a
/// certified bound containing the true value in [lower, upper].
struct NormEstimate {
    double lower = 0.0;
    std::optional<double> upper;
    std::vector<ComplexVector> witness;
    NormMethod method = NormMethod::alternating;
    std::uint64_t seed = 0;
    int restarts = 0;
    int iters = 0;  // total ascent sweeps, or refinement passes for brackets
    int grid = 0;   // angular resolution when bracketing
};

struct AscentOptions {
    int restarts = 32;
    int max_iters = 200;   // sweeps per restart
    double tol = 1e-12;    // stop once a sweep improves by less than this
    std::uint64_t seed = 0;
};

// Alternating maximization: cyclically replace each slot by the exact dual
// maximizer of the functional obtained by freezing the others. Monotone per
// update; the returned lower bound is re-evaluated from the witness.
NormEstimate form_norm_lower(const MultilinearForm& L, const NormSpec& spec,
                             const AscentOptions& opts = {});

// Single-vector ascent for sup |P(x)| over one unit ball: the symmetric form
// of P is used to propose the next iterate, and a step is accepted only when
// it improves |P|.
NormEstimate poly_norm_lower(const HomogeneousPolynomial& P, const NormSpec& spec,
                             const AscentOptions& opts = {});

struct BracketOptions {
    int grid = 64;          // phase samples per free coordinate
    int refine_passes = 1;  // coordinate refinement sweeps from the best grid point
    int refine_grid = 64;   // candidate phases per coordinate within one grid step
    std::int64_t budget_points = 10'000'000;
};

// Certified bracket for the sup-norm case: the l_infinity supremum of a
// multilinear modulus is attained at unit-modulus coordinates, so phases are
// enumerated on a grid for slots 1..m-1 (first coordinate pinned by phase
// invariance) while the last slot is maximized exactly by l_1 duality.
// upper = lower + m * (2 sin(pi/G)) * sum_i |c_i|, which dominates the
// per-coordinate chord error of the grid.
NormEstimate form_norm_bracket(const MultilinearForm& L, const NormSpec& spec,
                               const BracketOptions& opts = {});

// Same scheme on the diagonal for sup |P(x)|: one phase vector on the grid,
// upper = lower + m * (2 sin(pi/G)) * sum_j |c_j(P)|.
NormEstimate poly_norm_bracket(const HomogeneousPolynomial& P, const NormSpec& spec,
                               const BracketOptions& opts = {});

struct MuOptions {
    AscentOptions ascent;
    std::uint64_t seed = 0;
};

// Best observed ratio form_norm_lower(A . L) / form_norm_lower(L) over
// `trials` sampled forms; trials alternate between Gaussian coefficient
// tensors and rank-one unit-phase tensors.
double schur_mu_lower(const SchurMultiplier& A, const NormSpec& spec, int trials,
                      const MuOptions& opts = {});

// The n x n upper-triangle and identity patterns as 2-slot multipliers.
SchurMultiplier triangle_projection_matrix(int n);
SchurMultiplier identity_matrix(int n);

}  // namespace polsym

#endif
