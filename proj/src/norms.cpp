#include "polsym/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "polsym/rng.hpp"

namespace polsym {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

bool is_inf(double p) { return std::isinf(p); }

ComplexVector unit_basis_vector(const NormSpec& spec) {
    ComplexVector e(static_cast<std::size_t>(spec.n()), Complex(0.0));
    e[0] = 1.0;
    const double nrm = norm_eval(spec, e);
    e[0] /= nrm;
    return e;
}

ComplexVector random_unit_vector(const NormSpec& spec, Rng& rng) {
    ComplexVector x(static_cast<std::size_t>(spec.n()));
    for (auto& v : x) v = rng.cnormal();
    const double nrm = norm_eval(spec, x);
    if (nrm <= 0.0) return unit_basis_vector(spec);
    for (auto& v : x) v /= nrm;
    return x;
}

double abs_sum(std::span<const Complex> v) {
    double s = 0.0;
    for (const Complex& c : v) s += std::abs(c);
    return s;
}

// Phase vector with coordinate `pin` (0-based, or -1 for none) pinned to 1.
ComplexVector phase_vector(std::span<const double> theta, int n, int pin) {
    ComplexVector v(static_cast<std::size_t>(n));
    std::size_t t = 0;
    for (int j = 0; j < n; ++j) {
        if (j == pin) {
            v[static_cast<std::size_t>(j)] = 1.0;
        } else {
            v[static_cast<std::size_t>(j)] = Complex(std::cos(theta[t]), std::sin(theta[t]));
            ++t;
        }
    }
    return v;
}

}  // namespace

// --- NormSpec ----------------------------------------------------------------

NormSpec::NormSpec(Family family, double p, int n, std::vector<double> weights)
    : family_(family), p_(p), n_(n), weights_(std::move(weights)) {}

NormSpec NormSpec::lp(double p, int n) {
    if (n < 1) throw std::invalid_argument("NormSpec: dimension must be >= 1");
    if (std::isnan(p) || p < 1.0)
        throw std::invalid_argument("NormSpec: p must satisfy 1 <= p <= infinity");
    return NormSpec(Family::lp, p, n, {});
}

NormSpec NormSpec::weighted_lp(double p, std::vector<double> weights) {
    if (weights.empty()) throw std::invalid_argument("NormSpec: weight vector is empty");
    if (std::isnan(p) || p < 1.0)
        throw std::invalid_argument("NormSpec: p must satisfy 1 <= p <= infinity");
    for (double w : weights)
        if (!(w > 0.0) || std::isinf(w))
            throw std::invalid_argument("NormSpec: weights must be positive and finite");
    const int n = static_cast<int>(weights.size());
    return NormSpec(Family::weighted_lp, p, n, std::move(weights));
}

double norm_eval(const NormSpec& spec, std::span<const Complex> x) {
    if (static_cast<int>(x.size()) != spec.n())
        throw std::invalid_argument("norm_eval: dimension mismatch");
    const bool weighted = spec.family() == NormSpec::Family::weighted_lp;
    const double p = spec.p();
    if (is_inf(p)) {
        double best = 0.0;
        for (int j = 0; j < spec.n(); ++j) {
            const double v = std::abs(x[static_cast<std::size_t>(j)]) *
                             (weighted ? spec.weights()[static_cast<std::size_t>(j)] : 1.0);
            best = std::max(best, v);
        }
        return best;
    }
    if (p == 1.0) {
        double s = 0.0;
        for (int j = 0; j < spec.n(); ++j)
            s += std::abs(x[static_cast<std::size_t>(j)]) *
                 (weighted ? spec.weights()[static_cast<std::size_t>(j)] : 1.0);
        return s;
    }
    double s = 0.0;
    for (int j = 0; j < spec.n(); ++j)
        s += (weighted ? spec.weights()[static_cast<std::size_t>(j)] : 1.0) *
             std::pow(std::abs(x[static_cast<std::size_t>(j)]), p);
    return std::pow(s, 1.0 / p);
}

ComplexVector dual_norming_vector(const NormSpec& spec, std::span<const Complex> c) {
    const int n = spec.n();
    if (static_cast<int>(c.size()) != n)
        throw std::invalid_argument("dual_norming_vector: dimension mismatch");
    bool nonzero = false;
    for (const Complex& v : c) nonzero = nonzero || v != Complex(0.0);
    if (!nonzero) throw std::invalid_argument("dual_norming_vector: zero coefficient vector");

    const bool weighted = spec.family() == NormSpec::Family::weighted_lp;
    const double p = spec.p();
    auto w_at = [&](int j) {
        return weighted ? spec.weights()[static_cast<std::size_t>(j)] : 1.0;
    };

    std::vector<double> mag(static_cast<std::size_t>(n), 0.0);
    if (is_inf(p)) {
        for (int j = 0; j < n; ++j) mag[static_cast<std::size_t>(j)] = 1.0 / w_at(j);
    } else if (p == 1.0) {
        int best = 0;
        double best_val = -1.0;
        for (int j = 0; j < n; ++j) {
            const double d = std::abs(c[static_cast<std::size_t>(j)]) / w_at(j);
            if (d > best_val) {  // strict: ties keep the lowest index
                best_val = d;
                best = j;
            }
        }
        mag[static_cast<std::size_t>(best)] = 1.0 / w_at(best);
    } else {
        const double q = p / (p - 1.0);
        std::vector<double> d(static_cast<std::size_t>(n));
        double dq = 0.0;
        for (int j = 0; j < n; ++j) {
            d[static_cast<std::size_t>(j)] =
                std::abs(c[static_cast<std::size_t>(j)]) * std::pow(w_at(j), -1.0 / p);
            dq += std::pow(d[static_cast<std::size_t>(j)], q);
        }
        dq = std::pow(dq, 1.0 / q);
        for (int j = 0; j < n; ++j)
            mag[static_cast<std::size_t>(j)] =
                std::pow(d[static_cast<std::size_t>(j)] / dq, q - 1.0) * std::pow(w_at(j), -1.0 / p);
    }

    ComplexVector x(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        const Complex cj = c[static_cast<std::size_t>(j)];
        const double a = std::abs(cj);
        const Complex phase = a > 0.0 ? std::conj(cj) / a : Complex(1.0);
        x[static_cast<std::size_t>(j)] = phase * mag[static_cast<std::size_t>(j)];
    }
    const double nrm = norm_eval(spec, x);
    for (auto& v : x) v /= nrm;
    return x;
}

double dual_norm(const NormSpec& spec, std::span<const Complex> c) {
    const ComplexVector x = dual_norming_vector(spec, c);
    Complex acc = 0.0;
    for (std::size_t j = 0; j < x.size(); ++j) acc += c[j] * x[j];
    return acc.real();
}

const char* norm_method_name(NormMethod method) {
    switch (method) {
        case NormMethod::alternating: return "alternating";
        case NormMethod::phase_grid_bracket: return "phase_grid_bracket";
        case NormMethod::exhaustive: return "exhaustive";
    }
    return "unknown";
}

// --- alternating maximization ---------------------------------------------------

NormEstimate form_norm_lower(const MultilinearForm& L, const NormSpec& spec,
                             const AscentOptions& opts) {
    if (spec.n() != L.n())
        throw std::invalid_argument("form_norm_lower: norm dimension != form dimension");
    const int m = L.arity();

    NormEstimate est;
    est.method = NormMethod::alternating;
    est.seed = opts.seed;
    est.restarts = opts.restarts;

    if (L.is_zero()) {
        est.witness.assign(static_cast<std::size_t>(m), unit_basis_vector(spec));
        return est;
    }

    double best_val = -1.0;
    std::vector<ComplexVector> best_args;
    int total_sweeps = 0;

    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
        std::vector<ComplexVector> args;
        args.reserve(static_cast<std::size_t>(m));
        for (int t = 0; t < m; ++t) args.push_back(random_unit_vector(spec, rng));

        double val = std::abs(evaluate_form(L, args));
        for (int sweep = 0; sweep < opts.max_iters; ++sweep) {
            const double sweep_start = val;
            for (int s = 1; s <= m; ++s) {
                const ComplexVector g = slot_functional(L, args, s);
                if (abs_sum(g) < 1e-280) continue;  // degenerate slot, keep current vector
                ComplexVector x = dual_norming_vector(spec, g);
                Complex pairing = 0.0;
                for (std::size_t j = 0; j < x.size(); ++j) pairing += g[j] * x[j];
                const double new_val = std::abs(pairing);
                if (new_val + 1e-9 * (1.0 + new_val) < val)
                    throw std::logic_error("form_norm_lower: ascent objective decreased");
                args[static_cast<std::size_t>(s - 1)] = std::move(x);
                val = new_val;
            }
            ++total_sweeps;
            if (val - sweep_start < opts.tol * std::max(1.0, val)) break;
        }
        if (val > best_val) {
            best_val = val;
            best_args = args;
        }
    }

    est.iters = total_sweeps;
    est.witness = std::move(best_args);
    est.lower = std::abs(evaluate_form(L, est.witness));
    return est;
}

NormEstimate poly_norm_lower(const HomogeneousPolynomial& P, const NormSpec& spec,
                             const AscentOptions& opts) {
    if (spec.n() != P.n())
        throw std::invalid_argument("poly_norm_lower: norm dimension != polynomial dimension");
    const int m = P.degree();

    NormEstimate est;
    est.method = NormMethod::alternating;
    est.seed = opts.seed;
    est.restarts = opts.restarts;

    if (P.coeff_abs_sum() == 0.0) {
        est.witness.assign(1, unit_basis_vector(spec));
        return est;
    }

    const MultilinearForm sym = full_symmetrize(lform_from_poly(P));
    double best_val = -1.0;
    ComplexVector best_x;
    int total_steps = 0;

    for (int r = 0; r < opts.restarts; ++r) {
        Rng rng(derive_seed(opts.seed, static_cast<std::uint64_t>(r)));
        ComplexVector x = random_unit_vector(spec, rng);
        double val = std::abs(evaluate_poly(P, x));

        for (int step = 0; step < opts.max_iters; ++step) {
            std::vector<ComplexVector> tied(static_cast<std::size_t>(m), x);
            const ComplexVector g = slot_functional(sym, tied, m);
            if (abs_sum(g) < 1e-280) break;
            ComplexVector y = dual_norming_vector(spec, g);
            const double new_val = std::abs(evaluate_poly(P, y));
            ++total_steps;
            if (new_val > val) {
                x = std::move(y);
                const bool converged = new_val - val < opts.tol * std::max(1.0, new_val);
                val = new_val;
                if (converged) break;
            } else {
                break;  // proposal did not improve |P|; keep the safeguarded iterate
            }
        }
        if (val > best_val) {
            best_val = val;
            best_x = x;
        }
    }

    est.iters = total_steps;
    est.witness.assign(1, best_x);
    est.lower = std::abs(evaluate_poly(P, best_x));
    return est;
}

// --- certified brackets -----------------------------------------------------------

namespace {

void check_bracket_spec(const NormSpec& spec, int n, const char* where) {
    if (spec.family() != NormSpec::Family::lp || !is_inf(spec.p()))
        throw std::invalid_argument(std::string(where) +
                                    ": bracketing is implemented for the plain sup norm only");
    if (spec.n() != n) throw std::invalid_argument(std::string(where) + ": dimension mismatch");
}

std::int64_t checked_grid_points(int grid, int dims, std::int64_t budget, const char* where) {
    if (grid < 2) throw std::invalid_argument(std::string(where) + ": grid must be >= 2");
    std::int64_t points = 1;
    for (int d = 0; d < dims; ++d) {
        if (points > budget / grid)
            throw BudgetError(std::string(where) + ": phase grid exceeds point budget");
        points *= grid;
    }
    return points;
}

// One coordinate-refinement sweep: for each free phase, scan `refine_grid`
// candidates spanning one base-grid step centered on the current value and
// keep the best. Only improves the lower bound; the upper bound stays
// anchored to the base grid.
template <typename Objective>
void refine_phases(std::vector<double>& theta, int grid, int refine_grid, int passes,
                   double& best_val, const Objective& objective) {
    if (theta.empty() || passes <= 0 || refine_grid < 1) return;
    const double window = kTwoPi / grid;
    for (int pass = 0; pass < passes; ++pass) {
        for (std::size_t d = 0; d < theta.size(); ++d) {
            const double base = theta[d];
            double arg_best = base;
            for (int r = 0; r < refine_grid; ++r) {
                const double cand =
                    base + window * ((r + 0.5) / static_cast<double>(refine_grid) - 0.5);
                theta[d] = cand;
                const double v = objective(theta);
                if (v > best_val) {
                    best_val = v;
                    arg_best = cand;
                }
            }
            theta[d] = arg_best;
        }
    }
}

}  // namespace

NormEstimate form_norm_bracket(const MultilinearForm& L, const NormSpec& spec,
                               const BracketOptions& opts) {
    check_bracket_spec(spec, L.n(), "form_norm_bracket");
    const int n = L.n();
    const int m = L.arity();
    const int grid = opts.grid;

    NormEstimate est;
    est.method = NormMethod::phase_grid_bracket;
    est.grid = grid;
    est.iters = opts.refine_passes;

    const double mass = L.coeff_abs_sum();
    if (mass == 0.0) {
        est.upper = 0.0;
        est.witness.assign(static_cast<std::size_t>(m), ComplexVector(static_cast<std::size_t>(n), Complex(1.0)));
        return est;
    }

    const int dims = (m - 1) * (n - 1);
    checked_grid_points(grid, dims, opts.budget_points, "form_norm_bracket");

    // theta holds the free phases: slots 1..m-1, coordinates 2..n of each
    // (coordinate 1 of every slot is pinned to phase 0 by slotwise phase
    // invariance of |L|). The last slot is maximized exactly by l_1 duality.
    auto args_of = [&](std::span<const double> theta) {
        std::vector<ComplexVector> args(static_cast<std::size_t>(m));
        for (int t = 0; t + 1 < m; ++t)
            args[static_cast<std::size_t>(t)] =
                phase_vector(theta.subspan(static_cast<std::size_t>(t) * (n - 1),
                                           static_cast<std::size_t>(n - 1)),
                             n, 0);
        return args;
    };
    auto objective = [&](std::span<const double> theta) {
        const std::vector<ComplexVector> args = args_of(theta);
        return abs_sum(slot_functional(L, args, m));
    };

    std::vector<double> best_theta(static_cast<std::size_t>(dims), 0.0);
    double best_val = -1.0;
    std::vector<int> digits(static_cast<std::size_t>(dims), 0);
    std::vector<double> theta(static_cast<std::size_t>(dims), 0.0);
    for (;;) {
        for (std::size_t d = 0; d < theta.size(); ++d)
            theta[d] = kTwoPi * digits[d] / grid;
        const double v = objective(theta);
        if (v > best_val) {
            best_val = v;
            best_theta = theta;
        }
        int d = dims - 1;
        while (d >= 0 && digits[static_cast<std::size_t>(d)] == grid - 1) {
            digits[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
        ++digits[static_cast<std::size_t>(d)];
    }

    refine_phases(best_theta, grid, opts.refine_grid, opts.refine_passes, best_val, objective);

    std::vector<ComplexVector> witness = args_of(best_theta);
    const ComplexVector g = slot_functional(L, witness, m);
    if (abs_sum(g) > 0.0) {
        witness[static_cast<std::size_t>(m - 1)] = dual_norming_vector(spec, g);
    } else {
        witness[static_cast<std::size_t>(m - 1)] =
            ComplexVector(static_cast<std::size_t>(n), Complex(1.0));
    }

    est.witness = std::move(witness);
    est.lower = std::abs(evaluate_form(L, est.witness));
    est.upper = est.lower + m * (2.0 * std::sin(kTwoPi / (2.0 * grid))) * mass;
    return est;
}

NormEstimate poly_norm_bracket(const HomogeneousPolynomial& P, const NormSpec& spec,
                               const BracketOptions& opts) {
    check_bracket_spec(spec, P.n(), "poly_norm_bracket");
    const int n = P.n();
    const int m = P.degree();
    const int grid = opts.grid;

    NormEstimate est;
    est.method = NormMethod::phase_grid_bracket;
    est.grid = grid;
    est.iters = opts.refine_passes;

    const double mass = P.coeff_abs_sum();
    if (mass == 0.0) {
        est.upper = 0.0;
        est.witness.assign(1, ComplexVector(static_cast<std::size_t>(n), Complex(1.0)));
        return est;
    }

    const int dims = n - 1;  // coordinate 1 pinned by global phase invariance of |P|
    checked_grid_points(grid, dims, opts.budget_points, "poly_norm_bracket");

    auto objective = [&](std::span<const double> theta) {
        return std::abs(evaluate_poly(P, phase_vector(theta, n, 0)));
    };

    std::vector<double> best_theta(static_cast<std::size_t>(dims), 0.0);
    double best_val = -1.0;
    std::vector<int> digits(static_cast<std::size_t>(dims), 0);
    std::vector<double> theta(static_cast<std::size_t>(dims), 0.0);
    for (;;) {
        for (std::size_t d = 0; d < theta.size(); ++d)
            theta[d] = kTwoPi * digits[d] / grid;
        const double v = objective(theta);
        if (v > best_val) {
            best_val = v;
            best_theta = theta;
        }
        int d = dims - 1;
        while (d >= 0 && digits[static_cast<std::size_t>(d)] == grid - 1) {
            digits[static_cast<std::size_t>(d)] = 0;
            --d;
        }
        if (d < 0) break;
        ++digits[static_cast<std::size_t>(d)];
    }

    refine_phases(best_theta, grid, opts.refine_grid, opts.refine_passes, best_val, objective);

    est.witness.assign(1, phase_vector(best_theta, n, 0));
    est.lower = std::abs(evaluate_poly(P, est.witness[0]));
    est.upper = est.lower + m * (2.0 * std::sin(kTwoPi / (2.0 * grid))) * mass;
    return est;
}

// --- Schur multiplier norm estimation ------------------------------------------------

namespace {

MultilinearForm gaussian_form(int n, int m, Rng& rng) {
    MultilinearForm L(n, m);
    for (Complex& c : L.values()) c = rng.cnormal();
    return L;
}

MultilinearForm rank_one_phase_form(int n, int m, Rng& rng) {
    std::vector<ComplexVector> phase(static_cast<std::size_t>(m),
                                     ComplexVector(static_cast<std::size_t>(n)));
    for (auto& slot : phase)
        for (auto& v : slot) v = rng.unit_phase();

    MultilinearForm L(n, m);
    std::vector<int> e(static_cast<std::size_t>(m), 1);
    std::int64_t o = 0;
    do {
        Complex prod = 1.0;
        for (int t = 0; t < m; ++t)
            prod *= phase[static_cast<std::size_t>(t)][static_cast<std::size_t>(e[static_cast<std::size_t>(t)] - 1)];
        L.values()[static_cast<std::size_t>(o)] = prod;
        ++o;
    } while (detail::advance_entries(n, e));
    return L;
}

}  // namespace

double schur_mu_lower(const SchurMultiplier& A, const NormSpec& spec, int trials,
                      const MuOptions& opts) {
    if (spec.n() != A.n())
        throw std::invalid_argument("schur_mu_lower: norm dimension != multiplier dimension");
    if (trials < 1) throw std::invalid_argument("schur_mu_lower: trials must be >= 1");

    double best = 0.0;
    for (int t = 0; t < trials; ++t) {
        const std::uint64_t trial_seed = derive_seed(opts.seed, static_cast<std::uint64_t>(t));
        Rng rng(trial_seed);
        const MultilinearForm L = (t % 2 == 0) ? gaussian_form(A.n(), A.arity(), rng)
                                               : rank_one_phase_form(A.n(), A.arity(), rng);

        AscentOptions den_opts = opts.ascent;
        den_opts.seed = derive_seed(trial_seed, 1);
        const NormEstimate den = form_norm_lower(L, spec, den_opts);
        if (den.lower < 1e-12) continue;

        AscentOptions num_opts = opts.ascent;
        num_opts.seed = derive_seed(trial_seed, 2);
        const NormEstimate num = form_norm_lower(schur_product(A, L), spec, num_opts);
        best = std::max(best, num.lower / den.lower);
    }
    return best;
}

SchurMultiplier triangle_projection_matrix(int n) { return triangle_multiplier(1, 2, n, 2); }

SchurMultiplier identity_matrix(int n) { return diag_multiplier(1, 2, n, 2); }

}  // namespace polsym
