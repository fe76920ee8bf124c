#ifndef POLSYM_SCHUR_HPP
#define POLSYM_SCHUR_HPP

#include "polsym/forms.hpp"

namespace polsym {

/// An entrywise multiplier over {1..n}^m, stored like a form's coefficient
/// tensor. The named constructors below produce 0/1 tensors except for
/// sym_step_multiplier, whose nonzero entries are k/u for 1 <= u <= k.
class SchurMultiplier {
public:
    SchurMultiplier(int n, int m, std::int64_t budget = kDefaultEntryBudget);

    int n() const { return n_; }
    int arity() const { return m_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    Complex coeff(const MultiIndex& i) const;
    Complex coeff(std::span<const int> entries) const;
    void set_coeff(std::span<const int> entries, Complex value);

    std::vector<Complex>& values() { return values_; }
    const std::vector<Complex>& values() const { return values_; }

private:
    int n_;
    int m_;
    std::vector<Complex> values_;
};

// Entrywise products. Commutative and associative on multipliers; the
// all-ones multiplier is the unit.
SchurMultiplier schur_product(const SchurMultiplier& a, const SchurMultiplier& b);
MultilinearForm schur_product(const SchurMultiplier& a, const MultilinearForm& b);

SchurMultiplier ones_multiplier(int n, int m, std::int64_t budget = kDefaultEntryBudget);

// 1 where i_u = i_v (a generalized diagonal); u, v are 1-based slots.
SchurMultiplier diag_multiplier(int u, int v, int n, int m,
                                std::int64_t budget = kDefaultEntryBudget);

// 1 where i_u <= i_v (a generalized upper triangle).
SchurMultiplier triangle_multiplier(int u, int v, int n, int m,
                                    std::int64_t budget = kDefaultEntryBudget);

// Indicator of #{u' <= k : i_{u'} = i_k} = u, computed by counting.
SchurMultiplier tail_multiplicity_indicator(int k, int u, int n, int m,
                                            std::int64_t budget = kDefaultEntryBudget);

// Same indicator expanded as a sum over u-subsets Q of {1..k} of
// (prod_{q in Q} D^{q,k}) . (prod_{q notin Q} (1 - D^{q,k})); kept as a
// cross-check of the counting construction. Guarded at k <= 12.
SchurMultiplier tail_multiplicity_indicator_subsets(int k, int u, int n, int m,
                                                    std::int64_t budget = kDefaultEntryBudget);

// The multiplier that turns the k-partial symmetrization of L_P into the
// (k-1)-partial one: entry k / #{u <= k : i_u = i_k} where
// max(i_1..i_{k-1}) <= i_k, zero elsewhere.
SchurMultiplier sym_step_multiplier(int k, int n, int m,
                                    std::int64_t budget = kDefaultEntryBudget);

// The same multiplier assembled from its factorization
// (prod_{u<k} T^{u,k}) . (sum_u (k/u) A^{k,u}); the empty product at k=1 is
// the all-ones multiplier. Entrywise equal to sym_step_multiplier.
SchurMultiplier sym_step_multiplier_factored(int k, int n, int m,
                                             std::int64_t budget = kDefaultEntryBudget);

// sym_step_multiplier(k) applied to the k-partial symmetrization of L_P;
// equals the (k-1)-partial symmetrization. Requires 2 <= k <= m.
MultilinearForm apply_sym_step(const HomogeneousPolynomial& P, int k,
                               std::int64_t budget = kDefaultEntryBudget);

}  // namespace polsym

#endif
