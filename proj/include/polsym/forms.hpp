#ifndef POLSYM_FORMS_HPP
#define POLSYM_FORMS_HPP

#include <complex>
#include <map>
#include <span>
#include <vector>

#include "polsym/multiindex.hpp"

namespace polsym {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

/// An m-homogeneous polynomial on C^n, stored as a sparse map from the
/// non-decreasing multi-index of each monomial to its coefficient.
/// Missing keys are zero.
class HomogeneousPolynomial {
public:
    HomogeneousPolynomial(int n, int m);

    int n() const { return n_; }
    int degree() const { return m_; }

    // Key must be non-decreasing with shape (n, m); overwrites any prior value.
    void set_coeff(const MultiIndex& j, Complex value);
    Complex coeff(const MultiIndex& j) const;
    Complex coeff(std::span<const int> entries) const;

    // Terms in lexicographic key order; zero coefficients are kept as stored.
    const std::map<std::vector<int>, Complex>& terms() const { return terms_; }

    double coeff_abs_sum() const;

private:
    int n_;
    int m_;
    std::map<std::vector<int>, Complex> terms_;
};

/// An m-linear form on C^n held as the dense tensor of its basis coefficients,
/// in the lexicographic flat layout (first slot most significant).
class MultilinearForm {
public:
    MultilinearForm(int n, int m, std::int64_t budget = kDefaultEntryBudget);

    int n() const { return n_; }
    int arity() const { return m_; }
    std::int64_t size() const { return static_cast<std::int64_t>(values_.size()); }

    Complex coeff(const MultiIndex& i) const;
    Complex coeff(std::span<const int> entries) const;
    void set_coeff(const MultiIndex& i, Complex value);
    void set_coeff(std::span<const int> entries, Complex value);

    std::vector<Complex>& values() { return values_; }
    const std::vector<Complex>& values() const { return values_; }

    double coeff_abs_sum() const;
    bool is_zero() const;

private:
    void check_index(std::span<const int> entries) const;

    int n_;
    int m_;
    std::vector<Complex> values_;
};

// --- construction and evaluation -------------------------------------------

// The non-symmetric form with the polynomial's coefficients on non-decreasing
// indices and zero elsewhere; its diagonal restriction reproduces P.
MultilinearForm lform_from_poly(const HomogeneousPolynomial& P,
                                std::int64_t budget = kDefaultEntryBudget);

Complex evaluate_form(const MultilinearForm& L, std::span<const ComplexVector> args);
Complex evaluate_poly(const HomogeneousPolynomial& P, std::span<const Complex> x);

// Coefficient vector of the linear functional obtained by freezing every slot
// except `slot` (1-based) at the given arguments; args[slot-1] is ignored.
ComplexVector slot_functional(const MultilinearForm& L,
                              std::span<const ComplexVector> args, int slot);

// The polynomial x -> L(x, ..., x).
HomogeneousPolynomial diagonal_restriction(const MultilinearForm& L);

// --- symmetrization ---------------------------------------------------------

// Average of L over permutations of its first k slots. Dispatches to the
// orbit-grouping path once k! passes 1e5; both paths are public so tests can
// compare them directly.
MultilinearForm partial_symmetrize(const MultilinearForm& L, int k);
MultilinearForm partial_symmetrize_perm_sum(const MultilinearForm& L, int k);
MultilinearForm partial_symmetrize_orbit(const MultilinearForm& L, int k);

MultilinearForm full_symmetrize(const MultilinearForm& L);

// Signed average (1/(2^m m!)) sum_{eps = +-1} eps_1...eps_m P(sum eps_t x^(t)),
// the unique symmetric form of P evaluated at the given arguments.
Complex polarize_eval(const HomogeneousPolynomial& P, std::span<const ComplexVector> args);

// Coefficient of the k-partial symmetrization of L_P at index i, computed from
// the orbit of the leading block instead of a permutation sum: zero unless the
// tail (i_{k+1},...,i_m) is non-decreasing and max(i_1..i_k) <= i_{k+1}.
Complex partial_sym_coeff_closed_form(const HomogeneousPolynomial& P,
                                      const MultiIndex& i, int k);

}  // namespace polsym

#endif
