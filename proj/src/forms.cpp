#include "polsym/forms.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace polsym {

namespace {

void check_vector_dim(int n, std::span<const Complex> x, const char* where) {
    if (static_cast<int>(x.size()) != n)
        throw std::invalid_argument(std::string(where) + ": vector dimension " +
                                    std::to_string(x.size()) + " != n = " + std::to_string(n));
}

void check_args(int n, int m, std::span<const ComplexVector> args, const char* where) {
    if (static_cast<int>(args.size()) != m)
        throw std::invalid_argument(std::string(where) + ": got " + std::to_string(args.size()) +
                                    " argument vectors, expected m = " + std::to_string(m));
    for (const auto& x : args) check_vector_dim(n, x, where);
}

void check_slot_range(int k, int m, const char* where) {
    if (k < 1 || k > m)
        throw std::out_of_range(std::string(where) + ": k = " + std::to_string(k) +
                                " outside 1..m = " + std::to_string(m));
}

// Contracts the last slot of a dense tensor over {1..n}^len against x.
void contract_last(int n, std::vector<Complex>& cur, std::span<const Complex> x) {
    const std::int64_t out_size = static_cast<std::int64_t>(cur.size()) / n;
    for (std::int64_t o = 0; o < out_size; ++o) {
        Complex acc = 0.0;
        const Complex* row = cur.data() + o * n;
        for (int j = 0; j < n; ++j) acc += row[j] * x[static_cast<std::size_t>(j)];
        cur[static_cast<std::size_t>(o)] = acc;
    }
    cur.resize(static_cast<std::size_t>(out_size));
}

// Contracts the first slot: cur has `len` slots, result has len-1.
void contract_first(int n, std::vector<Complex>& cur, std::span<const Complex> x) {
    const std::int64_t out_size = static_cast<std::int64_t>(cur.size()) / n;
    std::vector<Complex> next(static_cast<std::size_t>(out_size), Complex(0.0));
    for (int j = 0; j < n; ++j) {
        const Complex xj = x[static_cast<std::size_t>(j)];
        const Complex* block = cur.data() + static_cast<std::int64_t>(j) * out_size;
        for (std::int64_t o = 0; o < out_size; ++o)
            next[static_cast<std::size_t>(o)] += block[o] * xj;
    }
    cur = std::move(next);
}

}  // namespace

// --- HomogeneousPolynomial ---------------------------------------------------

HomogeneousPolynomial::HomogeneousPolynomial(int n, int m) : n_(n), m_(m) {
    if (n < 1) throw std::invalid_argument("polynomial: dimension n must be >= 1");
    if (m < 1) throw std::invalid_argument("polynomial: degree m must be >= 1");
}

void HomogeneousPolynomial::set_coeff(const MultiIndex& j, Complex value) {
    if (j.n() != n_ || j.degree() != m_)
        throw std::invalid_argument("polynomial: key shape mismatch");
    if (!j.is_nondecreasing())
        throw std::invalid_argument("polynomial: key must be non-decreasing");
    terms_[j.entries()] = value;
}

Complex HomogeneousPolynomial::coeff(std::span<const int> entries) const {
    auto it = terms_.find(std::vector<int>(entries.begin(), entries.end()));
    return it == terms_.end() ? Complex(0.0) : it->second;
}

Complex HomogeneousPolynomial::coeff(const MultiIndex& j) const { return coeff(j.span()); }

double HomogeneousPolynomial::coeff_abs_sum() const {
    double s = 0.0;
    for (const auto& [key, c] : terms_) s += std::abs(c);
    return s;
}

// --- MultilinearForm ----------------------------------------------------------

MultilinearForm::MultilinearForm(int n, int m, std::int64_t budget) : n_(n), m_(m) {
    const std::int64_t total = index_count(n, m);
    if (total > budget)
        throw BudgetError("form: n^m = " + std::to_string(total) + " exceeds budget " +
                          std::to_string(budget));
    values_.assign(static_cast<std::size_t>(total), Complex(0.0));
}

void MultilinearForm::check_index(std::span<const int> entries) const {
    if (static_cast<int>(entries.size()) != m_)
        throw std::invalid_argument("form: index length mismatch");
    for (int v : entries)
        if (v < 1 || v > n_) throw std::out_of_range("form: index entry outside 1..n");
}

Complex MultilinearForm::coeff(std::span<const int> entries) const {
    check_index(entries);
    return values_[static_cast<std::size_t>(detail::flat_offset(n_, entries))];
}

Complex MultilinearForm::coeff(const MultiIndex& i) const { return coeff(i.span()); }

void MultilinearForm::set_coeff(std::span<const int> entries, Complex value) {
    check_index(entries);
    values_[static_cast<std::size_t>(detail::flat_offset(n_, entries))] = value;
}

void MultilinearForm::set_coeff(const MultiIndex& i, Complex value) {
    set_coeff(i.span(), value);
}

double MultilinearForm::coeff_abs_sum() const {
    double s = 0.0;
    for (const Complex& c : values_) s += std::abs(c);
    return s;
}

bool MultilinearForm::is_zero() const {
    return std::all_of(values_.begin(), values_.end(),
                       [](const Complex& c) { return c == Complex(0.0); });
}

// --- construction and evaluation ----------------------------------------------

MultilinearForm lform_from_poly(const HomogeneousPolynomial& P, std::int64_t budget) {
    MultilinearForm L(P.n(), P.degree(), budget);
    for (const auto& [key, c] : P.terms())
        L.values()[static_cast<std::size_t>(detail::flat_offset(P.n(), key))] = c;
    return L;
}

Complex evaluate_form(const MultilinearForm& L, std::span<const ComplexVector> args) {
    check_args(L.n(), L.arity(), args, "evaluate_form");
    std::vector<Complex> cur = L.values();
    for (int t = L.arity() - 1; t >= 0; --t) contract_last(L.n(), cur, args[t]);
    return cur[0];
}

Complex evaluate_poly(const HomogeneousPolynomial& P, std::span<const Complex> x) {
    check_vector_dim(P.n(), x, "evaluate_poly");
    Complex acc = 0.0;
    for (const auto& [key, c] : P.terms()) {
        Complex prod = c;
        for (int v : key) prod *= x[static_cast<std::size_t>(v - 1)];
        acc += prod;
    }
    return acc;
}

ComplexVector slot_functional(const MultilinearForm& L,
                              std::span<const ComplexVector> args, int slot) {
    const int m = L.arity();
    check_slot_range(slot, m, "slot_functional");
    if (static_cast<int>(args.size()) != m)
        throw std::invalid_argument("slot_functional: argument count != arity");
    for (int t = 0; t < m; ++t)
        if (t != slot - 1) check_vector_dim(L.n(), args[t], "slot_functional");

    std::vector<Complex> cur = L.values();
    for (int t = m; t > slot; --t) contract_last(L.n(), cur, args[t - 1]);
    for (int t = 1; t < slot; ++t) contract_first(L.n(), cur, args[t - 1]);
    return cur;  // length n, indexed by the free slot's coordinate
}

HomogeneousPolynomial diagonal_restriction(const MultilinearForm& L) {
    HomogeneousPolynomial P(L.n(), L.arity());
    std::map<std::vector<int>, Complex> acc;
    std::vector<int> e(static_cast<std::size_t>(L.arity()), 1);
    std::int64_t o = 0;
    do {
        std::vector<int> sorted = e;
        std::sort(sorted.begin(), sorted.end());
        acc[sorted] += L.values()[static_cast<std::size_t>(o)];
        ++o;
    } while (detail::advance_entries(L.n(), e));
    for (auto& [key, c] : acc) P.set_coeff(MultiIndex(key, L.n()), c);
    return P;
}

// --- symmetrization -------------------------------------------------------------

MultilinearForm partial_symmetrize_perm_sum(const MultilinearForm& L, int k) {
    const int n = L.n();
    const int m = L.arity();
    check_slot_range(k, m, "partial_symmetrize");
    if (k > 10)
        throw BudgetError("partial_symmetrize_perm_sum: k = " + std::to_string(k) +
                          " exceeds the k <= 10 permutation budget");
    if (k == 1) return L;

    MultilinearForm out(n, m);
    std::vector<int> perm(static_cast<std::size_t>(k));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> src(static_cast<std::size_t>(m));
    const double scale = 1.0 / static_cast<double>(factorial(k));

    do {
        std::vector<int> e(static_cast<std::size_t>(m), 1);
        std::int64_t o = 0;
        do {
            for (int t = 0; t < k; ++t) src[static_cast<std::size_t>(t)] = e[static_cast<std::size_t>(perm[static_cast<std::size_t>(t)])];
            for (int t = k; t < m; ++t) src[static_cast<std::size_t>(t)] = e[static_cast<std::size_t>(t)];
            out.values()[static_cast<std::size_t>(o)] +=
                L.values()[static_cast<std::size_t>(detail::flat_offset(n, src))];
            ++o;
        } while (detail::advance_entries(n, e));
    } while (std::next_permutation(perm.begin(), perm.end()));

    for (Complex& c : out.values()) c *= scale;
    return out;
}

MultilinearForm partial_symmetrize_orbit(const MultilinearForm& L, int k) {
    const int n = L.n();
    const int m = L.arity();
    check_slot_range(k, m, "partial_symmetrize");
    if (k == 1) return L;

    // Two passes: group entries by (sorted leading block, tail), then
    // distribute each group average back over the block's orbit.
    std::vector<Complex> group(L.values().size(), Complex(0.0));
    std::vector<int> e(static_cast<std::size_t>(m), 1);
    std::vector<int> key(static_cast<std::size_t>(m));
    std::int64_t o = 0;
    do {
        key = e;
        std::sort(key.begin(), key.begin() + k);
        group[static_cast<std::size_t>(detail::flat_offset(n, key))] +=
            L.values()[static_cast<std::size_t>(o)];
        ++o;
    } while (detail::advance_entries(n, e));

    MultilinearForm out(n, m);
    std::fill(e.begin(), e.end(), 1);
    o = 0;
    do {
        key = e;
        std::sort(key.begin(), key.begin() + k);
        const double orbit = static_cast<double>(orbit_size(std::span<const int>(key).first(k)));
        out.values()[static_cast<std::size_t>(o)] =
            group[static_cast<std::size_t>(detail::flat_offset(n, key))] / orbit;
        ++o;
    } while (detail::advance_entries(n, e));
    return out;
}

MultilinearForm partial_symmetrize(const MultilinearForm& L, int k) {
    check_slot_range(k, L.arity(), "partial_symmetrize");
    if (k > 8)  // 9! = 362880 > 1e5
        return partial_symmetrize_orbit(L, k);
    return partial_symmetrize_perm_sum(L, k);
}

MultilinearForm full_symmetrize(const MultilinearForm& L) {
    return partial_symmetrize(L, L.arity());
}

Complex polarize_eval(const HomogeneousPolynomial& P, std::span<const ComplexVector> args) {
    const int n = P.n();
    const int m = P.degree();
    check_args(n, m, args, "polarize_eval");
    if (m > 20)
        throw BudgetError("polarize_eval: 2^m sign patterns exceed budget for m = " +
                          std::to_string(m));

    ComplexVector s(static_cast<std::size_t>(n));
    Complex acc = 0.0;
    const std::uint64_t patterns = std::uint64_t{1} << m;
    for (std::uint64_t bits = 0; bits < patterns; ++bits) {
        std::fill(s.begin(), s.end(), Complex(0.0));
        int sign = 1;
        for (int t = 0; t < m; ++t) {
            const double eps = (bits >> t) & 1 ? -1.0 : 1.0;
            if (eps < 0) sign = -sign;
            for (int j = 0; j < n; ++j)
                s[static_cast<std::size_t>(j)] += eps * args[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
        }
        acc += static_cast<double>(sign) * evaluate_poly(P, s);
    }
    return acc / (static_cast<double>(patterns) * static_cast<double>(factorial(m)));
}

Complex partial_sym_coeff_closed_form(const HomogeneousPolynomial& P,
                                      const MultiIndex& i, int k) {
    const int m = P.degree();
    if (i.n() != P.n() || i.degree() != m)
        throw std::invalid_argument("partial_sym_coeff_closed_form: index shape mismatch");
    check_slot_range(k, m, "partial_sym_coeff_closed_form");

    std::span<const int> e = i.span();
    if (!std::is_sorted(e.begin() + k, e.end())) return 0.0;
    if (k < m) {
        const int lead_max = *std::max_element(e.begin(), e.begin() + k);
        if (lead_max > e[static_cast<std::size_t>(k)]) return 0.0;
    }
    std::vector<int> sorted(e.begin(), e.end());
    std::sort(sorted.begin(), sorted.end());
    const Complex c = P.coeff(sorted);
    return c / static_cast<double>(orbit_size(e.first(k)));
}

}  // namespace polsym
