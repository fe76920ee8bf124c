#include "polsym/schur.hpp"

#include <algorithm>
#include <numeric>

namespace polsym {

namespace {

void check_slot(int s, int m, const char* where) {
    if (s < 1 || s > m)
        throw std::out_of_range(std::string(where) + ": slot " + std::to_string(s) +
                                " outside 1..m = " + std::to_string(m));
}

void check_same_shape(int an, int am, int bn, int bm) {
    if (an != bn || am != bm)
        throw std::invalid_argument("schur_product: shape mismatch (" + std::to_string(an) +
                                    "," + std::to_string(am) + ") vs (" + std::to_string(bn) +
                                    "," + std::to_string(bm) + ")");
}

// Fills a multiplier from a per-index predicate walked in flat order.
template <typename Fn>
SchurMultiplier build_multiplier(int n, int m, std::int64_t budget, Fn&& entry_of) {
    SchurMultiplier A(n, m, budget);
    std::vector<int> e(static_cast<std::size_t>(m), 1);
    std::int64_t o = 0;
    do {
        A.values()[static_cast<std::size_t>(o)] = entry_of(std::span<const int>(e));
        ++o;
    } while (detail::advance_entries(n, e));
    return A;
}

}  // namespace

SchurMultiplier::SchurMultiplier(int n, int m, std::int64_t budget) : n_(n), m_(m) {
    const std::int64_t total = index_count(n, m);
    if (total > budget)
        throw BudgetError("multiplier: n^m = " + std::to_string(total) + " exceeds budget " +
                          std::to_string(budget));
    values_.assign(static_cast<std::size_t>(total), Complex(0.0));
}

Complex SchurMultiplier::coeff(std::span<const int> entries) const {
    if (static_cast<int>(entries.size()) != m_)
        throw std::invalid_argument("multiplier: index length mismatch");
    for (int v : entries)
        if (v < 1 || v > n_) throw std::out_of_range("multiplier: index entry outside 1..n");
    return values_[static_cast<std::size_t>(detail::flat_offset(n_, entries))];
}

Complex SchurMultiplier::coeff(const MultiIndex& i) const { return coeff(i.span()); }

void SchurMultiplier::set_coeff(std::span<const int> entries, Complex value) {
    if (static_cast<int>(entries.size()) != m_)
        throw std::invalid_argument("multiplier: index length mismatch");
    values_[static_cast<std::size_t>(detail::flat_offset(n_, entries))] = value;
}

SchurMultiplier schur_product(const SchurMultiplier& a, const SchurMultiplier& b) {
    check_same_shape(a.n(), a.arity(), b.n(), b.arity());
    SchurMultiplier out = b;
    for (std::size_t o = 0; o < out.values().size(); ++o) out.values()[o] *= a.values()[o];
    return out;
}

MultilinearForm schur_product(const SchurMultiplier& a, const MultilinearForm& b) {
    check_same_shape(a.n(), a.arity(), b.n(), b.arity());
    MultilinearForm out = b;
    for (std::size_t o = 0; o < out.values().size(); ++o) out.values()[o] *= a.values()[o];
    return out;
}

SchurMultiplier ones_multiplier(int n, int m, std::int64_t budget) {
    return build_multiplier(n, m, budget, [](std::span<const int>) { return Complex(1.0); });
}

SchurMultiplier diag_multiplier(int u, int v, int n, int m, std::int64_t budget) {
    check_slot(u, m, "diag_multiplier");
    check_slot(v, m, "diag_multiplier");
    return build_multiplier(n, m, budget, [u, v](std::span<const int> e) {
        return Complex(e[static_cast<std::size_t>(u - 1)] == e[static_cast<std::size_t>(v - 1)] ? 1.0 : 0.0);
    });
}

SchurMultiplier triangle_multiplier(int u, int v, int n, int m, std::int64_t budget) {
    check_slot(u, m, "triangle_multiplier");
    check_slot(v, m, "triangle_multiplier");
    return build_multiplier(n, m, budget, [u, v](std::span<const int> e) {
        return Complex(e[static_cast<std::size_t>(u - 1)] <= e[static_cast<std::size_t>(v - 1)] ? 1.0 : 0.0);
    });
}

SchurMultiplier tail_multiplicity_indicator(int k, int u, int n, int m, std::int64_t budget) {
    check_slot(k, m, "tail_multiplicity_indicator");
    if (u < 1 || u > k)
        throw std::out_of_range("tail_multiplicity_indicator: u = " + std::to_string(u) +
                                " outside 1..k = " + std::to_string(k));
    return build_multiplier(n, m, budget, [k, u](std::span<const int> e) {
        return Complex(multiplicity_at_tail(e, k) == u ? 1.0 : 0.0);
    });
}

SchurMultiplier tail_multiplicity_indicator_subsets(int k, int u, int n, int m,
                                                    std::int64_t budget) {
    check_slot(k, m, "tail_multiplicity_indicator_subsets");
    if (u < 1 || u > k)
        throw std::out_of_range("tail_multiplicity_indicator_subsets: u outside 1..k");
    if (k > 12)
        throw BudgetError("tail_multiplicity_indicator_subsets: k = " + std::to_string(k) +
                          " exceeds the k <= 12 subset budget");

    const SchurMultiplier one = ones_multiplier(n, m, budget);
    SchurMultiplier acc(n, m, budget);

    // Walk all u-subsets Q of {1..k} in lexicographic order.
    std::vector<int> q(static_cast<std::size_t>(u));
    std::iota(q.begin(), q.end(), 1);
    for (;;) {
        SchurMultiplier term = one;
        std::size_t next = 0;
        for (int slot = 1; slot <= k; ++slot) {
            const bool in_q = next < q.size() && q[next] == slot;
            if (in_q) ++next;
            SchurMultiplier d = diag_multiplier(slot, k, n, m, budget);
            if (!in_q)
                for (std::size_t o = 0; o < d.values().size(); ++o)
                    d.values()[o] = Complex(1.0) - d.values()[o];
            term = schur_product(d, term);
        }
        for (std::size_t o = 0; o < acc.values().size(); ++o)
            acc.values()[o] += term.values()[o];

        int t = u - 1;
        while (t >= 0 && q[static_cast<std::size_t>(t)] == k - (u - 1 - t)) --t;
        if (t < 0) break;
        ++q[static_cast<std::size_t>(t)];
        for (int s = t + 1; s < u; ++s)
            q[static_cast<std::size_t>(s)] = q[static_cast<std::size_t>(s - 1)] + 1;
    }
    return acc;
}

SchurMultiplier sym_step_multiplier(int k, int n, int m, std::int64_t budget) {
    check_slot(k, m, "sym_step_multiplier");
    return build_multiplier(n, m, budget, [k](std::span<const int> e) {
        for (int t = 0; t < k - 1; ++t)
            if (e[static_cast<std::size_t>(t)] > e[static_cast<std::size_t>(k - 1)]) return Complex(0.0);
        return Complex(static_cast<double>(k) / multiplicity_at_tail(e, k));
    });
}

SchurMultiplier sym_step_multiplier_factored(int k, int n, int m, std::int64_t budget) {
    check_slot(k, m, "sym_step_multiplier_factored");

    SchurMultiplier weighted(n, m, budget);
    for (int u = 1; u <= k; ++u) {
        const SchurMultiplier indicator = tail_multiplicity_indicator(k, u, n, m, budget);
        const double w = static_cast<double>(k) / u;
        for (std::size_t o = 0; o < weighted.values().size(); ++o)
            weighted.values()[o] += w * indicator.values()[o];
    }

    SchurMultiplier out = std::move(weighted);
    for (int u = 1; u < k; ++u)
        out = schur_product(triangle_multiplier(u, k, n, m, budget), out);
    return out;
}

MultilinearForm apply_sym_step(const HomogeneousPolynomial& P, int k, std::int64_t budget) {
    const int m = P.degree();
    if (k < 2 || k > m)
        throw std::out_of_range("apply_sym_step: k = " + std::to_string(k) +
                                " outside 2..m = " + std::to_string(m));
    const MultilinearForm sym_k = partial_symmetrize(lform_from_poly(P, budget), k);
    return schur_product(sym_step_multiplier(k, P.n(), m, budget), sym_k);
}

}  // namespace polsym
