#include <doctest.h>

#include <algorithm>
#include <limits>

#include "polsym/rng.hpp"
#include "polsym/schur.hpp"

using namespace polsym;

namespace {

MultiIndex mi(std::vector<int> e, int n) { return MultiIndex(std::move(e), n); }

HomogeneousPolynomial random_poly(int n, int m, Rng& rng) {
    HomogeneousPolynomial P(n, m);
    for (const MultiIndex& j : enumerate_nondecreasing(n, m)) P.set_coeff(j, rng.cnormal());
    return P;
}

double max_dev(const SchurMultiplier& a, const SchurMultiplier& b) {
    double dev = 0.0;
    for (std::size_t o = 0; o < a.values().size(); ++o)
        dev = std::max(dev, std::abs(a.values()[o] - b.values()[o]));
    return dev;
}

double max_dev(const MultilinearForm& a, const MultilinearForm& b) {
    double dev = 0.0;
    for (std::size_t o = 0; o < a.values().size(); ++o)
        dev = std::max(dev, std::abs(a.values()[o] - b.values()[o]));
    return dev;
}

bool is_zero_one(const SchurMultiplier& a) {
    return std::all_of(a.values().begin(), a.values().end(), [](const Complex& c) {
        return c == Complex(0.0) || c == Complex(1.0);
    });
}

}  // namespace

TEST_CASE("diag_multiplier patterns") {
    const SchurMultiplier D = diag_multiplier(1, 2, 2, 2);
    CHECK(D.coeff(mi({1, 1}, 2)) == Complex(1.0));
    CHECK(D.coeff(mi({2, 2}, 2)) == Complex(1.0));
    CHECK(D.coeff(mi({1, 2}, 2)) == Complex(0.0));
    CHECK(D.coeff(mi({2, 1}, 2)) == Complex(0.0));

    CHECK(max_dev(diag_multiplier(2, 2, 3, 3), ones_multiplier(3, 3)) == 0.0);

    const SchurMultiplier D13 = diag_multiplier(1, 3, 3, 3);
    CHECK(D13.coeff(mi({2, 1, 2}, 3)) == Complex(1.0));
    CHECK(D13.coeff(mi({2, 1, 3}, 3)) == Complex(0.0));

    CHECK(max_dev(diag_multiplier(1, 2, 3, 2), diag_multiplier(2, 1, 3, 2)) == 0.0);
    CHECK_THROWS_AS(diag_multiplier(0, 2, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(diag_multiplier(1, 3, 2, 2), std::out_of_range);
}

TEST_CASE("triangle_multiplier patterns and the complement identity") {
    const SchurMultiplier T = triangle_multiplier(1, 2, 2, 2);
    CHECK(T.coeff(mi({1, 1}, 2)) == Complex(1.0));
    CHECK(T.coeff(mi({1, 2}, 2)) == Complex(1.0));
    CHECK(T.coeff(mi({2, 2}, 2)) == Complex(1.0));
    CHECK(T.coeff(mi({2, 1}, 2)) == Complex(0.0));

    CHECK(max_dev(triangle_multiplier(3, 3, 2, 3), ones_multiplier(2, 3)) == 0.0);

    // T^{1,2} + T^{2,1} - D^{1,2} has every entry equal to 1.
    SchurMultiplier sum = triangle_multiplier(1, 2, 3, 2);
    const SchurMultiplier rev = triangle_multiplier(2, 1, 3, 2);
    const SchurMultiplier diag = diag_multiplier(1, 2, 3, 2);
    for (std::size_t o = 0; o < sum.values().size(); ++o)
        sum.values()[o] += rev.values()[o] - diag.values()[o];
    CHECK(max_dev(sum, ones_multiplier(3, 2)) == 0.0);
}

TEST_CASE("schur_product unit, annihilation, idempotence") {
    Rng rng(90);
    MultilinearForm L(3, 2);
    for (Complex& c : L.values()) c = rng.cnormal();

    CHECK(max_dev(schur_product(ones_multiplier(3, 2), L), L) == 0.0);

    // L_P for P = x1 x2 is supported off-diagonal, so the diagonal pattern kills it.
    HomogeneousPolynomial P(2, 2);
    P.set_coeff(mi({1, 2}, 2), 1.0);
    const MultilinearForm dead =
        schur_product(diag_multiplier(1, 2, 2, 2), lform_from_poly(P));
    CHECK(dead.coeff_abs_sum() == 0.0);

    const SchurMultiplier T = triangle_multiplier(1, 2, 4, 2);
    CHECK(max_dev(schur_product(T, T), T) == 0.0);

    CHECK_THROWS_AS(schur_product(ones_multiplier(2, 2), L), std::invalid_argument);
}

TEST_CASE("sym_step_multiplier matches its defining predicate") {
    const SchurMultiplier A2 = sym_step_multiplier(2, 2, 2);
    CHECK(A2.coeff(mi({1, 1}, 2)) == Complex(1.0));
    CHECK(A2.coeff(mi({2, 2}, 2)) == Complex(1.0));
    CHECK(A2.coeff(mi({1, 2}, 2)) == Complex(2.0));
    CHECK(A2.coeff(mi({2, 1}, 2)) == Complex(0.0));

    CHECK(max_dev(sym_step_multiplier(1, 3, 3), ones_multiplier(3, 3)) == 0.0);

    const SchurMultiplier A23 = sym_step_multiplier(2, 2, 3);
    for (int j = 1; j <= 2; ++j) CHECK(A23.coeff(mi({2, 1, j}, 2)) == Complex(0.0));

    // Entries lie in {0} union {k/u : 1 <= u <= k}.
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (int k = 1; k <= m; ++k) {
                for (const Complex& c : sym_step_multiplier(k, n, m).values()) {
                    bool ok = c == Complex(0.0);
                    for (int u = 1; u <= k && !ok; ++u)
                        ok = std::abs(c - Complex(static_cast<double>(k) / u)) < 1e-15;
                    CHECK(ok);
                }
            }
        }
    }
}

TEST_CASE("tail multiplicity indicators partition the index set") {
    const SchurMultiplier A21 = tail_multiplicity_indicator(2, 1, 2, 2);
    CHECK(A21.coeff(mi({1, 2}, 2)) == Complex(1.0));
    CHECK(A21.coeff(mi({2, 1}, 2)) == Complex(1.0));
    CHECK(A21.coeff(mi({1, 1}, 2)) == Complex(0.0));

    const SchurMultiplier A22 = tail_multiplicity_indicator(2, 2, 2, 2);
    CHECK(A22.coeff(mi({1, 1}, 2)) == Complex(1.0));
    CHECK(A22.coeff(mi({2, 2}, 2)) == Complex(1.0));
    CHECK(A22.coeff(mi({1, 2}, 2)) == Complex(0.0));

    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (int k = 1; k <= m; ++k) {
                SchurMultiplier sum(n, m);
                for (int u = 1; u <= k; ++u) {
                    const SchurMultiplier ind = tail_multiplicity_indicator(k, u, n, m);
                    CHECK(is_zero_one(ind));
                    // Distinct multiplicities are disjoint.
                    for (int v = u + 1; v <= k; ++v) {
                        const SchurMultiplier other = tail_multiplicity_indicator(k, v, n, m);
                        const SchurMultiplier overlap = schur_product(ind, other);
                        double mass = 0.0;
                        for (const Complex& c : overlap.values()) mass += std::abs(c);
                        CHECK(mass == 0.0);
                    }
                    for (std::size_t o = 0; o < sum.values().size(); ++o)
                        sum.values()[o] += ind.values()[o];
                }
                CHECK(max_dev(sum, ones_multiplier(n, m)) == 0.0);
            }
        }
    }
}

TEST_CASE("subset expansion of the multiplicity indicator agrees with counting") {
    for (int n = 2; n <= 3; ++n) {
        for (int m = 1; m <= 3; ++m) {
            for (int k = 1; k <= m; ++k) {
                for (int u = 1; u <= k; ++u)
                    CHECK(max_dev(tail_multiplicity_indicator(k, u, n, m),
                                  tail_multiplicity_indicator_subsets(k, u, n, m)) < 1e-15);
            }
        }
    }
}

TEST_CASE("factored multiplier equals the direct definition") {
    CHECK(max_dev(sym_step_multiplier_factored(1, 3, 2), ones_multiplier(3, 2)) == 0.0);
    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            for (int k = 1; k <= m; ++k)
                CHECK(max_dev(sym_step_multiplier(k, n, m),
                              sym_step_multiplier_factored(k, n, m)) <= 1e-14);
        }
    }
}

TEST_CASE("apply_sym_step lowers the symmetrization level by one") {
    HomogeneousPolynomial P(2, 2);
    P.set_coeff(mi({1, 2}, 2), 1.0);
    const MultilinearForm stepped = apply_sym_step(P, 2);
    CHECK(max_dev(stepped, lform_from_poly(P)) < 1e-15);

    HomogeneousPolynomial Q(2, 2);
    Q.set_coeff(mi({1, 1}, 2), 1.0);
    CHECK(max_dev(apply_sym_step(Q, 2), lform_from_poly(Q)) < 1e-15);

    Rng rng(91);
    const HomogeneousPolynomial R = random_poly(3, 4, rng);
    const MultilinearForm L = lform_from_poly(R);
    CHECK(max_dev(apply_sym_step(R, 3), partial_symmetrize_perm_sum(L, 2)) <= 1e-12);

    CHECK_THROWS_AS(apply_sym_step(P, 1), std::out_of_range);
    CHECK_THROWS_AS(apply_sym_step(P, 3), std::out_of_range);
}

TEST_CASE("three-case coefficient comparison covers every index") {
    Rng rng(92);
    for (int n = 2; n <= 3; ++n) {
        for (int m = 2; m <= 4; ++m) {
            for (int inst = 0; inst < 5; ++inst) {
                const HomogeneousPolynomial P = random_poly(n, m, rng);
                const MultilinearForm L = lform_from_poly(P);
                for (int k = 2; k <= m; ++k) {
                    const MultilinearForm S_k = partial_symmetrize_perm_sum(L, k);
                    const MultilinearForm S_km1 = partial_symmetrize_perm_sum(L, k - 1);
                    std::int64_t counts[3] = {0, 0, 0};

                    for (const MultiIndex& K : enumerate_indices(n, m)) {
                        // Split K = (lead, l, tail) around position k.
                        const std::vector<int>& e = K.entries();
                        const std::span<const int> lead(e.data(), static_cast<std::size_t>(k - 1));
                        const int l = e[static_cast<std::size_t>(k - 1)];
                        const std::span<const int> tail(e.data() + k,
                                                        static_cast<std::size_t>(m - k));
                        const int lead_max = *std::max_element(lead.begin(), lead.end());
                        const bool tail_sorted = std::is_sorted(tail.begin(), tail.end());
                        const int tail_first =
                            tail.empty() ? std::numeric_limits<int>::max() : tail.front();

                        int case_id;
                        if (tail_sorted && l <= tail_first && lead_max <= l)
                            case_id = 1;
                        else if (tail_sorted && l <= tail_first && l < lead_max &&
                                 lead_max <= tail_first)
                            case_id = 2;
                        else
                            case_id = 3;
                        ++counts[case_id - 1];

                        const Complex canon_coeff = P.coeff(canonicalize(K));
                        const Complex got_k = S_k.coeff(K);
                        const Complex got_km1 = S_km1.coeff(K);
                        const std::span<const int> block(e.data(), static_cast<std::size_t>(k));

                        if (case_id == 3) {
                            CHECK(std::abs(got_k) <= 1e-12);
                            CHECK(std::abs(got_km1) <= 1e-12);
                            continue;
                        }
                        const Complex expect_k =
                            canon_coeff / static_cast<double>(orbit_size(block));
                        CHECK(std::abs(got_k - expect_k) <= 1e-12);
                        if (case_id == 1) {
                            const Complex expect_km1 =
                                canon_coeff / static_cast<double>(orbit_size(lead));
                            CHECK(std::abs(got_km1 - expect_km1) <= 1e-12);
                            // The announced ratio between the two levels.
                            const double factor =
                                static_cast<double>(k) / multiplicity_at_tail(K, k);
                            CHECK(std::abs(got_km1 - factor * got_k) <= 1e-12);
                        } else {
                            CHECK(std::abs(got_km1) <= 1e-12);
                        }
                    }
                    CHECK(counts[0] + counts[1] + counts[2] == index_count(n, m));
                    CHECK(counts[0] > 0);
                    CHECK(counts[1] > 0);
                    CHECK(counts[2] > 0);
                }
            }
        }
    }
}

TEST_CASE("multiplier JSON shape guards") {
    CHECK_THROWS_AS(SchurMultiplier(10, 9, 1000), BudgetError);
    CHECK_THROWS_AS(tail_multiplicity_indicator(2, 3, 2, 2), std::out_of_range);
    CHECK_THROWS_AS(tail_multiplicity_indicator_subsets(13, 1, 2, 13), BudgetError);
}
