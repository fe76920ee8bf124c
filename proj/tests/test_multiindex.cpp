#include <doctest.h>

#include <algorithm>

#include "polsym/multiindex.hpp"
#include "polsym/rng.hpp"

using namespace polsym;

namespace {

MultiIndex mi(std::vector<int> e, int n) { return MultiIndex(std::move(e), n); }

// Brute-force orbit oracle: count distinct rearrangements explicitly.
std::int64_t orbit_size_by_enumeration(std::vector<int> e) {
    std::sort(e.begin(), e.end());
    std::int64_t count = 0;
    do {
        ++count;
    } while (std::next_permutation(e.begin(), e.end()));
    return count;
}

}  // namespace

TEST_CASE("enumerate_indices is the lexicographic Cartesian power") {
    const auto idx22 = enumerate_indices(2, 2);
    REQUIRE(idx22.size() == 4);
    CHECK(idx22[0].entries() == std::vector<int>{1, 1});
    CHECK(idx22[1].entries() == std::vector<int>{1, 2});
    CHECK(idx22[2].entries() == std::vector<int>{2, 1});
    CHECK(idx22[3].entries() == std::vector<int>{2, 2});

    const auto idx13 = enumerate_indices(1, 3);
    REQUIRE(idx13.size() == 1);
    CHECK(idx13[0].entries() == std::vector<int>{1, 1, 1});

    const auto idx32 = enumerate_indices(3, 2);
    REQUIRE(idx32.size() == 9);
    CHECK(idx32.front().entries() == std::vector<int>{1, 1});
    CHECK(idx32.back().entries() == std::vector<int>{3, 3});
    CHECK(std::is_sorted(idx32.begin(), idx32.end(),
                         [](const MultiIndex& a, const MultiIndex& b) { return a < b; }));
}

TEST_CASE("enumerate_nondecreasing matches filtering the full enumeration") {
    const auto nd22 = enumerate_nondecreasing(2, 2);
    REQUIRE(nd22.size() == 3);
    CHECK(nd22[0].entries() == std::vector<int>{1, 1});
    CHECK(nd22[1].entries() == std::vector<int>{1, 2});
    CHECK(nd22[2].entries() == std::vector<int>{2, 2});

    const auto nd15 = enumerate_nondecreasing(1, 5);
    REQUIRE(nd15.size() == 1);
    CHECK(nd15[0].entries() == std::vector<int>(5, 1));

    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 4; ++m) {
            std::vector<MultiIndex> filtered;
            for (const MultiIndex& i : enumerate_indices(n, m))
                if (i.is_nondecreasing()) filtered.push_back(i);
            const auto direct = enumerate_nondecreasing(n, m);
            REQUIRE(direct.size() == filtered.size());
            CHECK(static_cast<std::int64_t>(direct.size()) == nondecreasing_count(n, m));
            for (std::size_t t = 0; t < direct.size(); ++t) CHECK(direct[t] == filtered[t]);
        }
    }
    CHECK(enumerate_nondecreasing(3, 3).size() == 10);
}

TEST_CASE("enumeration budget") {
    CHECK_THROWS_AS(enumerate_indices(10, 8, 1000), BudgetError);
    CHECK_THROWS_AS(enumerate_nondecreasing(100, 10, 100), BudgetError);
    CHECK_THROWS_AS(index_count(10, 50), std::overflow_error);
    CHECK(index_count(10, 7) == 10'000'000);
}

TEST_CASE("canonicalize sorts and is idempotent") {
    CHECK(canonicalize(mi({3, 1, 2}, 3)).entries() == std::vector<int>{1, 2, 3});
    CHECK(canonicalize(mi({1, 1, 1}, 2)).entries() == std::vector<int>{1, 1, 1});
    CHECK(canonicalize(mi({2, 2, 1, 2}, 2)).entries() == std::vector<int>{1, 2, 2, 2});

    Rng rng(31);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 5);
        const int m = 1 + static_cast<int>(rng.next_u64() % 6);
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int& v : e) v = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
        const MultiIndex i = mi(e, n);
        const MultiIndex c = canonicalize(i);
        CHECK(c.is_nondecreasing());
        CHECK(canonicalize(c) == c);
        CHECK(std::is_permutation(c.entries().begin(), c.entries().end(), e.begin()));
    }
}

TEST_CASE("orbit_size matches exhaustive permutation enumeration") {
    CHECK(orbit_size(mi({1, 1, 1}, 1)) == 1);
    CHECK(orbit_size(mi({1, 2, 1}, 2)) == 3);
    CHECK(orbit_size(mi({1, 2, 3}, 3)) == 6);

    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 6; ++m) {
            for (const MultiIndex& i : enumerate_indices(n, m))
                CHECK(orbit_size(i) == orbit_size_by_enumeration(i.entries()));
        }
    }
}

TEST_CASE("orbit_size is a permutation invariant and orbits partition the index set") {
    Rng rng(77);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_u64() % 4);
        const int m = 2 + static_cast<int>(rng.next_u64() % 5);
        std::vector<int> e(static_cast<std::size_t>(m));
        for (int& v : e) v = 1 + static_cast<int>(rng.next_u64() % static_cast<std::uint64_t>(n));
        const std::int64_t size = orbit_size(mi(e, n));
        std::vector<int> shuffled = e;
        for (std::size_t t = shuffled.size(); t > 1; --t)
            std::swap(shuffled[t - 1], shuffled[rng.next_u64() % t]);
        CHECK(orbit_size(mi(shuffled, n)) == size);
    }

    for (int n = 1; n <= 4; ++n) {
        for (int m = 1; m <= 5; ++m) {
            std::int64_t total = 0;
            for (const MultiIndex& j : enumerate_nondecreasing(n, m)) total += orbit_size(j);
            CHECK(total == index_count(n, m));
        }
    }
}

TEST_CASE("orbit recurrence holds exactly in integer arithmetic") {
    for (int n = 1; n <= 4; ++n) {
        for (int k = 2; k <= 6; ++k) {
            for (const MultiIndex& i : enumerate_indices(n, k)) {
                const std::int64_t whole = orbit_size(i);
                const std::int64_t prefix =
                    orbit_size(i.span().first(static_cast<std::size_t>(k - 1)));
                CHECK(whole * multiplicity_at_tail(i, k) == prefix * k);
            }
        }
    }
}

TEST_CASE("orbit_info carries canonical index, size, and occupancy") {
    const OrbitInfo info = orbit_info(mi({2, 1, 2, 3}, 3));
    CHECK(info.canonical.entries() == std::vector<int>{1, 2, 2, 3});
    CHECK(info.orbit_size == 12);  // 4!/2!
    CHECK(info.occupancy == std::vector<std::int64_t>{1, 2, 1});
}

TEST_CASE("multiplicity_at_tail counts matches up to the position") {
    CHECK(multiplicity_at_tail(mi({1, 2, 2}, 2), 3) == 2);
    CHECK(multiplicity_at_tail(mi({1, 2, 3}, 3), 3) == 1);
    CHECK(multiplicity_at_tail(mi({5, 5, 5, 5}, 5), 4) == 4);
    CHECK(multiplicity_at_tail(mi({1, 2}, 2), 1) == 1);
    CHECK_THROWS_AS(multiplicity_at_tail(mi({1, 2}, 2), 0), std::out_of_range);
    CHECK_THROWS_AS(multiplicity_at_tail(mi({1, 2}, 2), 3), std::out_of_range);
}

TEST_CASE("concatenate joins tuples of the same ambient dimension") {
    CHECK(concatenate(mi({1, 2}, 3), mi({3}, 3)).entries() == std::vector<int>{1, 2, 3});
    CHECK(concatenate(mi({2}, 2), mi({1, 1}, 2)).entries() == std::vector<int>{2, 1, 1});
    CHECK_THROWS_AS(concatenate(mi({1}, 2), mi({1}, 3)), std::invalid_argument);
    // Length-zero tuples are not representable at all.
    CHECK_THROWS_AS(MultiIndex({}, 2), std::invalid_argument);
}

TEST_CASE("MultiIndex validates its entries") {
    CHECK_THROWS_AS(mi({0, 1}, 2), std::out_of_range);
    CHECK_THROWS_AS(mi({1, 3}, 2), std::out_of_range);
    CHECK_THROWS_AS(mi({1}, 0), std::invalid_argument);
    CHECK(mi({1, 2}, 2).at(2) == 2);
    CHECK_THROWS_AS(mi({1, 2}, 2).at(3), std::out_of_range);
}

TEST_CASE("streaming enumeration agrees with the materialized one") {
    std::vector<std::vector<int>> seen;
    for_each_index(3, 2, [&](std::span<const int> e) { seen.emplace_back(e.begin(), e.end()); });
    const auto expected = enumerate_indices(3, 2);
    REQUIRE(seen.size() == expected.size());
    for (std::size_t t = 0; t < seen.size(); ++t) CHECK(seen[t] == expected[t].entries());
}
