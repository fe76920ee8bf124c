#include "polsym/multiindex.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace polsym {

namespace {

constexpr std::array<std::int64_t, 21> kFactorial = [] {
    std::array<std::int64_t, 21> f{};
    f[0] = 1;
    for (int k = 1; k <= 20; ++k) f[k] = f[k - 1] * k;
    return f;
}();

void check_shape(int n, int m) {
    if (n < 1) throw std::invalid_argument("multiindex: dimension n must be >= 1");
    if (m < 1) throw std::invalid_argument("multiindex: degree m must be >= 1");
}

}  // namespace

MultiIndex::MultiIndex(std::vector<int> entries, int n)
    : entries_(std::move(entries)), n_(n) {
    check_shape(n_, static_cast<int>(entries_.size()));
    for (int v : entries_) {
        if (v < 1 || v > n_)
            throw std::out_of_range("multiindex: entry " + std::to_string(v) +
                                    " outside 1.." + std::to_string(n_));
    }
}

int MultiIndex::at(int t) const {
    if (t < 1 || t > degree())
        throw std::out_of_range("multiindex: position " + std::to_string(t) +
                                " outside 1.." + std::to_string(degree()));
    return entries_[t - 1];
}

bool MultiIndex::is_nondecreasing() const {
    return std::is_sorted(entries_.begin(), entries_.end());
}

std::int64_t factorial(int k) {
    if (k < 0 || k > 20)
        throw std::overflow_error("factorial: argument outside 0..20");
    return kFactorial[k];
}

std::int64_t index_count(int n, int m) {
    check_shape(n, m);
    std::int64_t count = 1;
    for (int t = 0; t < m; ++t) {
        if (count > std::numeric_limits<std::int64_t>::max() / n)
            throw std::overflow_error("index_count: n^m overflows 64-bit");
        count *= n;
    }
    return count;
}

std::int64_t nondecreasing_count(int n, int m) {
    check_shape(n, m);
    // C(n+m-1, m), kept exact by dividing as we go.
    std::int64_t c = 1;
    for (int t = 1; t <= m; ++t) {
        std::int64_t num = n - 1 + t;
        if (c > std::numeric_limits<std::int64_t>::max() / num)
            throw std::overflow_error("nondecreasing_count: binomial overflows 64-bit");
        c = c * num / t;
    }
    return c;
}

std::vector<MultiIndex> enumerate_indices(int n, int m, std::int64_t budget) {
    std::int64_t total = index_count(n, m);
    if (total > budget)
        throw BudgetError("enumerate_indices: n^m = " + std::to_string(total) +
                          " exceeds budget " + std::to_string(budget));
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> e(m, 1);
    do {
        out.emplace_back(e, n);
    } while (detail::advance_entries(n, e));
    return out;
}

std::vector<MultiIndex> enumerate_nondecreasing(int n, int m, std::int64_t budget) {
    std::int64_t total = nondecreasing_count(n, m);
    if (total > budget)
        throw BudgetError("enumerate_nondecreasing: C(n+m-1,m) = " + std::to_string(total) +
                          " exceeds budget " + std::to_string(budget));
    std::vector<MultiIndex> out;
    out.reserve(static_cast<std::size_t>(total));
    std::vector<int> e(m, 1);
    for (;;) {
        out.emplace_back(e, n);
        int t = m - 1;
        while (t >= 0 && e[t] == n) --t;
        if (t < 0) break;
        ++e[t];
        std::fill(e.begin() + t + 1, e.end(), e[t]);
    }
    return out;
}

void for_each_index(int n, int m, const std::function<void(std::span<const int>)>& fn) {
    check_shape(n, m);
    std::vector<int> e(m, 1);
    do {
        fn(e);
    } while (detail::advance_entries(n, e));
}

MultiIndex canonicalize(const MultiIndex& i) {
    std::vector<int> e = i.entries();
    std::sort(e.begin(), e.end());
    return MultiIndex(std::move(e), i.n());
}

std::int64_t orbit_size(std::span<const int> entries) {
    int k = static_cast<int>(entries.size());
    if (k > 20)
        throw std::overflow_error("orbit_size: degree > 20 overflows 64-bit factorials");
    std::vector<int> sorted(entries.begin(), entries.end());
    std::sort(sorted.begin(), sorted.end());
    std::int64_t size = kFactorial[k];
    int run = 1;
    for (int t = 1; t <= k; ++t) {
        if (t < k && sorted[t] == sorted[t - 1]) {
            ++run;
        } else {
            size /= kFactorial[run];
            run = 1;
        }
    }
    return size;
}

std::int64_t orbit_size(const MultiIndex& i) { return orbit_size(i.span()); }

OrbitInfo orbit_info(const MultiIndex& i) {
    std::vector<std::int64_t> occupancy(static_cast<std::size_t>(i.n()), 0);
    for (int v : i.entries()) ++occupancy[static_cast<std::size_t>(v - 1)];
    return OrbitInfo{canonicalize(i), orbit_size(i), std::move(occupancy)};
}

int multiplicity_at_tail(std::span<const int> entries, int k) {
    if (k < 1 || k > static_cast<int>(entries.size()))
        throw std::out_of_range("multiplicity_at_tail: position " + std::to_string(k) +
                                " outside 1.." + std::to_string(entries.size()));
    int count = 0;
    for (int u = 0; u < k; ++u)
        if (entries[u] == entries[k - 1]) ++count;
    return count;
}

int multiplicity_at_tail(const MultiIndex& i, int k) {
    return multiplicity_at_tail(i.span(), k);
}

MultiIndex concatenate(const MultiIndex& i, const MultiIndex& j) {
    if (i.n() != j.n())
        throw std::invalid_argument("concatenate: ambient dimensions differ (" +
                                    std::to_string(i.n()) + " vs " + std::to_string(j.n()) + ")");
    std::vector<int> e = i.entries();
    e.insert(e.end(), j.entries().begin(), j.entries().end());
    return MultiIndex(std::move(e), i.n());
}

}  // namespace polsym
