#ifndef POLSYM_MULTIINDEX_HPP
#define POLSYM_MULTIINDEX_HPP

#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace polsym {

// Default cap on dense tensor sizes / enumeration lengths (number of entries).
inline constexpr std::int64_t kDefaultEntryBudget = 10'000'000;

// Thrown when an enumeration or tensor allocation would exceed the entry budget.
class BudgetError : public std::runtime_error {
public:
    explicit BudgetError(const std::string& what) : std::runtime_error(what) {}
};

/// A tuple (i_1, ..., i_m) of 1-based coordinates, each in {1, ..., n}.
/// Immutable after construction.
class MultiIndex {
public:
    MultiIndex(std::vector<int> entries, int n);

    int n() const { return n_; }
    int degree() const { return static_cast<int>(entries_.size()); }  // m
    const std::vector<int>& entries() const { return entries_; }
    std::span<const int> span() const { return entries_; }

    // 1-based position access, matching the usual i_t notation.
    int at(int t) const;

    bool is_nondecreasing() const;

    friend bool operator==(const MultiIndex& a, const MultiIndex& b) {
        return a.n_ == b.n_ && a.entries_ == b.entries_;
    }
    friend bool operator<(const MultiIndex& a, const MultiIndex& b) {
        return a.entries_ < b.entries_;  // lexicographic
    }

private:
    std::vector<int> entries_;
    int n_;
};

/// Orbit data of a multi-index under permutation of its positions.
struct OrbitInfo {
    MultiIndex canonical;                 // sorted (non-decreasing) representative
    std::int64_t orbit_size;              // number of distinct rearrangements
    std::vector<std::int64_t> occupancy;  // occupancy[l-1] = #{t : i_t = l}, size n
};

// --- counting -------------------------------------------------------------

std::int64_t index_count(int n, int m);           // n^m, overflow-checked
std::int64_t nondecreasing_count(int n, int m);   // C(n+m-1, m)
std::int64_t factorial(int k);                    // k <= 20

// --- enumeration ----------------------------------------------------------

// Both enumerations are lexicographic. Throws BudgetError when the output
// length exceeds `budget`.
std::vector<MultiIndex> enumerate_indices(int n, int m,
                                          std::int64_t budget = kDefaultEntryBudget);
std::vector<MultiIndex> enumerate_nondecreasing(int n, int m,
                                                std::int64_t budget = kDefaultEntryBudget);

// Streaming variant of enumerate_indices: the callback sees a reused buffer
// of 1-based entries, in lexicographic order.
void for_each_index(int n, int m, const std::function<void(std::span<const int>)>& fn);

// --- per-index operations ---------------------------------------------------

MultiIndex canonicalize(const MultiIndex& i);   // sorted rearrangement, idempotent
std::int64_t orbit_size(const MultiIndex& i);
std::int64_t orbit_size(std::span<const int> entries);
OrbitInfo orbit_info(const MultiIndex& i);

// #{u <= k : i_u = i_k} for 1-based k; always >= 1.
int multiplicity_at_tail(const MultiIndex& i, int k);
int multiplicity_at_tail(std::span<const int> entries, int k);

MultiIndex concatenate(const MultiIndex& i, const MultiIndex& j);

namespace detail {

// Lexicographic odometer over {1..n}^m; `e` holds 1-based digits.
// Returns false once the last tuple (n,...,n) has been passed.
inline bool advance_entries(int n, std::span<int> e) {
    for (int t = static_cast<int>(e.size()) - 1; t >= 0; --t) {
        if (e[t] < n) {
            ++e[t];
            return true;
        }
        e[t] = 1;
    }
    return false;
}

// Flat offset of a tuple in the dense lexicographic layout (first coordinate
// most significant).
inline std::int64_t flat_offset(int n, std::span<const int> entries) {
    std::int64_t o = 0;
    for (int v : entries) o = o * n + (v - 1);
    return o;
}

inline void decode_offset(int n, std::int64_t offset, std::span<int> out) {
    for (int t = static_cast<int>(out.size()) - 1; t >= 0; --t) {
        out[t] = static_cast<int>(offset % n) + 1;
        offset /= n;
    }
}

}  // namespace detail

}  // namespace polsym

#endif
