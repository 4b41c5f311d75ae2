#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace grover {

using Index = std::uint64_t;

/// A search problem: the index space [0, n) and the marked (good) indices the
/// oracle answers 1 on. Immutable after construction.
class SearchInstance {
public:
  /// Throws SizeTooSmall (n < 2), EmptyMarkedSet, or IndexOutOfRange.
  /// Duplicates in `marked` are dropped and the result is sorted.
  SearchInstance(Index n, std::span<const Index> marked,
                 std::optional<std::uint64_t> seed = std::nullopt);

  Index n() const noexcept { return n_; }
  Index ell() const noexcept { return marked_.size(); }
  std::span<const Index> marked() const noexcept { return marked_; }
  std::optional<std::uint64_t> seed() const noexcept { return seed_; }

  /// Oracle f(a). Throws IndexOutOfRange for a >= n.
  bool oracle(Index a) const;

  /// Unchecked membership for inner loops; a must be < n.
  bool contains(Index a) const noexcept { return membership_[a]; }

  friend bool operator==(const SearchInstance &lhs, const SearchInstance &rhs) {
    return lhs.n_ == rhs.n_ && lhs.marked_ == rhs.marked_ && lhs.seed_ == rhs.seed_;
  }

private:
  Index n_;
  std::vector<Index> marked_;
  std::vector<bool> membership_;
  std::optional<std::uint64_t> seed_;
};

SearchInstance new_instance(Index n, std::span<const Index> marked);

/// Uniformly random ell-subset of [0, n), a pure function of (n, ell, seed).
/// Throws EllOutOfRange unless 1 <= ell <= n.
SearchInstance random_instance(Index n, Index ell, std::uint64_t seed);

inline bool oracle_eval(const SearchInstance &inst, Index a) { return inst.oracle(a); }

/// Expected number of sequential oracle queries to hit one of ell marked items
/// placed uniformly at random among n, querying without replacement:
/// (n + 1) / (ell + 1). Reduces to (n + 1) / 2 for a single target.
double classical_expected_queries(Index n, Index ell);

} // namespace grover
