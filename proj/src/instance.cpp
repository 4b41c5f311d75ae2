#include "grover/instance.hpp"

#include <algorithm>
#include <string>

#include "grover/error.hpp"
#include "grover/random.hpp"

namespace grover {

SearchInstance::SearchInstance(Index n, std::span<const Index> marked,
                               std::optional<std::uint64_t> seed)
    : n_(n), marked_(marked.begin(), marked.end()), seed_(seed) {
  if (n < 2) {
    throw Error(ErrorCode::SizeTooSmall,
                "database size must be at least 2, got " + std::to_string(n));
  }
  if (marked_.empty()) {
    throw Error(ErrorCode::EmptyMarkedSet, "marked set must be non-empty");
  }
  std::sort(marked_.begin(), marked_.end());
  marked_.erase(std::unique(marked_.begin(), marked_.end()), marked_.end());
  if (marked_.back() >= n) {
    throw Error(ErrorCode::IndexOutOfRange,
                "marked index " + std::to_string(marked_.back()) +
                    " outside [0, " + std::to_string(n) + ")");
  }
  membership_.assign(n, false);
  for (Index w : marked_) membership_[w] = true;
}

bool SearchInstance::oracle(Index a) const {
  if (a >= n_) {
    throw Error(ErrorCode::IndexOutOfRange,
                "index " + std::to_string(a) + " outside [0, " + std::to_string(n_) + ")");
  }
  return membership_[a];
}

SearchInstance new_instance(Index n, std::span<const Index> marked) {
  return SearchInstance(n, marked);
}

SearchInstance random_instance(Index n, Index ell, std::uint64_t seed) {
  if (ell < 1 || ell > n) {
    throw Error(ErrorCode::EllOutOfRange, "ell must lie in [1, " + std::to_string(n) +
                                              "], got " + std::to_string(ell));
  }
  // Floyd's sampling: O(ell) draws, each ell-subset equally likely.
  SplitMix64 rng(seed);
  std::vector<Index> chosen;
  chosen.reserve(ell);
  std::vector<bool> taken(n, false);
  for (Index j = n - ell; j < n; ++j) {
    const Index t = rng.below(j + 1);
    const Index pick = taken[t] ? j : t;
    taken[pick] = true;
    chosen.push_back(pick);
  }
  return SearchInstance(n, chosen, seed);
}

double classical_expected_queries(Index n, Index ell) {
  if (ell < 1 || ell > n) {
    throw Error(ErrorCode::EllOutOfRange, "ell must lie in [1, " + std::to_string(n) +
                                              "], got " + std::to_string(ell));
  }
  return static_cast<double>(n + 1) / static_cast<double>(ell + 1);
}

} // namespace grover
