#ifndef MULTIJOINT_TRANSVERSAL_H_
#define MULTIJOINT_TRANSVERSAL_H_

#include <array>
#include <functional>
#include <vector>

namespace multijoint {

struct SearchOptions {
  // Exhaustive search when every family has at most this many candidates.
  int exact_limit = 12;
  // Above the limit a heuristic "false" raises SearchBudgetExceeded instead
  // of being returned.
  bool exact = true;
};

// spans(i, j, k) for candidate i of family 0, j of family 1, k of family 2.
using TriplePredicate = std::function<bool(int, int, int)>;

struct TransversalChoice {
  bool found = false;
  std::array<std::vector<int>, 3> members;  // ascending, sizes == need
};

// Subsets A_f of {0..counts[f]-1} with |A_f| = need[f] such that every
// triple in A_0 x A_1 x A_2 satisfies `spans`. Subsets of a transversal
// choice are transversal, so searching exact sizes decides "size >= need".
// need[f] >= 1.
TransversalChoice FindTransversal(const std::array<int, 3>& counts,
                                  const std::array<int, 3>& need,
                                  const TriplePredicate& spans,
                                  const SearchOptions& options = {});

// The exhaustive search regardless of size.
TransversalChoice FindTransversalExact(const std::array<int, 3>& counts,
                                       const std::array<int, 3>& need,
                                       const TriplePredicate& spans);

// Greedy construction; a found choice is always verified, a miss proves
// nothing.
TransversalChoice FindTransversalGreedy(const std::array<int, 3>& counts,
                                        const std::array<int, 3>& need,
                                        const TriplePredicate& spans);

}  // namespace multijoint

#endif  // MULTIJOINT_TRANSVERSAL_H_
