#include "multijoint/transversal.h"

#include <algorithm>
#include <cstdint>
#include <string>

#include "multijoint/errors.h"

namespace multijoint {
namespace {

// Memoized predicate over the candidate cube.
class SpanTable {
 public:
  SpanTable(const std::array<int, 3>& counts, const TriplePredicate& spans)
      : counts_(counts),
        spans_(spans),
        cache_(static_cast<size_t>(counts[0]) * counts[1] * counts[2], -1) {}

  bool operator()(int i, int j, int k) {
    int8_t& v = cache_[(static_cast<size_t>(i) * counts_[1] + j) * counts_[2] + k];
    if (v < 0) v = spans_(i, j, k) ? 1 : 0;
    return v == 1;
  }

  // Candidate c of family f at position f, others from `o1`, `o2` in family
  // order.
  bool At(int f, int c, int a, int b) {
    switch (f) {
      case 0: return (*this)(c, a, b);
      case 1: return (*this)(a, c, b);
      default: return (*this)(a, b, c);
    }
  }

 private:
  std::array<int, 3> counts_;
  const TriplePredicate& spans_;
  std::vector<int8_t> cache_;
};

bool Trivial(const std::array<int, 3>& counts, const std::array<int, 3>& need) {
  for (int f = 0; f < 3; ++f) {
    if (need[f] < 1) throw ValidationError("transversal sizes must be positive");
    if (counts[f] < need[f]) return true;
  }
  return false;
}

// Does candidate c of family f span with every chosen pair of the others?
bool Compatible(SpanTable& table, const std::array<std::vector<int>, 3>& chosen, int f, int c) {
  const int g = (f + 1) % 3, h = (f + 2) % 3;
  const int lo = std::min(g, h), hi = std::max(g, h);
  for (int a : chosen[lo]) {
    for (int b : chosen[hi]) {
      if (!table.At(f, c, a, b)) return false;
    }
  }
  return true;
}

class ExactSearch {
 public:
  ExactSearch(const std::array<int, 3>& counts, const std::array<int, 3>& need,
              const TriplePredicate& spans)
      : counts_(counts), need_(need), table_(counts, spans) {
    // Round-robin slot order so constraints between families bite early.
    std::array<int, 3> left = need;
    while (left[0] + left[1] + left[2] > 0) {
      for (int f = 0; f < 3; ++f) {
        if (left[f] > 0) {
          slots_.push_back(f);
          --left[f];
        }
      }
    }
  }

  TransversalChoice Run() {
    TransversalChoice out;
    out.found = Extend(0);
    if (out.found) out.members = chosen_;
    return out;
  }

 private:
  bool Extend(size_t slot) {
    if (slot == slots_.size()) return true;
    const int f = slots_[slot];
    const int start = chosen_[f].empty() ? 0 : chosen_[f].back() + 1;
    const int still_needed = need_[f] - static_cast<int>(chosen_[f].size());
    for (int c = start; c + still_needed <= counts_[f]; ++c) {
      if (!Compatible(table_, chosen_, f, c)) continue;
      chosen_[f].push_back(c);
      if (Extend(slot + 1)) return true;
      chosen_[f].pop_back();
    }
    return false;
  }

  std::array<int, 3> counts_, need_;
  SpanTable table_;
  std::vector<int> slots_;
  std::array<std::vector<int>, 3> chosen_;
};

}  // namespace

TransversalChoice FindTransversalExact(const std::array<int, 3>& counts,
                                       const std::array<int, 3>& need,
                                       const TriplePredicate& spans) {
  if (Trivial(counts, need)) return {};
  return ExactSearch(counts, need, spans).Run();
}

TransversalChoice FindTransversalGreedy(const std::array<int, 3>& counts,
                                        const std::array<int, 3>& need,
                                        const TriplePredicate& spans) {
  if (Trivial(counts, need)) return {};
  SpanTable table(counts, spans);
  // Conflicts of a candidate: failing triples it forms with any other
  // candidates. Fewer conflicts leave more room for later additions.
  std::array<std::vector<int>, 3> conflicts;
  for (int f = 0; f < 3; ++f) conflicts[f].assign(counts[f], 0);
  for (int i = 0; i < counts[0]; ++i) {
    for (int j = 0; j < counts[1]; ++j) {
      for (int k = 0; k < counts[2]; ++k) {
        if (!table(i, j, k)) {
          ++conflicts[0][i];
          ++conflicts[1][j];
          ++conflicts[2][k];
        }
      }
    }
  }
  TransversalChoice out;
  std::array<std::vector<bool>, 3> used;
  for (int f = 0; f < 3; ++f) used[f].assign(counts[f], false);
  bool progress = true;
  while (progress) {
    progress = false;
    for (int f = 0; f < 3; ++f) {
      if (static_cast<int>(out.members[f].size()) >= need[f]) continue;
      int best = -1;
      for (int c = 0; c < counts[f]; ++c) {
        if (used[f][c] || !Compatible(table, out.members, f, c)) continue;
        if (best < 0 || conflicts[f][c] < conflicts[f][best]) best = c;
      }
      if (best < 0) return {};
      used[f][best] = true;
      out.members[f].push_back(best);
      progress = true;
    }
  }
  for (auto& m : out.members) std::sort(m.begin(), m.end());
  out.found = true;
  return out;
}

TransversalChoice FindTransversal(const std::array<int, 3>& counts,
                                  const std::array<int, 3>& need,
                                  const TriplePredicate& spans, const SearchOptions& options) {
  if (Trivial(counts, need)) return {};
  const int largest = std::max({counts[0], counts[1], counts[2]});
  if (largest <= options.exact_limit) return FindTransversalExact(counts, need, spans);
  TransversalChoice greedy = FindTransversalGreedy(counts, need, spans);
  if (greedy.found || !options.exact) return greedy;
  throw SearchBudgetExceeded(std::to_string(largest) + " candidates in one family exceed the " +
                             "exhaustive limit " + std::to_string(options.exact_limit) +
                             " and the greedy search found no transversal choice");
}

}  // namespace multijoint
