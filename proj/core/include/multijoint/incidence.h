#ifndef MULTIJOINT_INCIDENCE_H_
#define MULTIJOINT_INCIDENCE_H_

#include <array>
#include <cstdint>
#include <vector>

#include "multijoint/geometry.h"
#include "multijoint/rational.h"
#include "multijoint/transversal.h"

namespace multijoint {

// Three families of canonical lines, each free of duplicates. A line may
// belong to more than one family.
class LineFamilies {
 public:
  LineFamilies() = default;
  // Drops repeated lines within a family (logging a warning). Throws
  // ValidationError for an empty family unless `allow_empty`.
  explicit LineFamilies(std::array<std::vector<Line3>, 3> families, bool allow_empty = false);

  const std::vector<Line3>& operator[](int i) const { return fam_[i]; }
  int size(int i) const { return static_cast<int>(fam_[i].size()); }
  // Duplicates removed from family i at construction.
  int duplicates_removed(int i) const { return dropped_[i]; }

 private:
  std::array<std::vector<Line3>, 3> fam_;
  std::array<int, 3> dropped_{0, 0, 0};
};

// Candidate multijoints with the lines through each of them.
struct IncidenceStructure {
  // Ascending lexicographic order.
  std::vector<Point3> points;
  // through[p][f]: ascending indices into family f of the lines through
  // points[p].
  std::vector<std::array<std::vector<int>, 3>> through;
};

// Candidates are the intersection points of lines from different families.
IncidenceStructure BuildIncidences(const LineFamilies& f);

// Ordered triples (l1, l2, l3), one line per family through the point, with
// spanning directions.
int64_t Multiplicity(int point, const IncidenceStructure& inc, const LineFamilies& f);
bool IsMultijoint(int point, const IncidenceStructure& inc, const LineFamilies& f);
// Multijoints in ascending order.
std::vector<Point3> Multijoints(const LineFamilies& f);

// Every triple in A x B x C spans. Vacuously true when a set is empty.
bool IsTransversal(const std::vector<Line3>& a, const std::vector<Line3>& b,
                   const std::vector<Line3>& c);

struct ThresholdQuery {
  int64_t n1 = 1, n2 = 1, n3 = 1;

  // Throws ValidationError unless every threshold is at least 1.
  ThresholdQuery(int64_t a, int64_t b, int64_t c);
  ThresholdQuery() = default;
  // Real thresholds N_i act as ceil(N_i) since subfamily sizes are integers.
  static ThresholdQuery FromReal(const Rational& a, const Rational& b, const Rational& c);

  int64_t operator[](int i) const { return i == 0 ? n1 : (i == 1 ? n2 : n3); }
};

bool HasTransversalSubcollections(int point, const IncidenceStructure& inc,
                                  const LineFamilies& f, const ThresholdQuery& q,
                                  const SearchOptions& options = {});

// Points admitting transversal subfamilies of sizes >= q, ascending.
std::vector<Point3> JThreshold(const LineFamilies& f, const ThresholdQuery& q,
                               const SearchOptions& options = {});

struct SamplingReport {
  int trials = 0;
  uint64_t seed = 0;
  // Members of J_N(f) that stay multijoints of the sampled families, summed
  // over trials.
  int64_t survivors = 0;
  int64_t j_count = 0;
  // survivors / (j_count * trials)
  Rational survival_fraction;
  std::vector<std::array<int, 3>> sampled_sizes;
};

// Each trial keeps every line of family i independently with probability
// 1/N_i using the stream Rng::ForStream(seed, trial, i), and checks which
// points of J_N(f) are multijoints of the kept lines. Throws
// EmptyThresholdSet when J_N(f) is empty and ValidationError when trials < 1.
SamplingReport SubsampleReduction(const LineFamilies& f, const ThresholdQuery& q, int trials,
                                  uint64_t seed, const SearchOptions& options = {});

}  // namespace multijoint

#endif  // MULTIJOINT_INCIDENCE_H_
