#include "multijoint/partition.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include "multijoint/errors.h"
#include "multijoint/rng.h"

namespace multijoint {

int LiftDimension(int d) { return (d + 3) * (d + 2) * (d + 1) / 6 - 1; }

DegreeSchedule DegreeSchedule::ForRounds(int rounds) {
  if (rounds < 1 || rounds > kMaxRounds) {
    throw ValidationError("rounds must lie in [1, " + std::to_string(kMaxRounds) + "]");
  }
  DegreeSchedule s;
  s.rounds = rounds;
  for (int j = 1; j <= rounds; ++j) {
    const int classes = 1 << (j - 1);
    int d = 1;
    while (LiftDimension(d) < classes) ++d;
    s.degrees.push_back(d);
    s.total_degree += d;
  }
  return s;
}

double DegreeSchedule::c0() const { return total_degree / std::exp2(rounds / 3.0); }

bool DegreeSchedule::WithinCubeRootBound() const {
  const Integer t = total_degree;
  Integer rhs = 512;
  mpz_mul_2exp(rhs.get_mpz_t(), rhs.get_mpz_t(), rounds);
  return t * t * t <= rhs;
}

std::vector<Exponent> LiftExponents(int d) {
  std::vector<Exponent> out;
  for (int t = 1; t <= d; ++t) {
    for (int a = t; a >= 0; --a) {
      for (int b = t - a; b >= 0; --b) out.push_back({a, b, t - a - b});
    }
  }
  return out;
}

std::vector<Rational> VeroneseLift(const Point3& x, int d) {
  std::array<std::vector<Rational>, 3> pw;
  for (int v = 0; v < 3; ++v) {
    pw[v].resize(d + 1);
    pw[v][0] = 1;
    for (int k = 1; k <= d; ++k) pw[v][k] = pw[v][k - 1] * x[v];
  }
  std::vector<Rational> out;
  for (const auto& e : LiftExponents(d)) out.push_back(pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]]);
  return out;
}

int64_t SideCap(int64_t s, const Rational& eps) {
  const Rational v = (Frac(1, 2) + eps) * Rational(Integer(std::to_string(s)));
  Integer f;
  mpz_fdiv_q(f.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
  return f.get_si();
}

namespace {

using Vec = std::vector<double>;

double Dot(const Vec& a, const Vec& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double Norm(const Vec& a) { return std::sqrt(Dot(a, a)); }

// Orthonormal basis of the span of `rows`; independent[i] says whether row i
// added a new direction.
std::vector<Vec> OrthonormalBasis(const std::vector<Vec>& rows, std::vector<bool>* independent) {
  std::vector<Vec> basis;
  if (independent) independent->assign(rows.size(), false);
  for (size_t i = 0; i < rows.size(); ++i) {
    Vec u = rows[i];
    const double n0 = Norm(u);
    if (n0 == 0) continue;
    for (int pass = 0; pass < 2; ++pass) {
      for (const auto& b : basis) {
        const double c = Dot(u, b);
        for (size_t k = 0; k < u.size(); ++k) u[k] -= c * b[k];
      }
    }
    const double n = Norm(u);
    if (n < 1e-9 * n0) continue;
    for (auto& x : u) x /= n;
    basis.push_back(std::move(u));
    if (independent) (*independent)[i] = true;
  }
  return basis;
}

// Points of all sets in coordinates scaled into [-1, 1]^3 by a dyadic
// affine map, so exact lifts stay cheap and floats stay well scaled.
class LiftedPoints {
 public:
  LiftedPoints(const std::vector<std::vector<Point3>>& sets, int d) : d_(d) {
    std::vector<Point3> all;
    for (const auto& s : sets) {
      std::vector<int> idx;
      for (const auto& p : s) {
        idx.push_back(static_cast<int>(all.size()));
        all.push_back(p);
      }
      members_.push_back(std::move(idx));
    }
    Rational half_extent = 0;
    for (int v = 0; v < 3; ++v) {
      Rational lo = all.empty() ? Rational(0) : all[0][v], hi = lo;
      for (const auto& p : all) {
        lo = std::min(lo, p[v]);
        hi = std::max(hi, p[v]);
      }
      center_[v] = (lo + hi) / 2;
      half_extent = std::max(half_extent, Rational((hi - lo) / 2));
    }
    scale_ = 1;
    while (scale_ < half_extent) scale_ *= 2;
    while (scale_ / 2 >= half_extent && Sign(half_extent) > 0) scale_ /= 2;
    exps_ = LiftExponents(d);
    for (const auto& p : all) {
      Point3 q{(p.x - center_[0]) / scale_, (p.y - center_[1]) / scale_,
               (p.z - center_[2]) / scale_};
      Vec f(exps_.size() + 1);
      f[0] = 1;
      const double x[3] = {q.x.get_d(), q.y.get_d(), q.z.get_d()};
      for (size_t m = 0; m < exps_.size(); ++m) {
        double t = 1;
        for (int v = 0; v < 3; ++v) {
          for (int k = 0; k < exps_[m][v]; ++k) t *= x[v];
        }
        f[m + 1] = t;
      }
      float_.push_back(std::move(f));
      normalized_.push_back(std::move(q));
    }
  }

  int dim() const { return static_cast<int>(exps_.size()) + 1; }
  int size() const { return static_cast<int>(float_.size()); }
  const std::vector<std::vector<int>>& members() const { return members_; }
  const Vec& lift(int i) const { return float_[i]; }

  const std::vector<Rational>& exact(int i) {
    if (exact_.empty()) exact_.resize(float_.size());
    if (exact_[i].empty()) {
      exact_[i].push_back(1);
      for (auto& c : VeroneseLift(normalized_[i], d_)) exact_[i].push_back(std::move(c));
    }
    return exact_[i];
  }

  // The polynomial with normalized coefficient vector `coef`, expressed in
  // the original coordinates.
  TriPoly ToOriginal(const std::vector<Rational>& coef) const {
    std::array<std::vector<TriPoly>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      Exponent e{0, 0, 0};
      e[v] = 1;
      const TriPoly lin = (TriPoly::Term(e, 1) - TriPoly::Constant(center_[v])) * Rational(1 / scale_);
      pw[v].push_back(TriPoly::Constant(1));
      for (int k = 1; k <= d_; ++k) pw[v].push_back(pw[v].back() * lin);
    }
    TriPoly out = TriPoly::Constant(coef[0]);
    for (size_t m = 0; m < exps_.size(); ++m) {
      if (Sign(coef[m + 1]) == 0) continue;
      const auto& e = exps_[m];
      out += pw[0][e[0]] * pw[1][e[1]] * pw[2][e[2]] * coef[m + 1];
    }
    return out;
  }

 private:
  int d_;
  std::vector<std::vector<int>> members_;
  std::array<Rational, 3> center_;
  Rational scale_;
  std::vector<Exponent> exps_;
  std::vector<Point3> normalized_;
  std::vector<Vec> float_;
  std::vector<std::vector<Rational>> exact_;
};

struct SideCount {
  int64_t pos = 0, neg = 0;
};

class Bisector {
 public:
  Bisector(LiftedPoints& pts, const Rational& eps) : pts_(pts) {
    for (const auto& m : pts.members()) caps_.push_back(SideCap(static_cast<int64_t>(m.size()), eps));
  }

  std::optional<std::vector<Rational>> Run(uint64_t seed, const BisectOptions& opt) {
    for (int r = 0; r < opt.restarts; ++r) {
      if (auto c = Attempt(Rng::ForStream(seed, static_cast<uint64_t>(r), 0xb15ec7), opt)) return c;
    }
    return std::nullopt;
  }

 private:
  bool Exempt(size_t s) const { return pts_.members()[s].size() <= 1; }

  // Equality rows at v: every pin, then the median of each set that pins
  // alone do not settle (the median point for an odd number of free points,
  // the midpoint of the middle pair otherwise). Point rows are solved
  // exactly later; `zero` marks the points they put on the zero set.
  struct Targets {
    std::vector<Vec> rows;
    std::vector<int> point_rows;
    std::vector<bool> zero;
    double residual = 0;  // norm of v against the median rows
  };

  Targets MedianTargets(const Vec& v, const std::vector<bool>& pinned) const {
    const int dim = pts_.dim();
    Targets t;
    t.zero = pinned;
    for (int i = 0; i < pts_.size(); ++i) {
      if (!pinned[i]) continue;
      t.rows.push_back(pts_.lift(i));
      t.point_rows.push_back(i);
    }
    double r2 = 0;
    for (size_t s = 0; s < pts_.members().size(); ++s) {
      if (Exempt(s)) continue;
      std::vector<std::pair<double, int>> free;
      for (int i : pts_.members()[s]) {
        if (!pinned[i]) free.push_back({Dot(v, pts_.lift(i)), i});
      }
      if (static_cast<int64_t>(free.size()) <= caps_[s]) continue;
      std::sort(free.begin(), free.end());
      const size_t h = free.size() / 2;
      if (free.size() % 2 == 1) {
        t.rows.push_back(pts_.lift(free[h].second));
        t.point_rows.push_back(free[h].second);
        t.zero[free[h].second] = true;
        r2 += free[h].first * free[h].first;
      } else {
        const Vec& a = pts_.lift(free[h - 1].second);
        const Vec& b = pts_.lift(free[h].second);
        Vec mid(dim);
        for (int k = 0; k < dim; ++k) mid[k] = (a[k] + b[k]) / 2;
        t.rows.push_back(std::move(mid));
        const double m = (free[h - 1].first + free[h].first) / 2;
        r2 += m * m;
      }
    }
    t.residual = std::sqrt(r2);
    return t;
  }

  // Sets whose open sides exceed the cap at v, as (set, heavy side).
  std::vector<std::pair<size_t, int>> Violations(const Vec& v, const std::vector<bool>& zero) const {
    std::vector<std::pair<size_t, int>> out;
    for (size_t s = 0; s < pts_.members().size(); ++s) {
      if (Exempt(s)) continue;
      SideCount c;
      for (int i : pts_.members()[s]) {
        if (zero[i]) continue;
        (Dot(v, pts_.lift(i)) > 0 ? c.pos : c.neg)++;
      }
      if (c.pos > caps_[s]) out.push_back({s, 1});
      if (c.neg > caps_[s]) out.push_back({s, -1});
    }
    return out;
  }

  static bool Normalize(Vec& v) {
    const double n = Norm(v);
    if (!(n > 1e-12)) return false;
    for (auto& x : v) x /= n;
    return true;
  }

  // Damped Newton iteration on the map v -> (median value of each set).
  // The full step projects v onto the hyperplanes through the current
  // medians; it is accepted directly when it already splits every set, and
  // otherwise shortened until the median residual drops.
  std::optional<std::vector<Rational>> Attempt(Rng rng, const BisectOptions& opt) {
    const int dim = pts_.dim();
    Vec v(dim);
    for (auto& x : v) x = 2 * rng.UniformDouble() - 1;
    Normalize(v);
    std::vector<bool> pinned(pts_.size(), false);
    const int total_iters = opt.median_iterations + opt.pin_iterations;
    for (int it = 0; it < total_iters; ++it) {
      const Targets t = MedianTargets(v, pinned);
      if (static_cast<int>(t.rows.size()) >= dim) return std::nullopt;
      Vec w = v;
      for (const auto& b : OrthonormalBasis(t.rows, nullptr)) {
        const double c = Dot(w, b);
        for (int k = 0; k < dim; ++k) w[k] -= c * b[k];
      }
      if (!Normalize(w)) return std::nullopt;
      const auto violations = Violations(w, t.zero);
      if (violations.empty()) {
        if (auto exact = Exact(w, t.point_rows)) return exact;
      }
      if (it >= opt.median_iterations && !violations.empty()) {
        // Pin the excess points nearest the zero set on each heavy side.
        int budget = dim - 1 - static_cast<int>(t.rows.size());
        for (const auto& [s, side] : violations) {
          std::vector<std::pair<double, int>> heavy;
          for (int i : pts_.members()[s]) {
            const double q = Dot(w, pts_.lift(i));
            if (!t.zero[i] && (q > 0) == (side > 0)) heavy.push_back({std::abs(q), i});
          }
          std::sort(heavy.begin(), heavy.end());
          const int64_t excess = static_cast<int64_t>(heavy.size()) - caps_[s];
          for (int64_t k = 0; k < excess && budget > 0; ++k, --budget) pinned[heavy[k].second] = true;
        }
        if (budget <= 0) return std::nullopt;
      }
      bool moved = false;
      for (double alpha = 1; alpha > 1.0 / 1024; alpha /= 2) {
        Vec u(dim);
        for (int k = 0; k < dim; ++k) u[k] = v[k] + alpha * (w[k] - v[k]);
        if (!Normalize(u)) continue;
        if (MedianTargets(u, pinned).residual < t.residual) {
          v = std::move(u);
          moved = true;
          break;
        }
      }
      if (!moved) {
        for (auto& x : v) x += 0.05 * (2 * rng.UniformDouble() - 1);
        Normalize(v);
      }
    }
    return std::nullopt;
  }

  // Snap v to dyadic rationals, solve the point rows exactly for pivot
  // coordinates and verify every set exactly.
  std::optional<std::vector<Rational>> Exact(const Vec& v, const std::vector<int>& point_rows) {
    const int dim = pts_.dim();
    std::vector<Vec> frows;
    for (int i : point_rows) frows.push_back(pts_.lift(i));
    std::vector<bool> indep;
    OrthonormalBasis(frows, &indep);
    std::vector<int> rows;
    for (size_t k = 0; k < point_rows.size(); ++k) {
      if (indep[k]) rows.push_back(point_rows[k]);
    }
    // Pivot columns from float elimination with column pivoting.
    std::vector<Vec> m;
    for (int i : rows) m.push_back(pts_.lift(i));
    std::vector<int> pivots;
    std::vector<bool> used(dim, false);
    for (size_t r = 0; r < m.size(); ++r) {
      int best = -1;
      for (int c = 0; c < dim; ++c) {
        if (!used[c] && (best < 0 || std::abs(m[r][c]) > std::abs(m[r][best]))) best = c;
      }
      if (best < 0 || m[r][best] == 0) return std::nullopt;
      used[best] = true;
      pivots.push_back(best);
      for (size_t r2 = r + 1; r2 < m.size(); ++r2) {
        const double f = m[r2][best] / m[r][best];
        for (int c = 0; c < dim; ++c) m[r2][c] -= f * m[r][c];
      }
    }
    // Exact reduced row echelon form on the pivot columns.
    std::vector<std::vector<Rational>> a;
    for (int i : rows) a.push_back(pts_.exact(i));
    for (size_t r = 0; r < a.size(); ++r) {
      const int pc = pivots[r];
      size_t pr = r;
      while (pr < a.size() && Sign(a[pr][pc]) == 0) ++pr;
      if (pr == a.size()) return std::nullopt;
      std::swap(a[r], a[pr]);
      const Rational inv = 1 / a[r][pc];
      for (auto& x : a[r]) x *= inv;
      for (size_t r2 = 0; r2 < a.size(); ++r2) {
        if (r2 == r || Sign(a[r2][pc]) == 0) continue;
        const Rational f = a[r2][pc];
        for (int c = 0; c < dim; ++c) {
          if (Sign(a[r][c]) != 0) a[r2][c] -= f * a[r][c];
        }
      }
    }
    double vmax = 0;
    for (double x : v) vmax = std::max(vmax, std::abs(x));
    for (int bits = 12; bits <= 52; bits += 8) {
      std::vector<Rational> coef(dim);
      for (int c = 0; c < dim; ++c) {
        if (!used[c]) coef[c] = DyadicRound(v[c] / vmax, bits);
      }
      for (size_t r = 0; r < a.size(); ++r) {
        Rational acc = 0;
        for (int c = 0; c < dim; ++c) {
          if (!used[c] && Sign(a[r][c]) != 0) acc -= a[r][c] * coef[c];
        }
        coef[pivots[r]] = acc;
      }
      if (Verify(coef)) return coef;
    }
    return std::nullopt;
  }

  bool Verify(const std::vector<Rational>& coef) {
    bool nonconstant = false;
    for (size_t c = 1; c < coef.size(); ++c) nonconstant |= Sign(coef[c]) != 0;
    if (!nonconstant && Sign(coef[0]) == 0) return false;
    for (size_t s = 0; s < pts_.members().size(); ++s) {
      if (Exempt(s)) continue;
      SideCount cnt;
      for (int i : pts_.members()[s]) {
        const auto& e = pts_.exact(i);
        Rational q = 0;
        for (size_t c = 0; c < coef.size(); ++c) {
          if (Sign(coef[c]) != 0) q += coef[c] * e[c];
        }
        const int sg = Sign(q);
        if (sg > 0) ++cnt.pos;
        if (sg < 0) ++cnt.neg;
      }
      if (cnt.pos > caps_[s] || cnt.neg > caps_[s]) return false;
    }
    return true;
  }

  LiftedPoints& pts_;
  std::vector<int64_t> caps_;
};

void ValidateEps(const Rational& eps) {
  if (Sign(eps) < 0 || eps >= Frac(1, 2)) throw ValidationError("slack must lie in [0, 1/2)");
}

}  // namespace

TriPoly BisectSets(const std::vector<std::vector<Point3>>& sets, int d, const Rational& eps,
                   uint64_t seed, const BisectOptions& options) {
  if (d < 1) throw ValidationError("bisection degree must be at least 1");
  ValidateEps(eps);
  if (static_cast<int64_t>(sets.size()) > LiftDimension(d)) {
    throw ValidationError(std::to_string(sets.size()) + " sets exceed the " +
                          std::to_string(LiftDimension(d)) + " monomials of degree <= " +
                          std::to_string(d));
  }
  LiftedPoints pts(sets, d);
  Bisector bisector(pts, eps);
  auto coef = bisector.Run(seed, options);
  if (!coef) {
    throw BisectionFailed("no bisecting polynomial of degree " + std::to_string(d) + " for " +
                          std::to_string(sets.size()) + " sets after " +
                          std::to_string(options.restarts) + " restarts");
  }
  return pts.ToOriginal(*coef).PrimitiveInteger();
}

CellLabelResult CellLabelOf(const Partition& part, const Point3& x) {
  CellLabelResult r;
  for (const auto& plane : part.cube_planes) {
    if (Sign(plane.Evaluate(x)) == 0) {
      r.on_z = true;
      return r;
    }
  }
  for (const auto& q : part.round_polys) {
    const int s = Sign(q.Evaluate(x));
    if (s == 0) {
      r.on_z = true;
      r.label.clear();
      return r;
    }
    r.label.push_back(static_cast<int8_t>(s));
  }
  return r;
}

int64_t CellHistogram::max_count() const {
  int64_t m = 0;
  for (const auto& [label, c] : counts) m = std::max(m, c);
  return m;
}

CellHistogram MakeCellHistogram(const Partition& part, const std::vector<Point3>& points) {
  CellHistogram h;
  for (const auto& p : points) {
    auto r = CellLabelOf(part, p);
    if (r.on_z) {
      ++h.on_z;
    } else {
      ++h.counts[r.label];
    }
  }
  return h;
}

Partition GkPartition(const std::vector<Point3>& points, int rounds, const Rational& eps,
                      uint64_t seed, const BisectOptions& options) {
  if (points.empty()) throw ValidationError("partition of an empty point set");
  ValidateEps(eps);
  Partition part;
  part.schedule = DegreeSchedule::ForRounds(rounds);
  part.eps = eps;
  part.seed = seed;
  std::vector<Point3> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

  std::map<CellLabel, std::vector<int>> classes;
  classes[{}].resize(pts.size());
  std::iota(classes[{}].begin(), classes[{}].end(), 0);
  part.product = TriPoly::Constant(1);
  for (int j = 1; j <= rounds; ++j) {
    std::vector<std::vector<Point3>> sets;
    for (const auto& [label, idx] : classes) {
      if (idx.size() < 2) continue;
      std::vector<Point3> s;
      for (int i : idx) s.push_back(pts[i]);
      sets.push_back(std::move(s));
    }
    const TriPoly q = BisectSets(sets, part.schedule.degrees[j - 1], eps,
                                 SplitMix64(seed) ^ SplitMix64(static_cast<uint64_t>(j)), options);
    std::map<CellLabel, std::vector<int>> next;
    for (const auto& [label, idx] : classes) {
      for (int i : idx) {
        const int s = Sign(q.Evaluate(pts[i]));
        if (s == 0) continue;
        CellLabel l = label;
        l.push_back(static_cast<int8_t>(s));
        next[l].push_back(i);
      }
    }
    classes = std::move(next);
    part.round_polys.push_back(q);
    part.product *= q;
  }
  return part;
}

bool WithinOccupancyBound(int64_t count, int64_t n, const Rational& eps, int rounds) {
  Rational bound = Rational(Integer(std::to_string(n)));
  const Rational f = Frac(1, 2) + eps;
  for (int j = 0; j < rounds; ++j) bound *= f;
  return Rational(Integer(std::to_string(count))) <= bound;
}

namespace {

bool FaceIsDegenerate(int axis, const Rational& c, const std::vector<Line3>& lines,
                      const std::vector<ParamCurve>& curves) {
  for (const auto& l : lines) {
    if (Sign(l.dir()[axis]) == 0 && l.base()[axis] == c) return true;
  }
  for (const auto& cv : curves) {
    const UniPoly& comp = cv.component(axis);
    if (comp.degree() <= 0 && comp(Rational(0)) == c) return true;
  }
  return false;
}

}  // namespace

Partition AugmentWithCube(const Partition& part, const std::vector<Point3>& points,
                          const std::vector<Line3>& lines,
                          const std::vector<ParamCurve>& curves) {
  Rational lo = 0, hi = 0;
  if (!points.empty()) {
    lo = hi = points[0].x;
    for (const auto& p : points) {
      for (int v = 0; v < 3; ++v) {
        lo = std::min(lo, p[v]);
        hi = std::max(hi, p[v]);
      }
    }
  }
  lo -= 2;
  hi += 2;
  Partition out = part;
  out.cube_lo = lo;
  out.cube_hi = hi;
  out.cube_planes.clear();
  for (int axis = 0; axis < 3; ++axis) {
    for (int dir : {-1, 1}) {
      Rational c = dir < 0 ? lo : hi;
      Rational step = Frac(1, 2);
      while (FaceIsDegenerate(axis, c, lines, curves)) {
        c += dir * step;
        step /= 2;
      }
      Exponent e{0, 0, 0};
      e[axis] = 1;
      TriPoly plane = TriPoly::Term(e, 1) - TriPoly::Constant(c);
      out.product *= plane;
      out.cube_planes.push_back(std::move(plane));
    }
  }
  return out;
}

}  // namespace multijoint
