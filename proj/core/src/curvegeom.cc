#include "multijoint/curvegeom.h"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>

#include <spdlog/spdlog.h>

#include "multijoint/algebraic_field.h"
#include "multijoint/errors.h"
#include "multijoint/resultant.h"
#include "multijoint/sturm.h"

namespace multijoint {

bool operator<(const AlgebraicPoint3& a, const AlgebraicPoint3& b) {
  for (int i = 0; i < 3; ++i) {
    const int c = Compare(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::ostream& operator<<(std::ostream& os, const AlgebraicPoint3& p) {
  return os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
}

bool AlgebraicDir::is_rational() const {
  return c_[0].is_rational() && c_[1].is_rational() && c_[2].is_rational();
}

Dir3 AlgebraicDir::ToDir3() const {
  if (!is_rational()) throw std::logic_error("AlgebraicDir::ToDir3 on an irrational direction");
  return Dir3::FromRational(c_[0].rational(), c_[1].rational(), c_[2].rational());
}

AlgebraicDir AlgebraicDir::OfVectorAt(const std::array<UniPoly, 3>& v, const RealAlgebraic& t) {
  AlgebraicField field(t);
  int pivot = -1;
  for (int i = 0; i < 3 && pivot < 0; ++i) {
    if (!field.IsZero(v[i])) pivot = i;
  }
  if (pivot < 0) throw ZeroDirection("tangent vector vanishes");
  const UniPoly inv = field.Inverse(v[pivot]);
  AlgebraicDir d;
  for (int i = 0; i < 3; ++i) {
    if (i < pivot) {
      d.c_[i] = RealAlgebraic(0);
    } else if (i == pivot) {
      d.c_[i] = RealAlgebraic(1);
    } else {
      d.c_[i] = EvaluateAt(field.Mul(v[i], inv), t);
    }
  }
  return d;
}

std::ostream& operator<<(std::ostream& os, const AlgebraicDir& d) {
  return os << "(" << d[0] << ", " << d[1] << ", " << d[2] << ")";
}

std::vector<RealAlgebraic> ParametersAt(const ParamCurve& c, const AlgebraicPoint3& x) {
  UniPoly t_poly;
  for (int i = 0; i < 3; ++i) {
    const UniPoly& comp = c.component(i);
    if (comp.IsConstant()) {
      if (RealAlgebraic(comp.coeff(0)) != x[i]) return {};
      continue;
    }
    // Every parameter is a root of m(comp(t)) for the defining polynomial m
    // of the coordinate.
    const UniPoly r = x[i].poly().Compose(comp);
    t_poly = t_poly.IsZero() ? r : Gcd(t_poly, r);
  }
  std::vector<RealAlgebraic> out;
  if (t_poly.IsConstant()) return out;
  for (auto& t : RealAlgebraic::RealRoots(t_poly)) {
    bool on = true;
    for (int i = 0; i < 3 && on; ++i) {
      if (!c.component(i).IsConstant()) on = EvaluateAt(c.component(i), t) == x[i];
    }
    if (on) out.push_back(std::move(t));
  }
  return out;
}

std::vector<AlgebraicDir> TangentDirsAt(const ParamCurve& c, const AlgebraicPoint3& x) {
  const auto deriv = c.Derivative();
  std::set<AlgebraicDir> dirs;
  for (const auto& t : ParametersAt(c, x)) {
    bool vanishes = true;
    for (int i = 0; i < 3; ++i) vanishes &= t.SignAt(deriv[i]) == 0;
    if (!vanishes) dirs.insert(AlgebraicDir::OfVectorAt(deriv, t));
  }
  return {dirs.begin(), dirs.end()};
}

std::vector<AlgebraicDir> TangentDirsAt(const ParamCurve& c, const Point3& x) {
  return TangentDirsAt(c, AlgebraicPoint3::FromPoint3(x));
}

namespace {

// A candidate point together with a parameter that produces it: point =
// anchor(t0). Tangents of other curves at the point are computed in Q(t0).
struct Anchored {
  AlgebraicPoint3 point;
  RealAlgebraic t0;
  std::array<UniPoly, 3> anchor;
};

Anchored MakeAnchored(const std::array<UniPoly, 3>& comps, const RealAlgebraic& t0) {
  Anchored a;
  a.t0 = t0;
  a.anchor = comps;
  a.point = {EvaluateAt(comps[0], t0), EvaluateAt(comps[1], t0), EvaluateAt(comps[2], t0)};
  return a;
}

// Sorts by point and keeps one entry per point, preferring a rational anchor.
void DedupAnchored(std::vector<Anchored>& v) {
  std::stable_sort(v.begin(), v.end(), [](const Anchored& a, const Anchored& b) {
    if (a.point < b.point) return true;
    if (b.point < a.point) return false;
    return a.t0.is_rational() && !b.t0.is_rational();
  });
  v.erase(std::unique(v.begin(), v.end(),
                      [](const Anchored& a, const Anchored& b) { return a.point == b.point; }),
          v.end());
}

using BiPoly = std::vector<UniPoly>;  // coefficients in s (ascending), each in Q[t]

void TrimBi(BiPoly& p) {
  while (!p.empty() && p.back().IsZero()) p.pop_back();
}

BiPoly AddScaled(BiPoly a, const BiPoly& b, const Rational& c) {
  if (a.size() < b.size()) a.resize(b.size());
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i] * c;
  TrimBi(a);
  return a;
}

// A nonzero polynomial in t vanishing at every t of a common zero (s, t) of
// `eqs` (each of positive degree in s) and of `direct`, or the zero
// polynomial when elimination cannot produce one, which happens when the
// equations share a factor.
UniPoly EliminateS(const std::vector<BiPoly>& eqs, const std::vector<UniPoly>& direct) {
  UniPoly t_poly;
  auto add = [&](const UniPoly& r) {
    if (!r.IsZero()) t_poly = t_poly.IsZero() ? r : Gcd(t_poly, r);
  };
  auto add_resultant = [&](const BiPoly& a, const BiPoly& b) {
    if (a.empty() || b.empty()) return;
    if (a.size() == 1) return add(a[0]);
    if (b.size() == 1) return add(b[0]);
    add(ResultantOverQt(a, b));
  };
  for (const auto& d : direct) add(d);
  for (size_t i = 0; i < eqs.size(); ++i) {
    for (size_t j = i + 1; j < eqs.size(); ++j) add_resultant(eqs[i], eqs[j]);
  }
  if (!t_poly.IsZero() || eqs.size() < 3) return t_poly;
  // Pairwise common factors need not be common to all three; a combination
  // of two equations avoids the shared factor for all but finitely many c.
  for (int c = 1; c <= 16 && t_poly.IsZero(); ++c) {
    for (size_t i = 0; i < 3; ++i) {
      add_resultant(eqs[i], AddScaled(eqs[(i + 1) % 3], eqs[(i + 2) % 3], c));
    }
  }
  return t_poly;
}

FieldPoly AtParameter(const BiPoly& p, AlgebraicField& field) {
  FieldPoly f;
  for (const auto& c : p) f.push_back(field.Reduce(c));
  TrimFieldPoly(f, field);
  return f;
}

// p(s) - q(t) by powers of s.
BiPoly Difference(const UniPoly& p, const UniPoly& q) {
  BiPoly f;
  for (const auto& c : p.coeffs()) f.push_back(UniPoly::Constant(c));
  f[0] -= q;
  TrimBi(f);
  return f;
}

// (p(s) - p(t)) / (s - t) by powers of s: the coefficient of s^a is
// sum_{k > a} c_k t^(k-1-a).
BiPoly DividedDifference(const UniPoly& p) {
  const int n = p.degree();
  BiPoly f(std::max(n, 0));
  for (int a = 0; a < n; ++a) {
    std::vector<Rational> c(n - a);
    for (int k = a + 1; k <= n; ++k) c[k - 1 - a] = p.coeff(k);
    f[a] = UniPoly(std::move(c));
  }
  return f;
}

std::optional<std::vector<Anchored>> IntersectAnchored(const ParamCurve& a, const ParamCurve& b) {
  if (a == b) return std::nullopt;
  std::vector<BiPoly> eqs;
  std::vector<UniPoly> direct;
  for (int i = 0; i < 3; ++i) {
    const UniPoly& p = a.component(i);
    if (p.IsConstant()) {
      direct.push_back(UniPoly::Constant(p.coeff(0)) - b.component(i));
    } else {
      eqs.push_back(Difference(p, b.component(i)));
    }
  }
  const UniPoly t_poly = EliminateS(eqs, direct);
  if (t_poly.IsZero()) {
    throw NotZeroDimensional("curves share a curve of common points");
  }
  std::vector<Anchored> out;
  if (t_poly.IsConstant()) return out;
  for (const auto& t0 : RealAlgebraic::RealRoots(t_poly)) {
    AlgebraicField field(t0);
    FieldPoly g;
    for (size_t k = 0; k < eqs.size(); ++k) {
      FieldPoly e = AtParameter(eqs[k], field);
      g = k == 0 ? e : FieldPolyGcd(g, e, field);
    }
    TrimFieldPoly(g, field);
    if (g.size() >= 2 && CountRealRoots(g, field) > 0) {
      out.push_back(MakeAnchored(b.components(), t0));
    }
  }
  DedupAnchored(out);
  const size_t bound = static_cast<size_t>(a.degree()) * static_cast<size_t>(b.degree());
  if (out.size() > bound) {
    throw std::logic_error("curve intersection exceeds the degree product bound");
  }
  return out;
}

// True when p takes the same value at two distinct real parameters.
bool NotInjective(const UniPoly& p) {
  if (p.degree() <= 1) return false;
  if (p.degree() % 2 == 0) return true;
  // Odd degree: injective iff p' never changes sign. Isolating interval
  // endpoints avoid every root of p', so they sample each sign region.
  const UniPoly d = p.Derivative();
  const Rational bound = RootBound(d);
  std::set<int> signs = {Sign(d(-bound)), Sign(d(bound))};
  for (const auto& iv : IsolateRealRoots(d)) {
    signs.insert(Sign(d(iv.lo)));
    signs.insert(Sign(d(iv.hi)));
  }
  return signs.count(1) && signs.count(-1);
}

std::vector<Anchored> SelfCrossingsAnchored(const ParamCurve& c) {
  std::vector<BiPoly> eqs;
  for (int i = 0; i < 3; ++i) {
    const UniPoly& p = c.component(i);
    if (p.IsConstant()) continue;
    if (p.degree() == 1) return {};  // injective coordinate
    eqs.push_back(DividedDifference(p));
  }
  if (eqs.size() == 1) {
    for (int i = 0; i < 3; ++i) {
      if (!c.component(i).IsConstant() && NotInjective(c.component(i))) {
        throw NotZeroDimensional("curve traces a segment more than once");
      }
    }
    return {};
  }
  const UniPoly t_poly = EliminateS(eqs, {});
  if (t_poly.IsZero()) throw NotZeroDimensional("curve is traced more than once");
  std::vector<Anchored> out;
  if (t_poly.IsConstant()) return out;
  for (const auto& t0 : RealAlgebraic::RealRoots(t_poly)) {
    AlgebraicField field(t0);
    FieldPoly g;
    for (size_t k = 0; k < eqs.size(); ++k) {
      FieldPoly e = AtParameter(eqs[k], field);
      g = k == 0 ? e : FieldPolyGcd(g, e, field);
    }
    // s = t0 solves the divided differences exactly at cusps; drop it.
    g = DivideOutRoot(g, field.Generator(), field);
    if (g.size() < 2) continue;
    const int others = CountRealRoots(g, field);
    if (others == 0) continue;
    if (others + 1 > c.degree()) {
      throw std::logic_error("more branches through a point than the curve degree");
    }
    out.push_back(MakeAnchored(c.components(), t0));
  }
  DedupAnchored(out);
  return out;
}

}  // namespace

CurveIntersection CurveCurveIntersections(const ParamCurve& a, const ParamCurve& b) {
  CurveIntersection r;
  auto pts = IntersectAnchored(a, b);
  if (!pts) {
    r.kind = CurveIntersection::Kind::kIdentical;
    return r;
  }
  for (auto& p : *pts) r.points.push_back(std::move(p.point));
  return r;
}

std::vector<AlgebraicPoint3> SelfCrossings(const ParamCurve& c) {
  std::vector<AlgebraicPoint3> out;
  for (auto& p : SelfCrossingsAnchored(c)) out.push_back(std::move(p.point));
  return out;
}

CurveFamilies::CurveFamilies(std::array<std::vector<ParamCurve>, 3> families, bool allow_empty) {
  for (int i = 0; i < 3; ++i) {
    std::set<ParamCurve> seen;
    for (auto& c : families[i]) {
      degree_bound_ = std::max(degree_bound_, c.degree_bound());
      if (seen.insert(c).second) {
        fam_[i].push_back(std::move(c));
      } else {
        ++dropped_[i];
      }
    }
    if (dropped_[i] > 0) {
      spdlog::warn("curve family {}: dropped {} duplicate curve(s), {} remain", i + 1,
                   dropped_[i], fam_[i].size());
    }
    if (fam_[i].empty() && !allow_empty) {
      throw ValidationError("curve family " + std::to_string(i + 1) + " is empty");
    }
  }
}

CurveFamilies LinesAsCurves(const LineFamilies& f) {
  std::array<std::vector<ParamCurve>, 3> fams;
  for (int i = 0; i < 3; ++i) {
    for (const auto& l : f[i]) fams[i].push_back(ParamCurve::FromLine(l));
  }
  return CurveFamilies(std::move(fams), true);
}

namespace {

struct Interval {
  Rational lo, hi;
};

Interval operator+(const Interval& a, const Interval& b) { return {a.lo + b.lo, a.hi + b.hi}; }
Interval operator-(const Interval& a, const Interval& b) { return {a.lo - b.hi, a.hi - b.lo}; }
Interval operator*(const Interval& a, const Interval& b) {
  const Rational p[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
  return {*std::min_element(p, p + 4), *std::max_element(p, p + 4)};
}

// Tangent vector at a point. Usually an element of the anchor field Q(t0);
// when a curve reaches the point through several complex parameters, its
// real ones are found separately and kept as c'(param).
struct Tangent {
  bool in_field = true;
  std::array<UniPoly, 3> k;
  RealAlgebraic param;
  std::array<UniPoly, 3> deriv;
};

UniPoly EvalInField(const UniPoly& p, const UniPoly& s, AlgebraicField& field) {
  UniPoly acc;
  for (int k = p.degree(); k >= 0; --k) {
    acc = field.Reduce(field.Mul(acc, s) + UniPoly::Constant(p.coeff(k)));
  }
  return acc;
}

class PointContext {
 public:
  explicit PointContext(const Anchored& x) : x_(x), field_(x.t0) {
    for (int i = 0; i < 3; ++i) xk_[i] = field_.Reduce(x.anchor[i]);
  }

  const AlgebraicPoint3& point() const { return x_.point; }

  std::vector<Tangent> TangentsOf(const ParamCurve& c) {
    FieldPoly g;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
      const UniPoly& comp = c.component(i);
      if (comp.IsConstant()) {
        if (!field_.IsZero(UniPoly::Constant(comp.coeff(0)) - xk_[i])) return {};
        continue;
      }
      FieldPoly e;
      for (const auto& co : comp.coeffs()) e.push_back(UniPoly::Constant(co));
      e[0] = field_.Reduce(e[0] - xk_[i]);
      TrimFieldPoly(e, field_);
      g = first ? e : FieldPolyGcd(g, e, field_);
      first = false;
    }
    TrimFieldPoly(g, field_);
    if (g.size() < 2) return {};
    const auto deriv = c.Derivative();
    std::vector<Tangent> out;
    if (g.size() == 2) {
      // One parameter, s = -g0 / g1, inside Q(t0).
      const UniPoly s = field_.Mul(-g[0], field_.Inverse(g[1]));
      Tangent t;
      bool zero = true;
      for (int i = 0; i < 3; ++i) {
        t.k[i] = EvalInField(deriv[i], s, field_);
        zero &= field_.IsZero(t.k[i]);
      }
      if (!zero) out.push_back(std::move(t));
      return out;
    }
    for (const auto& s : ParametersAt(c, x_.point)) {
      Tangent t;
      t.in_field = false;
      t.param = s;
      t.deriv = deriv;
      bool zero = true;
      for (int i = 0; i < 3; ++i) zero &= s.SignAt(deriv[i]) == 0;
      if (!zero) out.push_back(std::move(t));
    }
    return out;
  }

  bool Spans(const Tangent& a, const Tangent& b, const Tangent& c) {
    if (a.in_field && b.in_field && c.in_field) {
      auto m = [&](const UniPoly& u, const UniPoly& v) { return field_.Mul(u, v); };
      const UniPoly det = m(a.k[0], m(b.k[1], c.k[2]) - m(b.k[2], c.k[1])) -
                          m(a.k[1], m(b.k[0], c.k[2]) - m(b.k[2], c.k[0])) +
                          m(a.k[2], m(b.k[0], c.k[1]) - m(b.k[1], c.k[0]));
      return !field_.IsZero(det);
    }
    // Exact when every component turns out rational.
    std::array<std::array<RealAlgebraic, 3>, 3> v;
    const Tangent* ts[3] = {&a, &b, &c};
    bool rational = true;
    for (int r = 0; r < 3; ++r) {
      for (int i = 0; i < 3; ++i) {
        v[r][i] = ts[r]->in_field ? EvaluateAt(ts[r]->k[i], x_.t0)
                                  : EvaluateAt(ts[r]->deriv[i], ts[r]->param);
        rational &= v[r][i].is_rational();
      }
    }
    if (rational) {
      std::array<std::array<Rational, 3>, 3> q;
      for (int r = 0; r < 3; ++r) {
        for (int i = 0; i < 3; ++i) q[r][i] = v[r][i].rational();
      }
      return Sign(Det3(q[0], q[1], q[2])) != 0;
    }
    // Otherwise refine enclosures until the determinant is bounded away
    // from zero. A vanishing determinant cannot be certified this way.
    for (int round = 0; round < kRefineBudget; ++round) {
      std::array<std::array<Interval, 3>, 3> iv;
      for (int r = 0; r < 3; ++r) {
        for (int i = 0; i < 3; ++i) {
          iv[r][i] = {v[r][i].lo(), v[r][i].hi()};
        }
      }
      const Interval det = iv[0][0] * (iv[1][1] * iv[2][2] - iv[1][2] * iv[2][1]) -
                           iv[0][1] * (iv[1][0] * iv[2][2] - iv[1][2] * iv[2][0]) +
                           iv[0][2] * (iv[1][0] * iv[2][1] - iv[1][1] * iv[2][0]);
      if (Sign(det.lo) > 0 || Sign(det.hi) < 0) return true;
      for (auto& row : v) {
        for (auto& e : row) e = e.Refined();
      }
    }
    throw UndecidedSign("cannot certify the span of tangents at " + [&] {
      std::ostringstream os;
      os << x_.point;
      return os.str();
    }());
  }

 private:
  static constexpr int kRefineBudget = 200;
  const Anchored& x_;
  AlgebraicField field_;
  std::array<UniPoly, 3> xk_;
};

std::vector<Anchored> Candidates(const CurveFamilies& f) {
  std::vector<Anchored> out;
  std::set<int> crossing_done[3];
  for (int a = 0; a < 3; ++a) {
    for (int b = a + 1; b < 3; ++b) {
      for (int i = 0; i < f.size(a); ++i) {
        for (int j = 0; j < f.size(b); ++j) {
          auto pts = IntersectAnchored(f[a][i], f[b][j]);
          if (pts) {
            out.insert(out.end(), pts->begin(), pts->end());
          } else if (crossing_done[a].insert(i).second) {
            // A curve shared by two families meets the third family at
            // ordinary candidates; only its self-crossings can add more.
            auto sc = SelfCrossingsAnchored(f[a][i]);
            out.insert(out.end(), sc.begin(), sc.end());
          }
        }
      }
    }
  }
  DedupAnchored(out);
  return out;
}

template <class Keep>
std::vector<AlgebraicPoint3> Select(const CurveFamilies& f, Keep keep) {
  std::vector<AlgebraicPoint3> out;
  for (const auto& cand : Candidates(f)) {
    PointContext ctx(cand);
    std::array<std::vector<std::vector<Tangent>>, 3> t;
    for (int a = 0; a < 3; ++a) {
      for (const auto& c : f[a]) {
        auto ts = ctx.TangentsOf(c);
        if (!ts.empty()) t[a].push_back(std::move(ts));
      }
    }
    auto spans = [&](int i, int j, int k) {
      for (const auto& u : t[0][i]) {
        for (const auto& v : t[1][j]) {
          for (const auto& w : t[2][k]) {
            if (ctx.Spans(u, v, w)) return true;
          }
        }
      }
      return false;
    };
    const std::array<int, 3> counts = {static_cast<int>(t[0].size()),
                                       static_cast<int>(t[1].size()),
                                       static_cast<int>(t[2].size())};
    if (keep(counts, TriplePredicate(spans))) out.push_back(cand.point);
  }
  return out;
}

}  // namespace

std::vector<AlgebraicPoint3> CurveMultijoints(const CurveFamilies& f) {
  return Select(f, [](const std::array<int, 3>& counts, const TriplePredicate& spans) {
    for (int i = 0; i < counts[0]; ++i) {
      for (int j = 0; j < counts[1]; ++j) {
        for (int k = 0; k < counts[2]; ++k) {
          if (spans(i, j, k)) return true;
        }
      }
    }
    return false;
  });
}

std::vector<AlgebraicPoint3> CurveJThreshold(const CurveFamilies& f, const ThresholdQuery& q,
                                             const SearchOptions& options) {
  return Select(f, [&](const std::array<int, 3>& counts, const TriplePredicate& spans) {
    std::array<int, 3> need;
    for (int a = 0; a < 3; ++a) {
      if (q[a] > counts[a]) return false;
      need[a] = static_cast<int>(q[a]);
    }
    return FindTransversal(counts, need, spans, options).found;
  });
}

}  // namespace multijoint
