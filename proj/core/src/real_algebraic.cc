#include "multijoint/real_algebraic.h"

#include <sstream>

#include "multijoint/errors.h"
#include "multijoint/resultant.h"
#include "multijoint/sturm.h"

namespace multijoint {
namespace {

// `sq` square-free with a single root in (lo, hi); rational roots detected.
RealAlgebraic IsolatedSquareFree(const UniPoly& sq, Rational lo, Rational hi,
                                 RealAlgebraic (*make)(const UniPoly&, const Rational&,
                                                       const Rational&)) {
  if (sq.degree() == 1) return RealAlgebraic(-sq.coeff(0) / sq.coeff(1));
  // A rational root p/q has q | lc. Distinct fractions with denominators at
  // most |lc| are at least 1/lc^2 apart, so once the interval is narrower
  // than that the simplest rational inside is the only possible candidate.
  const Rational lead = abs(sq.leading());
  const Rational target = 1 / (lead * lead);
  const int slo = Sign(sq(lo));
  while (hi - lo >= target) {
    Rational mid = (lo + hi) / 2;
    const int sm = Sign(sq(mid));
    if (sm == 0) return RealAlgebraic(mid);
    if (sm == slo) {
      lo = std::move(mid);
    } else {
      hi = std::move(mid);
    }
  }
  const Rational r = SimplestRationalBetween(lo, hi);
  if (Sign(sq(r)) == 0) return RealAlgebraic(r);
  return make(sq, lo, hi);
}

}  // namespace

RealAlgebraic::RealAlgebraic(const Rational& r)
    : rational_(true), poly_(UniPoly::Linear(-r, 1)), lo_(r), hi_(r) {}

RealAlgebraic RealAlgebraic::FromIsolated(const UniPoly& poly, const Rational& lo,
                                          const Rational& hi) {
  const UniPoly sq = SquareFreePart(poly);
  return IsolatedSquareFree(sq, lo, hi, [](const UniPoly& p, const Rational& l,
                                           const Rational& h) {
    RealAlgebraic a;
    a.rational_ = false;
    a.poly_ = p;
    a.lo_ = l;
    a.hi_ = h;
    return a;
  });
}

std::vector<RealAlgebraic> RealAlgebraic::RealRoots(const UniPoly& u) {
  const UniPoly sq = SquareFreePart(u);
  std::vector<RealAlgebraic> out;
  for (const auto& iv : IsolateRealRoots(sq)) {
    if (iv.lo == iv.hi) {
      out.emplace_back(iv.lo);
    } else {
      out.push_back(FromIsolated(sq, iv.lo, iv.hi));
    }
  }
  return out;
}

RealAlgebraic RealAlgebraic::Refined() const {
  if (rational_) return *this;
  Rational mid = (lo_ + hi_) / 2;
  const int sm = Sign(poly_(mid));
  if (sm == 0) return RealAlgebraic(mid);
  RealAlgebraic out = *this;
  if (sm == Sign(poly_(lo_))) {
    out.lo_ = std::move(mid);
  } else {
    out.hi_ = std::move(mid);
  }
  return out;
}

RealAlgebraic RealAlgebraic::RefinedTo(const Rational& width) const {
  RealAlgebraic a = *this;
  while (!a.rational_ && a.hi_ - a.lo_ > width) a = a.Refined();
  return a;
}

int RealAlgebraic::SignAt(const UniPoly& q) const {
  if (q.IsZero()) return 0;
  if (rational_) return Sign(q(lo_));
  const UniPoly r = Rem(q, poly_);
  if (r.IsZero()) return 0;
  const UniPoly g = Gcd(r, poly_);
  if (g.degree() >= 1 && Sign(g(lo_)) != Sign(g(hi_))) return 0;
  RealAlgebraic a = *this;
  while (true) {
    if (a.rational_) return Sign(r(a.lo_));
    const auto [lo, hi] = IntervalEvaluate(r, a.lo_, a.hi_);
    if (Sign(lo) > 0) return 1;
    if (Sign(hi) < 0) return -1;
    a = a.Refined();
  }
}

double RealAlgebraic::ToDouble() const {
  if (rational_) return lo_.get_d();
  const RealAlgebraic a = RefinedTo((abs(lo_) + abs(hi_) + 1) / Rational(Integer(1) << 60));
  if (a.rational_) return a.lo_.get_d();
  return Rational((a.lo_ + a.hi_) / 2).get_d();
}

std::string RealAlgebraic::ToString() const {
  std::ostringstream os;
  os << *this;
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const RealAlgebraic& a) {
  if (a.is_rational()) return os << a.rational();
  return os << "root(" << a.poly().ToString() << ", (" << a.lo() << ", " << a.hi() << "))";
}

int Compare(const RealAlgebraic& a, const RealAlgebraic& b) {
  if (a.rational_ && b.rational_) return cmp(a.lo_, b.lo_);
  if (b.rational_) return a.SignAt(UniPoly::Linear(-b.lo_, 1));
  if (a.rational_) return -b.SignAt(UniPoly::Linear(-a.lo_, 1));
  const Rational lo = a.lo_ > b.lo_ ? a.lo_ : b.lo_;
  const Rational hi = a.hi_ < b.hi_ ? a.hi_ : b.hi_;
  if (lo < hi) {
    const UniPoly g = Gcd(a.poly_, b.poly_);
    // Both intervals isolate a single root of their polynomial, so a common
    // root inside the overlap is the number itself.
    if (g.degree() >= 1 && SturmRootsInInterval(g, lo, hi) - (Sign(g(hi)) == 0) > 0) {
      return 0;
    }
  }
  RealAlgebraic x = a, y = b;
  while (true) {
    if (x.rational_ || y.rational_) return Compare(x, y);
    if (x.hi_ <= y.lo_) return -1;
    if (y.hi_ <= x.lo_) return 1;
    x = x.Refined();
    y = y.Refined();
  }
}

UniPoly MultiplicationCharPoly(const UniPoly& q, const UniPoly& m) {
  const int n = m.degree();
  std::vector<std::vector<UniPoly>> mat(n, std::vector<UniPoly>(n));
  UniPoly col = Rem(q, m);
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      mat[i][j] = UniPoly::Constant(-col.coeff(i));
      if (i == j) mat[i][j] += UniPoly::Linear(0, 1);
    }
    col = Rem(col * UniPoly::Linear(0, 1), m);
  }
  return BareissDeterminant(
      std::move(mat), [](const UniPoly& a, const UniPoly& b) { return ExactQuotient(a, b); },
      [](const UniPoly& a) { return a.IsZero(); }, UniPoly::Constant(1));
}

RealAlgebraic EvaluateAt(const UniPoly& q, const RealAlgebraic& a) {
  if (a.is_rational()) return RealAlgebraic(q(a.rational()));
  const UniPoly r = Rem(q, a.poly());
  if (r.IsConstant()) return RealAlgebraic(r.coeff(0));
  const UniPoly d = SquareFreePart(MultiplicationCharPoly(r, a.poly()));
  if (d.degree() == 1) return RealAlgebraic(-d.coeff(0) / d.coeff(1));
  const SturmSequence seq(d);
  RealAlgebraic x = a;
  while (true) {
    if (x.is_rational()) return RealAlgebraic(r(x.rational()));
    const auto [lo, hi] = IntervalEvaluate(r, x.lo(), x.hi());
    const bool at_lo = Sign(d(lo)) == 0;
    const int n = seq.CountIn(lo, hi) + (at_lo ? 1 : 0);
    if (n == 1) {
      if (at_lo) return RealAlgebraic(lo);
      if (Sign(d(hi)) == 0) return RealAlgebraic(hi);
      return RealAlgebraic::FromIsolated(d, lo, hi);
    }
    x = x.Refined();
  }
}

UniPoly ResultantOverQt(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b) {
  return SylvesterResultant(
      a, b, [](const UniPoly& x, const UniPoly& y) { return ExactQuotient(x, y); },
      [](const UniPoly& x) { return x.IsZero(); }, UniPoly::Constant(1));
}

}  // namespace multijoint
