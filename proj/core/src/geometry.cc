#include "multijoint/geometry.h"

#include "multijoint/errors.h"

namespace multijoint {
namespace {

std::strong_ordering Cmp(const Rational& a, const Rational& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering Cmp(const Integer& a, const Integer& b) {
  const int c = cmp(a, b);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::array<Rational, 3> AsRational(const Dir3& d) {
  return {Rational(d[0]), Rational(d[1]), Rational(d[2])};
}

}  // namespace

std::strong_ordering operator<=>(const Point3& a, const Point3& b) {
  for (int i = 0; i < 3; ++i) {
    if (auto c = Cmp(a[i], b[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Point3& p) {
  return os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
}

Dir3 Dir3::FromRational(const Rational& dx, const Rational& dy, const Rational& dz) {
  if (Sign(dx) == 0 && Sign(dy) == 0 && Sign(dz) == 0) {
    throw ZeroDirection("direction vector is zero");
  }
  const std::array<const Rational*, 3> in = {&dx, &dy, &dz};
  Integer den = 1;
  for (const Rational* r : in) den = Lcm(den, r->get_den());
  Dir3 d;
  Integer g = 0;
  for (int i = 0; i < 3; ++i) {
    d.c_[i] = in[i]->get_num() * (den / in[i]->get_den());
    g = Gcd(g, d.c_[i]);
  }
  for (auto& c : d.c_) c /= g;
  if (Sign(d.c_[d.pivot()]) < 0) {
    for (auto& c : d.c_) c = -c;
  }
  return d;
}

int Dir3::pivot() const {
  for (int i = 0; i < 3; ++i) {
    if (Sign(c_[i]) != 0) return i;
  }
  return 0;
}

std::strong_ordering operator<=>(const Dir3& a, const Dir3& b) {
  for (int i = 0; i < 3; ++i) {
    if (auto c = Cmp(a.c_[i], b.c_[i]); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Dir3& d) {
  return os << "<" << d[0] << ", " << d[1] << ", " << d[2] << ">";
}

std::strong_ordering operator<=>(const Line3& a, const Line3& b) {
  if (auto c = a.dir_ <=> b.dir_; c != 0) return c;
  return a.base_ <=> b.base_;
}

Point3 Line3::At(const Rational& t) const {
  return {base_.x + t * dir_[0], base_.y + t * dir_[1], base_.z + t * dir_[2]};
}

std::ostream& operator<<(std::ostream& os, const Line3& l) {
  return os << l.base() << " + t" << l.dir();
}

Line3 CanonicalizeLine(const Point3& p, const Dir3& d) {
  const int k = d.pivot();
  const Rational t = -p[k] / Rational(d[k]);
  Point3 base{p.x + t * d[0], p.y + t * d[1], p.z + t * d[2]};
  base[k] = 0;
  return Line3(std::move(base), d);
}

Line3 MakeLine(const Point3& p, const Rational& dx, const Rational& dy,
               const Rational& dz) {
  return CanonicalizeLine(p, Dir3::FromRational(dx, dy, dz));
}

Line3 LineThrough(const Point3& a, const Point3& b) {
  return MakeLine(a, b.x - a.x, b.y - a.y, b.z - a.z);
}

Rational Det3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
              const std::array<Rational, 3>& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

bool Span3(const Dir3& d1, const Dir3& d2, const Dir3& d3) {
  const Integer det = d1[0] * (d2[1] * d3[2] - d2[2] * d3[1]) -
                      d1[1] * (d2[0] * d3[2] - d2[2] * d3[0]) +
                      d1[2] * (d2[0] * d3[1] - d2[1] * d3[0]);
  return Sign(det) != 0;
}

LineIntersection LineIntersect(const Line3& l1, const Line3& l2) {
  LineIntersection out;
  if (l1.dir() == l2.dir()) {
    out.kind = l1.base() == l2.base() ? LineIntersection::Kind::kIdentical
                                      : LineIntersection::Kind::kEmpty;
    return out;
  }
  const auto d1 = AsRational(l1.dir());
  const auto d2 = AsRational(l2.dir());
  const std::array<Rational, 3> w = {l2.base().x - l1.base().x,
                                     l2.base().y - l1.base().y,
                                     l2.base().z - l1.base().z};
  if (Sign(Det3(d1, d2, w)) != 0) return out;  // skew

  // Coplanar and not parallel: solve b1 + s d1 = b2 + t d2 on a coordinate
  // pair whose 2x2 minor of [d1 d2] is nonzero.
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3;
    const Rational minor = d1[i] * d2[j] - d1[j] * d2[i];
    if (Sign(minor) == 0) continue;
    const Rational s = (w[i] * d2[j] - w[j] * d2[i]) / minor;
    out.kind = LineIntersection::Kind::kPoint;
    out.point = l1.At(s);
    return out;
  }
  return out;  // unreachable for non-parallel directions
}

bool PointOnLine(const Point3& x, const Line3& l) {
  const Rational w[3] = {x.x - l.base().x, x.y - l.base().y, x.z - l.base().z};
  const Dir3& d = l.dir();
  return w[1] * d[2] == w[2] * d[1] && w[2] * d[0] == w[0] * d[2] &&
         w[0] * d[1] == w[1] * d[0];
}

}  // namespace multijoint
