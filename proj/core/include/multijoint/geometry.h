#ifndef MULTIJOINT_GEOMETRY_H_
#define MULTIJOINT_GEOMETRY_H_

#include <array>
#include <compare>
#include <ostream>

#include "multijoint/rational.h"

namespace multijoint {

struct Point3 {
  Rational x, y, z;

  const Rational& operator[](int i) const { return i == 0 ? x : (i == 1 ? y : z); }
  Rational& operator[](int i) { return i == 0 ? x : (i == 1 ? y : z); }

  friend bool operator==(const Point3& a, const Point3& b) {
    return a.x == b.x && a.y == b.y && a.z == b.z;
  }
  // Lexicographic by (x, y, z).
  friend std::strong_ordering operator<=>(const Point3& a, const Point3& b);
};

std::ostream& operator<<(std::ostream& os, const Point3& p);

// A direction stored as a primitive integer vector whose first nonzero
// component is positive. Two parallel directions have equal representations.
class Dir3 {
 public:
  // Throws ZeroDirection if all components vanish.
  static Dir3 FromRational(const Rational& dx, const Rational& dy,
                           const Rational& dz);
  static Dir3 FromInts(long dx, long dy, long dz) {
    return FromRational(dx, dy, dz);
  }

  const Integer& operator[](int i) const { return c_[i]; }
  const std::array<Integer, 3>& components() const { return c_; }

  // Index of the first nonzero component.
  int pivot() const;

  friend bool operator==(const Dir3& a, const Dir3& b) { return a.c_ == b.c_; }
  friend std::strong_ordering operator<=>(const Dir3& a, const Dir3& b);

 private:
  Dir3() = default;
  std::array<Integer, 3> c_;
};

std::ostream& operator<<(std::ostream& os, const Dir3& d);

// {base + t * dir}. The base point has a zero in the pivot coordinate of
// dir, which makes the representation unique per point set.
class Line3 {
 public:
  const Point3& base() const { return base_; }
  const Dir3& dir() const { return dir_; }

  friend bool operator==(const Line3& a, const Line3& b) {
    return a.base_ == b.base_ && a.dir_ == b.dir_;
  }
  friend std::strong_ordering operator<=>(const Line3& a, const Line3& b);

  // base + t * dir.
  Point3 At(const Rational& t) const;

 private:
  friend Line3 CanonicalizeLine(const Point3& p, const Dir3& d);
  Line3(Point3 base, Dir3 dir) : base_(std::move(base)), dir_(std::move(dir)) {}

  Point3 base_;
  Dir3 dir_;
};

std::ostream& operator<<(std::ostream& os, const Line3& l);

Line3 CanonicalizeLine(const Point3& p, const Dir3& d);

// Convenience for lines given by a point and rational direction components.
Line3 MakeLine(const Point3& p, const Rational& dx, const Rational& dy,
               const Rational& dz);
// The line through two distinct points; throws ZeroDirection if a == b.
Line3 LineThrough(const Point3& a, const Point3& b);

// det[d1 d2 d3] != 0.
bool Span3(const Dir3& d1, const Dir3& d2, const Dir3& d3);

Rational Det3(const std::array<Rational, 3>& a, const std::array<Rational, 3>& b,
              const std::array<Rational, 3>& c);

struct LineIntersection {
  enum class Kind { kEmpty, kPoint, kIdentical };
  Kind kind = Kind::kEmpty;
  Point3 point;  // Valid only for kPoint.
};

LineIntersection LineIntersect(const Line3& l1, const Line3& l2);

bool PointOnLine(const Point3& x, const Line3& l);

}  // namespace multijoint

#endif  // MULTIJOINT_GEOMETRY_H_
