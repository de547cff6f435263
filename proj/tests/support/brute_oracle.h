#ifndef MULTIJOINT_TESTS_BRUTE_ORACLE_H_
#define MULTIJOINT_TESTS_BRUTE_ORACLE_H_

// Brute-force multijoint oracle: enumerates every triple of lines, finds
// concurrency with its own linear algebra, and decides thresholds by subset
// enumeration. Uses only the line records, never the incidence module.

#include <gmpxx.h>

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "multijoint/geometry.h"
#include "multijoint/incidence.h"

namespace brute {

using Q = mpq_class;
using Vec = std::array<Q, 3>;

inline Vec Base(const multijoint::Line3& l) { return {l.base().x, l.base().y, l.base().z}; }
inline Vec Dir(const multijoint::Line3& l) {
  return {Q(l.dir()[0]), Q(l.dir()[1]), Q(l.dir()[2])};
}
inline Vec Cross(const Vec& a, const Vec& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
inline Q Dot(const Vec& a, const Vec& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }
inline Vec Sub(const Vec& a, const Vec& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline bool Contains(const multijoint::Line3& l, const Vec& x) {
  const Vec c = Cross(Sub(x, Base(l)), Dir(l));
  return c[0] == 0 && c[1] == 0 && c[2] == 0;
}

// Intersection of two non-parallel lines, if they meet. Solves
// b1 + s d1 = b2 + t d2 via the normal n = d1 x d2: coplanarity is
// (b2 - b1) . n = 0 and s = ((b2 - b1) x d2) . n / |n|^2.
inline std::optional<Vec> Meet(const multijoint::Line3& a, const multijoint::Line3& b) {
  const Vec d1 = Dir(a), d2 = Dir(b);
  const Vec n = Cross(d1, d2);
  const Q nn = Dot(n, n);
  if (nn == 0) return std::nullopt;
  const Vec w = Sub(Base(b), Base(a));
  if (Dot(w, n) != 0) return std::nullopt;
  const Q s = Dot(Cross(w, d2), n) / nn;
  const Vec b1 = Base(a);
  return Vec{b1[0] + s * d1[0], b1[1] + s * d1[1], b1[2] + s * d1[2]};
}

inline bool Spans(const Vec& a, const Vec& b, const Vec& c) { return Dot(a, Cross(b, c)) != 0; }

inline multijoint::Point3 ToPoint(const Vec& v) { return {v[0], v[1], v[2]}; }

// Multiplicity of every multijoint.
inline std::map<multijoint::Point3, long> MultiplicityMap(const multijoint::LineFamilies& f) {
  std::map<multijoint::Point3, long> out;
  for (const auto& l1 : f[0]) {
    for (const auto& l2 : f[1]) {
      const auto x = Meet(l1, l2);
      if (!x) continue;
      for (const auto& l3 : f[2]) {
        if (Contains(l3, *x) && Spans(Dir(l1), Dir(l2), Dir(l3))) ++out[ToPoint(*x)];
      }
    }
  }
  return out;
}

inline std::vector<multijoint::Point3> Multijoints(const multijoint::LineFamilies& f) {
  std::vector<multijoint::Point3> out;
  for (const auto& [p, n] : brute::MultiplicityMap(f)) out.push_back(p);
  return out;
}

// All subsets of `items` of size k.
inline void Subsets(const std::vector<int>& items, int k, size_t start, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (size_t i = start; i < items.size(); ++i) {
    cur.push_back(items[i]);
    Subsets(items, k, i + 1, cur, out);
    cur.pop_back();
  }
}

// Threshold set by enumerating, at every multijoint, all subfamilies of
// sizes N_1..N_3 among the lines through it.
inline std::vector<multijoint::Point3> JThreshold(const multijoint::LineFamilies& f,
                                                  const std::array<long, 3>& n) {
  std::vector<multijoint::Point3> out;
  for (const auto& x : brute::Multijoints(f)) {
    const Vec xv{x.x, x.y, x.z};
    std::array<std::vector<int>, 3> through;
    for (int a = 0; a < 3; ++a) {
      for (int i = 0; i < f.size(a); ++i) {
        if (Contains(f[a][i], xv)) through[a].push_back(i);
      }
    }
    std::array<std::vector<std::vector<int>>, 3> options;
    bool possible = true;
    for (int a = 0; a < 3; ++a) {
      if (static_cast<long>(through[a].size()) < n[a]) possible = false;
      std::vector<int> cur;
      if (possible) Subsets(through[a], static_cast<int>(n[a]), 0, cur, options[a]);
    }
    if (!possible) continue;
    bool found = false;
    for (const auto& s1 : options[0]) {
      for (const auto& s2 : options[1]) {
        for (const auto& s3 : options[2]) {
          bool all = true;
          for (int i : s1)
            for (int j : s2)
              for (int k : s3) all = all && Spans(Dir(f[0][i]), Dir(f[1][j]), Dir(f[2][k]));
          if (all) found = true;
          if (found) break;
        }
        if (found) break;
      }
      if (found) break;
    }
    if (found) out.push_back(x);
  }
  return out;
}

}  // namespace brute

#endif  // MULTIJOINT_TESTS_BRUTE_ORACLE_H_
