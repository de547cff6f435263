#ifndef MULTIJOINT_TESTS_ROOT_ORACLE_H_
#define MULTIJOINT_TESTS_ROOT_ORACLE_H_

// Distinct real root counting by Descartes' rule of signs and interval
// bisection. Shares no code with the library's Sturm machinery.

#include <gmpxx.h>

#include <vector>

namespace oracle {

using Q = mpq_class;
using Poly = std::vector<Q>;  // ascending

inline void Trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly Derivative(const Poly& p) {
  Poly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * Q(static_cast<long>(i)));
  Trim(d);
  return d;
}

inline Poly Remainder(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    Trim(a);
  }
  return a;
}

inline Poly Quotient(Poly a, const Poly& b) {
  Poly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
  while (a.size() >= b.size() && !a.empty()) {
    const Q f = a.back() / b.back();
    const size_t shift = a.size() - b.size();
    q[shift] = f;
    for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    Trim(a);
  }
  Trim(q);
  return q;
}

inline Poly EuclidGcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = Remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

inline Q Eval(const Poly& p, const Q& x) {
  Q acc = 0;
  for (size_t i = p.size(); i-- > 0;) acc = acc * x + p[i];
  return acc;
}

inline Poly Mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Sign variations in the coefficients of (1+x)^n p((lo + hi x) / (1 + x)),
// an upper bound on the roots in (lo, hi) with the same parity.
inline int DescartesBound(const Poly& p, const Q& lo, const Q& hi) {
  const size_t n = p.size() - 1;
  Poly acc;
  for (size_t k = 0; k <= n; ++k) {
    // p_k (lo + hi x)^k (1 + x)^(n-k)
    Poly term{p[k]};
    for (size_t i = 0; i < k; ++i) term = Mul(term, Poly{lo, hi});
    for (size_t i = k; i < n; ++i) term = Mul(term, Poly{1, 1});
    if (acc.size() < term.size()) acc.resize(term.size());
    for (size_t i = 0; i < term.size(); ++i) acc[i] += term[i];
  }
  int changes = 0;
  int last = 0;
  for (const Q& c : acc) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

inline int CountInOpen(const Poly& sf, const Q& lo, const Q& hi) {
  const int v = DescartesBound(sf, lo, hi);
  if (v == 0) return 0;
  if (v == 1) return 1;
  const Q mid = (lo + hi) / 2;
  return CountInOpen(sf, lo, mid) + CountInOpen(sf, mid, hi) + (Eval(sf, mid) == 0 ? 1 : 0);
}

// Number of distinct real roots of a nonzero polynomial.
inline int DistinctRealRoots(Poly p) {
  Trim(p);
  if (p.size() <= 1) return 0;
  const Poly g = EuclidGcd(p, Derivative(p));
  const Poly sf = Quotient(p, g);
  if (sf.size() <= 1) return 0;
  Q bound = 0;
  for (size_t i = 0; i + 1 < sf.size(); ++i) {
    Q r = abs(sf[i] / sf.back());
    if (r > bound) bound = r;
  }
  bound += 1;
  return CountInOpen(sf, -bound, bound);
}

}  // namespace oracle

#endif  // MULTIJOINT_TESTS_ROOT_ORACLE_H_
