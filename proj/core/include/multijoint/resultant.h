#ifndef MULTIJOINT_RESULTANT_H_
#define MULTIJOINT_RESULTANT_H_

#include <utility>
#include <vector>

#include "multijoint/unipoly.h"

namespace multijoint {

// Fraction-free Gaussian elimination over an integral domain. `exact_div`
// must divide exactly; `is_zero` tests ring elements.
template <class T, class ExactDiv, class IsZero>
T BareissDeterminant(std::vector<std::vector<T>> m, ExactDiv exact_div, IsZero is_zero,
                     const T& one) {
  const size_t n = m.size();
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(m[k][k])) {
      size_t r = k + 1;
      while (r < n && is_zero(m[r][k])) ++r;
      if (r == n) return T();
      std::swap(m[k], m[r]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      }
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Resultant of two polynomials in a main variable whose coefficients
// (ascending, leading coefficient nonzero) live in an integral domain T.
template <class T, class ExactDiv, class IsZero>
T SylvesterResultant(const std::vector<T>& a, const std::vector<T>& b, ExactDiv exact_div,
                     IsZero is_zero, const T& one) {
  const int da = static_cast<int>(a.size()) - 1;
  const int db = static_cast<int>(b.size()) - 1;
  if (da < 0 || db < 0) return T();
  const int n = da + db;
  std::vector<std::vector<T>> m(n, std::vector<T>(n));
  for (int r = 0; r < db; ++r) {
    for (int i = 0; i <= da; ++i) m[r][r + i] = a[da - i];
  }
  for (int r = 0; r < da; ++r) {
    for (int i = 0; i <= db; ++i) m[db + r][r + i] = b[db - i];
  }
  return BareissDeterminant(std::move(m), exact_div, is_zero, one);
}

// Resultant with respect to the main variable of bivariate polynomials given
// as coefficient lists in Q[t]; the result is a polynomial in t.
UniPoly ResultantOverQt(const std::vector<UniPoly>& a, const std::vector<UniPoly>& b);

}  // namespace multijoint

#endif  // MULTIJOINT_RESULTANT_H_
