#pragma once

#include <cstddef>
#include <vector>

namespace toprec::alg {

template <class T>
using Matrix = std::vector<std::vector<T>>;

template <class T>
Matrix<T> matmul(const Matrix<T>& a, const Matrix<T>& b) {
  std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Matrix<T> r(n, std::vector<T>(m, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l)
      for (std::size_t j = 0; j < m; ++j) r[i][j] = r[i][j] + a[i][l] * b[l][j];
  return r;
}

/// Characteristic polynomial by the division-free Berkowitz algorithm, valid
/// over any commutative ring. Returns c with det(lambda*I - A) =
/// sum_i c[i] lambda^(n-i), so c[0] = 1.
template <class T>
std::vector<T> berkowitz(const Matrix<T>& a) {
  std::size_t n = a.size();
  std::vector<T> p{T(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t m = k - 1;  // size of the leading block
    std::vector<T> c(k + 1, T(0));
    c[0] = T(1);
    c[1] = T(0) - a[m][m];
    // v = A_m^(j-2) S, iterated.
    std::vector<T> v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = a[i][m];
    for (std::size_t j = 2; j <= k; ++j) {
      T dot(0);
      for (std::size_t i = 0; i < m; ++i) dot = dot + a[m][i] * v[i];
      c[j] = T(0) - dot;
      if (j < k) {
        std::vector<T> w(m, T(0));
        for (std::size_t i = 0; i < m; ++i)
          for (std::size_t l = 0; l < m; ++l) w[i] = w[i] + a[i][l] * v[l];
        v = std::move(w);
      }
    }
    std::vector<T> q(k + 1, T(0));
    for (std::size_t i = 0; i <= k; ++i)
      for (std::size_t j = 0; j <= std::min(i, k - 1); ++j) q[i] = q[i] + c[i - j] * p[j];
    p = std::move(q);
  }
  return p;
}

template <class T>
T determinant(const Matrix<T>& a) {
  auto c = berkowitz(a);
  T d = c.back();
  if (a.size() % 2 == 1) d = T(0) - d;
  return d;
}

/// Resultant of two polynomials given by coefficient lists (degree 0 first,
/// leading coefficient nonzero), as the Sylvester determinant.
template <class T>
T resultant(const std::vector<T>& p, const std::vector<T>& q) {
  std::size_t m = p.size() - 1, n = q.size() - 1;
  std::size_t N = m + n;
  if (N == 0) return T(1);
  Matrix<T> s(N, std::vector<T>(N, T(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= m; ++j) s[i][i + j] = p[m - j];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j <= n; ++j) s[n + i][i + j] = q[n - j];
  return determinant(s);
}

}  // namespace toprec::alg
