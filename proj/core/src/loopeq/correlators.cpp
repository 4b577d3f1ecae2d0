#include "toprec/loopeq/correlators.hpp"

#include <algorithm>
#include <numeric>

#include "toprec/errors.hpp"

namespace toprec::loopeq {

const Matrix<RatFunc>& Correlators::psi(const Point& p) const {
  auto it = psi_cache_.find(p);
  if (it == psi_cache_.end()) it = psi_cache_.emplace(p, sys_->psi_at(p)).first;
  return it->second;
}

const Matrix<RatFunc>& Correlators::psi_inv(const Point& p) const {
  auto it = inv_cache_.find(p);
  if (it == inv_cache_.end()) it = inv_cache_.emplace(p, sys_->psi_inv_at(p)).first;
  return it->second;
}

const Matrix<RatFunc>& Correlators::conj_L(const Point& p) const {
  auto it = conj_cache_.find(p);
  if (it == conj_cache_.end()) it = conj_cache_.emplace(p, sys_->conj_L_at(p)).first;
  return it->second;
}

Matrix<RatFunc> Correlators::kernel(const Point& a, const Point& b) const {
  if (a == b) throw UnsupportedOperation("kernel at coinciding points " + a.str());
  Matrix<RatFunc> k = alg::matmul(psi_inv(a), psi(b));
  RatFunc inv = a.minus(b).inverse();
  for (auto& row : k)
    for (auto& e : row) e *= inv;
  return k;
}

RatFunc Correlators::entry(const SheetPoint& i, const SheetPoint& j) const {
  const int d = sys_->d();
  if (i.sheet < 0 || i.sheet >= d || j.sheet < 0 || j.sheet >= d)
    throw UnsupportedOperation("sheet index out of range");
  const auto a = static_cast<std::size_t>(i.sheet), b = static_cast<std::size_t>(j.sheet);
  if (i.p == j.p) return -conj_L(i.p)[a][b] / RatFunc(sys_->hbar());
  const auto& inv = psi_inv(i.p);
  const auto& ps = psi(j.p);
  RatFunc acc;
  for (std::size_t l = 0; l < inv.size(); ++l) acc += inv[a][l] * ps[l][b];
  return acc / i.p.minus(j.p);
}

RatFunc Correlators::W(const std::vector<SheetPoint>& pts) const {
  const std::size_t n = pts.size();
  if (n == 0) throw UnsupportedOperation("W_0 is not defined");
  if (n == 1) return entry(pts[0], pts[0]);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (pts[i].p == pts[j].p && pts[i].sheet == pts[j].sheet)
        throw UnsupportedOperation("W_n at a repeated point " + pts[i].p.str());
  // Cycles 0 -> perm[0] -> ... -> perm[n-2] -> 0.
  std::vector<std::size_t> perm(n - 1);
  std::iota(perm.begin(), perm.end(), 1);
  std::map<std::pair<std::size_t, std::size_t>, RatFunc> memo;
  auto k = [&](std::size_t i, std::size_t j) -> const RatFunc& {
    auto it = memo.find({i, j});
    if (it == memo.end()) it = memo.emplace(std::make_pair(i, j), entry(pts[i], pts[j])).first;
    return it->second;
  };
  RatFunc sum;
  do {
    RatFunc term = k(0, perm[0]);
    for (std::size_t l = 0; l + 1 < perm.size(); ++l) term *= k(perm[l], perm[l + 1]);
    term *= k(perm.back(), 0);
    sum += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return n % 2 == 0 ? -sum : sum;
}

RatFunc Correlators::W_bar(const std::vector<SheetPoint>& pts) const {
  const std::size_t n = pts.size();
  Matrix<RatFunc> m(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i][j] = entry(pts[i], pts[j]);
  return alg::determinant(m);
}

Matrix<RatFunc> Correlators::projector(const SheetPoint& p) const {
  const auto& ps = psi(p.p);
  const auto& inv = psi_inv(p.p);
  const std::size_t n = ps.size();
  const auto a = static_cast<std::size_t>(p.sheet);
  Matrix<RatFunc> out(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out[i][j] = ps[i][a] * inv[a][j];
  return out;
}

}  // namespace toprec::loopeq
