#include "toprec/loopeq/psi_system.hpp"

#include <random>

#include "toprec/errors.hpp"

namespace toprec::loopeq {

RatFunc Point::minus(const Point& o) const {
  RatFunc a = symbolic ? RatFunc(Poly::variable("x")) : RatFunc(value);
  RatFunc b = o.symbolic ? RatFunc(Poly::variable("x")) : RatFunc(o.value);
  return a - b;
}

Matrix<RatFunc> inverse(const Matrix<RatFunc>& a, RatFunc* det) {
  const std::size_t n = a.size();
  Matrix<RatFunc> m = a;
  Matrix<RatFunc> inv(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = RatFunc(1);
  RatFunc d(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero()) ++piv;
    if (piv == n) throw SingularPsiAt("matrix is singular");
    if (piv != c) {
      std::swap(m[piv], m[c]);
      std::swap(inv[piv], inv[c]);
      d = -d;
    }
    RatFunc p = m[c][c];
    d *= p;
    RatFunc pinv = p.inverse();
    for (std::size_t j = 0; j < n; ++j) {
      m[c][j] *= pinv;
      inv[c][j] *= pinv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || m[i][c].is_zero()) continue;
      RatFunc f = m[i][c];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[c][j];
        inv[i][j] -= f * inv[c][j];
      }
    }
  }
  if (det) *det = d;
  return inv;
}

PsiSystem::PsiSystem(Matrix<RatFunc> psi, Rat hbar) : hbar_(std::move(hbar)), psi_(std::move(psi)) {
  if (hbar_.is_zero()) throw UnsupportedOperation("hbar must be nonzero");
  psi_inv_ = inverse(psi_, &det_);
  const std::size_t n = psi_.size();
  Matrix<RatFunc> dpsi(n, std::vector<RatFunc>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) dpsi[i][j] = psi_[i][j].derivative() * RatFunc(hbar_);
  L_ = alg::matmul(dpsi, psi_inv_);
  conj_L_ = alg::matmul(psi_inv_, dpsi);
}

Matrix<RatFunc> PsiSystem::eval(const Matrix<RatFunc>& m, const Point& p) const {
  if (p.symbolic) return m;
  Matrix<RatFunc> out(m.size(), std::vector<RatFunc>(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      try {
        out[i][j] = RatFunc(m[i][j].eval(p.value));
      } catch (const EvalAtPole&) {
        throw SingularPsiAt("Psi is singular at x = " + p.value.str());
      }
    }
  return out;
}

Matrix<RatFunc> PsiSystem::psi_at(const Point& p) const { return eval(psi_, p); }

Matrix<RatFunc> PsiSystem::psi_inv_at(const Point& p) const {
  if (!p.symbolic && !det_.is_zero()) {
    bool zero = false;
    try {
      zero = det_.eval(p.value).is_zero();
    } catch (const EvalAtPole&) {
      zero = true;
    }
    if (zero) throw SingularPsiAt("det Psi vanishes at x = " + p.value.str());
  }
  return eval(psi_inv_, p);
}

Matrix<RatFunc> PsiSystem::conj_L_at(const Point& p) const {
  psi_inv_at(p);
  return eval(conj_L_, p);
}

Matrix<RatFunc> PsiSystem::L_at(const Point& p) const {
  psi_inv_at(p);
  return eval(L_, p);
}

PsiSystem random_system(int d, int deg, std::uint64_t seed, const Rat& hbar) {
  if (d < 1 || deg < 0) throw UnsupportedOperation("random_system needs d >= 1 and deg >= 0");
  for (int nonce = 0;; ++nonce) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(nonce)};
    std::mt19937_64 rng(seq);
    Matrix<RatFunc> psi(static_cast<std::size_t>(d), std::vector<RatFunc>(static_cast<std::size_t>(d)));
    for (auto& row : psi)
      for (auto& e : row) {
        std::vector<Rat> c;
        for (int k = 0; k <= deg; ++k) c.emplace_back(static_cast<long>(rng() % 7) - 3);
        e = RatFunc(Poly(c, "x"));
      }
    try {
      PsiSystem s(std::move(psi), hbar);
      s.nonce = nonce;
      s.seed = seed;
      return s;
    } catch (const SingularPsiAt&) {
    }
  }
}

}  // namespace toprec::loopeq
