#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <utility>
#include <vector>

#include "toprec/alg/laurent.hpp"
#include "toprec/curve/spectral_curve.hpp"
#include "toprec/tr/tensor_form.hpp"

namespace toprec::tr {

struct TruncationPolicy {
  /// Initial local order is 6g + 2n + base_extra.
  int base_extra = 6;
  /// Recompute at order + verify_extra and require an identical result.
  bool verify = true;
  int verify_extra = 4;
  /// The order is doubled on TruncationExhausted up to cap_factor * initial.
  int cap_factor = 4;
  /// Worker threads per residue sweep; 0 reads TOPREC_THREADS, else hardware.
  int threads = 0;
  /// Run the slot-wise invariant checks on each new form.
  bool check_invariants = true;
};

/// One kernel coefficient: K(z1, z) = sum_m K_m(t) dz1/(z1 - r)^(m+1).
struct KernelTerm {
  int m = 1;
  alg::Series coeff;
};

struct RamContext;

/// Memoized omega_n^(g) on a genus-0 curve. (0,1) and (0,2) are closed forms
/// and never stored here.
class CorrelatorTable {
 public:
  explicit CorrelatorTable(curve::SpectralCurve c, TruncationPolicy p = {});
  ~CorrelatorTable();
  CorrelatorTable(const CorrelatorTable&) = delete;
  CorrelatorTable& operator=(const CorrelatorTable&) = delete;

  const curve::SpectralCurve& curve() const { return curve_; }
  const TruncationPolicy& policy() const { return policy_; }

  /// omega_n^(g) for 2g - 2 + n >= 1.
  const TensorForm& omega(int g, int n);

  /// Kernel coefficients K_1 .. K_mmax around r with local order `order`.
  std::vector<KernelTerm> kernel_expansion(const Rat& r, int mmax, int order);

  /// Slot-wise checks (pole-free at infinity, local antisymmetry at every
  /// ramification point); throws IdentityViolation / UnexpectedPole.
  void check_form(const TensorForm& f, int order);

  int initial_order(int g, int n) const { return 6 * g + 2 * n + policy_.base_extra; }

 private:
  std::map<PoleTuple, Rat> compute_ordered(int g, int n, int order);
  std::map<PoleTuple, Rat> compute_at_r(int g, int n, std::size_t ri, int order);
  RamContext& context(std::size_t ri, int order);
  int thread_count() const;

  curve::SpectralCurve curve_;
  TruncationPolicy policy_;
  std::map<std::pair<int, int>, TensorForm> cache_;
  std::map<std::pair<std::size_t, int>, std::unique_ptr<RamContext>> contexts_;
  std::mutex contexts_mutex_;
};

}  // namespace toprec::tr
