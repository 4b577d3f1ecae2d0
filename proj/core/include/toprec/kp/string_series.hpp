#pragma once

#include <vector>

#include "toprec/alg/puiseux.hpp"
#include "toprec/kp/pq_model.hpp"

namespace toprec::kp {

using alg::HbarSeries;
using alg::PuiseuxSum;

/// t = rho tau^e as a PuiseuxSum in tau.
PuiseuxSum time_in_tau(const PQModel& m);

/// d/dt written in tau: (1 / (rho e)) tau^(1 - e) d/dtau.
PuiseuxSum d_dt(const PQModel& m, const PuiseuxSum& f);

/// u = sum_g hbar^(2g) u^{g}(tau) with u^{0} = tau.
struct StringSeries {
  PQModel model;
  std::vector<PuiseuxSum> orders;

  int g_max() const { return static_cast<int>(orders.size()) - 1; }
  /// hbar series with coefficients at every power up to hbar^(2 g_max + 1).
  HbarSeries as_hbar_series() const;
};

/// Solves S(u) = t order by order in hbar; odd orders are asserted to vanish.
/// Requires all model constants to be 0.
StringSeries string_series(const PQModel& m, int g_max);

}  // namespace toprec::kp
