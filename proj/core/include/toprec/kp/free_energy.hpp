#pragma once

#include <map>

#include "toprec/kp/string_series.hpp"
#include "toprec/tr/correlator_table.hpp"

namespace toprec::kp {

/// Res_{z = oo} z w(z) for a one-point form w.
Rat residue_z_at_infinity(const tr::TensorForm& w1);

/// F^(g) in tau. g = 0 uses the closed homogeneous form, g = 1 carries the
/// log term. The table must be built on the model curve.
PuiseuxSum free_energy(const PQModel& m, tr::CorrelatorTable& table, int g);

struct FreeEnergyTable {
  PQModel model;
  std::map<int, PuiseuxSum> F;
};

FreeEnergyTable free_energy_table(const PQModel& m, tr::CorrelatorTable& table, int g_max);

struct TauReport {
  int g_checked = 0;
};

/// u^{g} = d^2/dt^2 F^(g) for g = 0 .. g_max; throws TauMismatch.
TauReport tau_crosscheck(const PQModel& m, const FreeEnergyTable& fe, const StringSeries& ss, int g_max);

}  // namespace toprec::kp
