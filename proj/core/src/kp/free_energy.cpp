#include "toprec/kp/free_energy.hpp"

#include "toprec/errors.hpp"

namespace toprec::kp {

// z / (z - r) = 1 + r/z + ..., z / (z - r)^2 = 1/z + ..., higher k decay.
Rat residue_z_at_infinity(const tr::TensorForm& w1) {
  if (w1.n() != 1) throw UnsupportedOperation("residue at infinity needs a one-point form");
  Rat acc;
  for (const auto& [key, c] : w1.terms()) {
    if (key[0].k == 1) acc += c * key[0].r;
    else if (key[0].k == 2) acc += c;
  }
  return -acc;
}

PuiseuxSum free_energy(const PQModel& m, tr::CorrelatorTable& table, int g) {
  if (g < 0) throw UnsupportedOperation("genus must be non-negative");
  const int pq = m.p + m.q;
  if (g == 0) {
    Rat c = Rat(1, 2) * Rat((pq - 1) * (pq - 1), pq * (pq + 1)) * m.rho * m.rho;
    return PuiseuxSum::monomial(c, Rat(pq));
  }
  if (!(table.curve().X == m.f) || !(table.curve().Y == m.g))
    throw CurveMismatch("correlator table is not built on the " + m.name() + " model curve");
  Rat res = residue_z_at_infinity(table.omega(g, 1));
  // dF/dtau = (dt/dtau) * Res, with the residue scaled from u0 = 1 to u0 = tau.
  PuiseuxSum dF = PuiseuxSum::monomial(m.rho * m.time_exponent() * res, Rat((1 - g) * pq - 1));
  if (!dF.is_zero() && !dF.is_monomial()) throw IdentityViolation("dF/dtau is not a single monomial");
  return dF.antiderivative();
}

FreeEnergyTable free_energy_table(const PQModel& m, tr::CorrelatorTable& table, int g_max) {
  FreeEnergyTable t{m, {}};
  for (int g = 0; g <= g_max; ++g) t.F[g] = free_energy(m, table, g);
  return t;
}

TauReport tau_crosscheck(const PQModel& m, const FreeEnergyTable& fe, const StringSeries& ss, int g_max) {
  if (ss.g_max() < g_max) throw InsufficientOrder("string series known to g = " + std::to_string(ss.g_max()));
  TauReport r;
  for (int g = 0; g <= g_max; ++g) {
    auto it = fe.F.find(g);
    if (it == fe.F.end()) throw InsufficientOrder("free energy F^(" + std::to_string(g) + ") missing");
    PuiseuxSum lhs = d_dt(m, d_dt(m, it->second));
    const PuiseuxSum& rhs = ss.orders[static_cast<std::size_t>(g)];
    if (lhs != rhs)
      throw TauMismatch("g = " + std::to_string(g) + ": d^2F/dt^2 = " + lhs.str() + " but u^{" +
                        std::to_string(g) + "} = " + rhs.str());
    r.g_checked = g + 1;
  }
  return r;
}

}  // namespace toprec::kp
