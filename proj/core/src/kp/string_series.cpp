#include "toprec/kp/string_series.hpp"

#include "toprec/errors.hpp"

namespace toprec::kp {

PuiseuxSum time_in_tau(const PQModel& m) { return PuiseuxSum::monomial(m.rho, m.time_exponent()); }

PuiseuxSum d_dt(const PQModel& m, const PuiseuxSum& f) {
  Rat e = m.time_exponent();
  return f.derivative().multiply_by_monomial((m.rho * e).inverse(), Rat(1) - e);
}

// The next odd order vanishes by parity, so the series is known one step past
// hbar^(2 g_max).
HbarSeries StringSeries::as_hbar_series() const {
  std::vector<PuiseuxSum> c(2 * orders.size());
  for (std::size_t g = 0; g < orders.size(); ++g) c[2 * g] = orders[g];
  return HbarSeries(std::move(c), static_cast<int>(2 * orders.size()));
}

namespace {

// d S_0 / du at u = tau, where S_0 is the hbar-free part of S (a polynomial in
// u alone).
PuiseuxSum leading_factor(const alg::DiffPoly& s) {
  PuiseuxSum out;
  for (const auto& [mono, c] : s.terms()) {
    Rat c0 = c.coeff(0);
    if (c0.is_zero()) continue;
    int e = 0;
    for (const auto& [f, k] : mono) {
      if (f.gen != "u" || f.order != 0)
        throw UnsupportedOperation("string equation has an hbar-free term beyond a polynomial in u");
      e += k;
    }
    if (e > 0) out += PuiseuxSum::monomial(c0 * Rat(e), Rat(e - 1));
  }
  if (!out.is_monomial()) throw UnsupportedOperation("leading balance factor is not a single monomial");
  return out;
}

}  // namespace

StringSeries string_series(const PQModel& m, int g_max) {
  if (!m.string_equation) throw UnsupportedModel("no string equation for model " + m.name());
  for (const auto& [k, v] : m.constants)
    if (!v.is_zero()) throw UnsupportedModel("string series requires " + k + " = 0");
  if (g_max < 0) throw UnsupportedOperation("g_max must be non-negative");

  const auto& s = *m.string_equation;
  auto dt = [&m](const PuiseuxSum& f) { return d_dt(m, f); };
  std::map<std::string, HbarSeries> gens;
  PuiseuxSum lead = leading_factor(s);
  const auto& [lead_exp, lead_c] = *lead.terms().begin();

  const int top = 2 * g_max;
  std::vector<PuiseuxSum> c(static_cast<std::size_t>(top + 1));
  c[0] = PuiseuxSum::monomial(Rat(1), Rat(1));
  gens["u"] = HbarSeries({c[0]}, 1);
  if (s.substitute_series(gens, dt, 1).coeff(0) != time_in_tau(m))
    throw IdentityViolation("u = tau does not solve the hbar-free string equation of " + m.name());

  for (int k = 1; k <= top; ++k) {
    std::vector<PuiseuxSum> prefix(c.begin(), c.begin() + k + 1);
    gens["u"] = HbarSeries(prefix, k + 1);
    PuiseuxSum rest = s.substitute_series(gens, dt, k + 1).coeff(k);
    c[static_cast<std::size_t>(k)] = -rest.divide_by_monomial(lead_c, lead_exp);
    if (k % 2 == 1 && !c[static_cast<std::size_t>(k)].is_zero())
      throw IdentityViolation("string series of " + m.name() + " has a nonzero odd order hbar^" +
                              std::to_string(k));
  }
  StringSeries out{m, {}};
  for (int g = 0; g <= g_max; ++g) out.orders.push_back(c[static_cast<std::size_t>(2 * g)]);
  return out;
}

}  // namespace toprec::kp
