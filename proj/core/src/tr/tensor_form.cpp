#include "toprec/tr/tensor_form.hpp"

#include <algorithm>
#include <set>

#include "toprec/errors.hpp"

namespace toprec::tr {

namespace {

std::string tuple_str(const PoleTuple& t) {
  std::string s = "(";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) s += ",";
    s += "(" + t[i].r.str() + "," + std::to_string(t[i].k) + ")";
  }
  return s + ")";
}

void expand_orderings(const PoleTuple& sorted, const Rat& c, std::map<PoleTuple, Rat>& out) {
  PoleTuple p = sorted;
  do {
    out[p] = c;
  } while (std::next_permutation(p.begin(), p.end()));
}

}  // namespace

TensorForm TensorForm::from_ordered(int g, int n, std::map<PoleTuple, Rat> ordered) {
  TensorForm f(g, n);
  for (auto it = ordered.begin(); it != ordered.end();) {
    if (it->second.is_zero()) it = ordered.erase(it);
    else ++it;
  }
  for (const auto& [tuple, c] : ordered) {
    if (static_cast<int>(tuple.size()) != n) throw IdentityViolation("tensor term with wrong arity");
    PoleTuple key = tuple;
    std::sort(key.begin(), key.end());
    auto [it, inserted] = f.terms_.emplace(key, c);
    if (!inserted && it->second != c)
      throw IdentityViolation("omega_" + std::to_string(n) + "^(" + std::to_string(g) +
                              ") is not symmetric: coefficients " + it->second.str() + " and " + c.str() +
                              " on orderings of " + tuple_str(key));
  }
  // Every ordering of every canonical key must be present.
  for (const auto& [key, c] : f.terms_) {
    PoleTuple p = key;
    do {
      auto it = ordered.find(p);
      if (it == ordered.end() || it->second != c)
        throw IdentityViolation("omega_" + std::to_string(n) + "^(" + std::to_string(g) +
                                ") is not symmetric: ordering " + tuple_str(p) + " missing or different");
    } while (std::next_permutation(p.begin(), p.end()));
  }
  f.ordered_ = std::move(ordered);
  return f;
}

TensorForm TensorForm::from_terms(int g, int n, const std::map<PoleTuple, Rat>& terms) {
  std::map<PoleTuple, Rat> ordered;
  for (const auto& [key, c] : terms) {
    if (c.is_zero()) continue;
    PoleTuple sorted = key;
    std::sort(sorted.begin(), sorted.end());
    expand_orderings(sorted, c, ordered);
  }
  return from_ordered(g, n, std::move(ordered));
}

std::vector<Rat> TensorForm::ram_points() const {
  std::set<Rat> rs;
  for (const auto& [key, c] : terms_)
    for (const auto& p : key) rs.insert(p.r);
  return {rs.begin(), rs.end()};
}

int TensorForm::max_pole_order() const {
  int m = 0;
  for (const auto& [key, c] : terms_)
    for (const auto& p : key) m = std::max(m, p.k);
  return m;
}

Rat TensorForm::evaluate(const std::vector<Rat>& points) const {
  if (static_cast<int>(points.size()) != n_)
    throw EvalAtPole("expected " + std::to_string(n_) + " points, got " + std::to_string(points.size()));
  for (const auto& z : points)
    for (const auto& r : ram_points())
      if (z == r) throw EvalAtPole("point " + z.str() + " is a ramification point");
  Rat total;
  for (const auto& [tuple, c] : ordered_) {
    Rat v = c;
    for (std::size_t i = 0; i < tuple.size(); ++i) v *= (points[i] - tuple[i].r).pow(-tuple[i].k);
    total += v;
  }
  return total;
}

std::map<PoleTuple, alg::RatFunc> TensorForm::first_slot_restrictions() const {
  std::map<PoleTuple, alg::RatFunc> out;
  for (const auto& [tuple, c] : ordered_) {
    PoleTuple rest(tuple.begin() + 1, tuple.end());
    alg::Poly lin(std::vector<Rat>{-tuple[0].r, Rat(1)}, "z");
    alg::RatFunc term(alg::Poly(c).with_var("z"), lin.pow(static_cast<unsigned>(tuple[0].k)));
    auto it = out.find(rest);
    if (it == out.end()) out.emplace(rest, term);
    else it->second += term;
  }
  return out;
}

}  // namespace toprec::tr
