#pragma once

#include <compare>
#include <map>
#include <vector>

#include "toprec/alg/rat.hpp"
#include "toprec/alg/ratfunc.hpp"

namespace toprec::tr {

using alg::Rat;

/// Basis differential dz / (z - r)^k.
struct Pole {
  Rat r;
  int k = 1;
  friend auto operator<=>(const Pole&, const Pole&) = default;
};

using PoleTuple = std::vector<Pole>;

/// Exact omega_n^(g) as a symmetric sum of tensor products of pole
/// differentials. The canonical terms map sorted pole tuples to the
/// coefficient carried by each of their orderings; the full ordered expansion
/// is kept alongside for evaluation and slot-wise checks.
class TensorForm {
 public:
  TensorForm() = default;
  TensorForm(int g, int n) : g_(g), n_(n) {}

  /// Builds the form from an ordered expansion; throws IdentityViolation if
  /// the expansion is not symmetric under slot permutations.
  static TensorForm from_ordered(int g, int n, std::map<PoleTuple, Rat> ordered);
  /// Builds the form from canonical terms (sorted tuples).
  static TensorForm from_terms(int g, int n, const std::map<PoleTuple, Rat>& terms);

  int g() const { return g_; }
  int n() const { return n_; }
  const std::map<PoleTuple, Rat>& terms() const { return terms_; }
  const std::map<PoleTuple, Rat>& ordered() const { return ordered_; }
  std::vector<Rat> ram_points() const;
  /// Largest k over all slots.
  int max_pole_order() const;

  /// Coefficient function at z_i = points[i] (dz factors stripped).
  Rat evaluate(const std::vector<Rat>& points) const;

  /// Single-slot restriction: the first slot as a rational function of z with
  /// the other slots fixed to the basis tuple rest.
  std::map<PoleTuple, alg::RatFunc> first_slot_restrictions() const;

  friend bool operator==(const TensorForm& a, const TensorForm& b) {
    return a.g_ == b.g_ && a.n_ == b.n_ && a.terms_ == b.terms_;
  }

 private:
  int g_ = 0;
  int n_ = 0;
  std::map<PoleTuple, Rat> terms_;
  std::map<PoleTuple, Rat> ordered_;
};

}  // namespace toprec::tr
