#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <vector>

#include "conntop/errors.hpp"

namespace conntop {
namespace hm {

using Rat = mpq_class;

// The discrete finite groups and the rational circle Q/Z, each with a
// translation-invariant metric (0/1 discrete, arc length on the circle).
struct BaseGroup {
  enum class Kind { Finite, Circle };
  Kind kind = Kind::Circle;
  std::vector<std::uint64_t> factors;  // Finite only

  static BaseGroup finite(std::vector<std::uint64_t> factors);
  static BaseGroup circle() { return BaseGroup{}; }

  std::uint64_t order() const;  // Finite only
  bool operator==(const BaseGroup& o) const { return kind == o.kind && factors == o.factors; }
  bool operator!=(const BaseGroup& o) const { return !(*this == o); }
};

// One element: a mixed-radix index for finite bases, a canonical rational in
// [0,1) for the circle.
struct Elem {
  std::uint64_t idx = 0;
  Rat q{0};
};

Elem zero_elem(const BaseGroup& b);
Elem make_finite_elem(const BaseGroup& b, std::uint64_t idx);
Elem make_circle_elem(const Rat& q);  // reduced mod 1
Elem add(const BaseGroup& b, const Elem& x, const Elem& y);
Elem neg(const BaseGroup& b, const Elem& x);
bool elem_eq(const BaseGroup& b, const Elem& x, const Elem& y);
Rat distance(const BaseGroup& b, const Elem& x, const Elem& y);

// Piecewise constant function [0,1) -> G with exact rational breakpoints,
// canonical (adjacent equal values merged). These are exactly the elements of
// the direct sum of the prefix copies G_t, t in (0,1].
class StepFunction {
 public:
  explicit StepFunction(BaseGroup base);  // the zero function
  static StepFunction from_pieces(BaseGroup base, std::vector<Rat> cuts, std::vector<Elem> values);
  // g restricted to [0,t): the generator g_t.
  static StepFunction prefix(const BaseGroup& base, const Elem& g, const Rat& t);

  const BaseGroup& base() const { return base_; }
  const std::vector<Rat>& cuts() const { return cuts_; }      // interior, strictly increasing
  const std::vector<Elem>& values() const { return values_; }  // cuts.size()+1 pieces
  bool is_zero() const;
  Elem value_at(const Rat& x) const;  // x in [0,1)

 private:
  BaseGroup base_;
  std::vector<Rat> cuts_;
  std::vector<Elem> values_;
  void canonicalize();
};

StepFunction sf_add(const StepFunction& f, const StepFunction& g);  // BaseMismatch
StepFunction sf_neg(const StepFunction& f);
bool sf_eq(const StepFunction& f, const StepFunction& g);

// Lebesgue measure of {t : f(t) != g(t)}, exact.
Rat mu_diff(const StepFunction& f, const StepFunction& g);

// Convergence-in-measure distance: least eps with mu{t : d(f(t),g(t)) > eps}
// <= eps. The minimum is attained on the finite candidate set of pointwise
// distances and piece-measure sums. Collapses to mu_diff on discrete bases.
Rat kyfan(const StepFunction& f, const StepFunction& g);

// h cut off at s: h on [0,s), zero after.
StepFunction truncate(const StepFunction& h, const Rat& s);

struct PathCheckReport {
  bool passed = false;
  Rat max_deviation{0};  // 0 on success
  std::size_t samples_checked = 0;
  std::size_t pairs_checked = 0;
};

// For h in the eps-ball around zero: every truncation stays in the ball and
// truncation is 1-Lipschitz from [0,1] into the measure metric, verified
// exactly on the sample grid plus h's own breakpoints.
PathCheckReport ball_path_check(const StepFunction& h, const Rat& eps, std::size_t samples);

struct DensityResult {
  StepFunction approx;
  Rat error;       // kyfan(f, approx)
  Rat bound;       // 1/(2N)
  bool within_eps;
};

// Pointwise nearest-element rounding of a circle-valued step function into
// the cyclic subgroup (1/N)Z/Z; error at most 1/(2N).
DensityResult density_approx(const StepFunction& f, std::uint64_t n, const Rat& eps);

}  // namespace hm
}  // namespace conntop
