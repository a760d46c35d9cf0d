#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "conntop/errors.hpp"

namespace conntop {

// Symbolic cardinal restricted to the beth tower with successors:
//
//   Fin(n)            finite cardinals
//   Beth(0) = w       the countable cardinal
//   Beth(1) = c       the continuum, 2^w
//   Beth(k+1)         2^Beth(k)
//   Succ(Beth(k))     Beth(k)+, the successor cardinal
//
// The total order is
//   Fin(0) < Fin(1) < ... < Beth(0) < Succ(Beth(0)) <= Beth(1) < Succ(Beth(1)) <= ...
// where every <= between Succ(Beth(k)) and Beth(k+1) is provable but its
// strictness is independent of ZFC. Those are the only comparisons this
// module refuses to decide.
class Cardinal {
 public:
  // Fin(0); the default so containers behave.
  Cardinal() : kind_(Kind::Fin), fin_(0) {}

  static Cardinal fin(unsigned long n) { return Cardinal(Kind::Fin, mpz_class(n), 0); }
  static Cardinal fin(mpz_class n);
  static Cardinal beth(int level);
  static Cardinal succ_of_beth(int level);

  // Named constants used throughout.
  static Cardinal zero() { return fin(0ul); }
  static Cardinal one() { return fin(1ul); }
  static Cardinal omega() { return beth(0); }
  static Cardinal continuum() { return beth(1); }

  bool is_finite() const { return kind_ == Kind::Fin; }
  bool is_infinite() const { return kind_ != Kind::Fin; }
  bool is_beth() const { return kind_ == Kind::Beth; }
  bool is_succ() const { return kind_ == Kind::Succ; }
  bool is_zero() const { return kind_ == Kind::Fin && fin_ == 0; }

  const mpz_class& fin_value() const;
  int beth_level() const;  // of the Beth, or of the Beth under the Succ

  // Cardinal successor. Fin(n) -> Fin(n+1), Beth(k) -> Succ(Beth(k)).
  // Succ(Beth(k))+ is outside the fragment and raises SuccNotSupported.
  Cardinal succ() const;

  // Structural equality. Distinct representations denote provably distinct
  // cardinals except for the Succ(Beth(k)) / Beth(k+1) pairs, whose equality
  // is undetermined; use compare() for the semantic relation.
  bool operator==(const Cardinal& o) const {
    return kind_ == o.kind_ && level_ == o.level_ && fin_ == o.fin_;
  }
  bool operator!=(const Cardinal& o) const { return !(*this == o); }

  std::string str() const;

 private:
  enum class Kind { Fin, Beth, Succ };
  Cardinal(Kind k, mpz_class f, int level) : kind_(k), fin_(std::move(f)), level_(level) {}

  Kind kind_;
  mpz_class fin_;
  int level_ = 0;

  friend struct CardinalKey;
};

enum class Ordering {
  LT,
  EQ,
  GT,
  // Returned exactly for the unordered pairs {Succ(Beth(k)), Beth(k+1)}:
  // Succ(Beth(k)) <= Beth(k+1) is a theorem, equality is independent of ZFC.
  LeUnknownStrictness,
};

Ordering compare(const Cardinal& a, const Cardinal& b);

// Decidable refinements; nullopt where ZFC does not settle the question.
std::optional<bool> tri_lt(const Cardinal& a, const Cardinal& b);
std::optional<bool> tri_le(const Cardinal& a, const Cardinal& b);

// Throwing forms; raise UndecidableComparison on the open links.
bool lt(const Cardinal& a, const Cardinal& b);
bool le(const Cardinal& a, const Cardinal& b);
bool gt(const Cardinal& a, const Cardinal& b);
bool ge(const Cardinal& a, const Cardinal& b);
bool eq(const Cardinal& a, const Cardinal& b);

// Cardinal arithmetic. Finite values behave like naturals; an infinite
// operand absorbs via the maximum. When the maximum lands on an undetermined
// {Succ(Beth(k)), Beth(k+1)} tie the Beth representative is returned, which
// is the correct supremum under either resolution of the tie.
Cardinal csum(const Cardinal& a, const Cardinal& b);
Cardinal cprod(const Cardinal& a, const Cardinal& b);
Cardinal csup(const std::vector<Cardinal>& xs);  // xs non-empty

// 2^a. Fin(n) -> Fin(2^n), Beth(k) -> Beth(k+1); successors raise
// SuccNotSupported since 2^(kappa+) is not determined inside the tower.
Cardinal exp2(const Cardinal& a);

}  // namespace conntop
