#include "conntop/cardinal.hpp"

#include <utility>

namespace conntop {

namespace {

// Canonical rank used for suprema: Fin(n) -> (0, n), Beth(k) -> (1, 2k),
// Succ(Beth(k)) -> (1, 2k+1). Strict rank order coincides with the provable
// strict order everywhere except that it places Succ(Beth(k)) below
// Beth(k+1); taking maxima under this rank therefore always returns a sound
// supremum (2^kappa dominates kappa+ whichever way the tie resolves).
int rank_class(const Cardinal& a) { return a.is_finite() ? 0 : 1; }

long rank_pos(const Cardinal& a) {
  if (a.is_finite()) return 0;  // unused, finite compares by value
  return 2L * a.beth_level() + (a.is_succ() ? 1 : 0);
}

const Cardinal& canonical_max(const Cardinal& a, const Cardinal& b) {
  if (rank_class(a) != rank_class(b)) return rank_class(a) < rank_class(b) ? b : a;
  if (a.is_finite()) return a.fin_value() < b.fin_value() ? b : a;
  return rank_pos(a) < rank_pos(b) ? b : a;
}

}  // namespace

Cardinal Cardinal::fin(mpz_class n) {
  if (n < 0) throw Error("Cardinal::fin: negative value");
  return Cardinal(Kind::Fin, std::move(n), 0);
}

Cardinal Cardinal::beth(int level) {
  if (level < 0) throw Error("Cardinal::beth: negative level");
  return Cardinal(Kind::Beth, 0, level);
}

Cardinal Cardinal::succ_of_beth(int level) {
  if (level < 0) throw Error("Cardinal::succ_of_beth: negative level");
  return Cardinal(Kind::Succ, 0, level);
}

const mpz_class& Cardinal::fin_value() const {
  if (!is_finite()) throw Error("Cardinal::fin_value: not finite");
  return fin_;
}

int Cardinal::beth_level() const {
  if (is_finite()) throw Error("Cardinal::beth_level: finite cardinal");
  return level_;
}

Cardinal Cardinal::succ() const {
  switch (kind_) {
    case Kind::Fin:
      return fin(mpz_class(fin_ + 1));
    case Kind::Beth:
      return succ_of_beth(level_);
    case Kind::Succ:
      break;
  }
  throw SuccNotSupported("successor of " + str() + " is outside the cardinal fragment");
}

std::string Cardinal::str() const {
  switch (kind_) {
    case Kind::Fin:
      return fin_.get_str();
    case Kind::Beth:
    case Kind::Succ: {
      std::string s;
      if (level_ == 0) {
        s = "w";
      } else {
        for (int i = 1; i < level_; ++i) s += "2^";
        s += "c";
      }
      if (kind_ == Kind::Succ) s += "+";
      return s;
    }
  }
  return "?";
}

Ordering compare(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) {
    int c = cmp(a.fin_value(), b.fin_value());
    return c < 0 ? Ordering::LT : (c > 0 ? Ordering::GT : Ordering::EQ);
  }
  if (a.is_finite()) return Ordering::LT;
  if (b.is_finite()) return Ordering::GT;

  const int ka = a.beth_level();
  const int kb = b.beth_level();
  if (a.is_succ() == b.is_succ()) {
    return ka < kb ? Ordering::LT : (ka > kb ? Ordering::GT : Ordering::EQ);
  }
  if (!a.is_succ()) {
    // Beth(ka) vs Succ(Beth(kb))
    if (ka <= kb) return Ordering::LT;
    if (ka == kb + 1) return Ordering::LeUnknownStrictness;
    return Ordering::GT;
  }
  // Succ(Beth(ka)) vs Beth(kb)
  if (ka >= kb) return Ordering::GT;
  if (ka == kb - 1) return Ordering::LeUnknownStrictness;
  return Ordering::LT;
}

std::optional<bool> tri_lt(const Cardinal& a, const Cardinal& b) {
  switch (compare(a, b)) {
    case Ordering::LT:
      return true;
    case Ordering::EQ:
    case Ordering::GT:
      return false;
    case Ordering::LeUnknownStrictness:
      // Succ(Beth(k)) < Beth(k+1) is the open question; the reversed
      // orientation is settled false because >= holds there.
      return a.is_succ() ? std::nullopt : std::optional<bool>(false);
  }
  return std::nullopt;
}

std::optional<bool> tri_le(const Cardinal& a, const Cardinal& b) {
  switch (compare(a, b)) {
    case Ordering::LT:
    case Ordering::EQ:
      return true;
    case Ordering::GT:
      return false;
    case Ordering::LeUnknownStrictness:
      return a.is_succ() ? std::optional<bool>(true) : std::nullopt;
  }
  return std::nullopt;
}

namespace {
[[noreturn]] void undecidable(const char* rel, const Cardinal& a, const Cardinal& b) {
  throw UndecidableComparison(std::string("cannot decide ") + a.str() + " " + rel + " " + b.str() +
                              " in ZFC");
}
}  // namespace

bool lt(const Cardinal& a, const Cardinal& b) {
  auto r = tri_lt(a, b);
  if (!r) undecidable("<", a, b);
  return *r;
}

bool le(const Cardinal& a, const Cardinal& b) {
  auto r = tri_le(a, b);
  if (!r) undecidable("<=", a, b);
  return *r;
}

bool gt(const Cardinal& a, const Cardinal& b) { return lt(b, a); }
bool ge(const Cardinal& a, const Cardinal& b) { return le(b, a); }

bool eq(const Cardinal& a, const Cardinal& b) {
  switch (compare(a, b)) {
    case Ordering::EQ:
      return true;
    case Ordering::LT:
    case Ordering::GT:
      return false;
    case Ordering::LeUnknownStrictness:
      undecidable("=", a, b);
  }
  return false;
}

Cardinal csum(const Cardinal& a, const Cardinal& b) {
  if (a.is_finite() && b.is_finite()) return Cardinal::fin(mpz_class(a.fin_value() + b.fin_value()));
  return canonical_max(a, b);
}

Cardinal cprod(const Cardinal& a, const Cardinal& b) {
  if (a.is_zero() || b.is_zero()) return Cardinal::zero();
  if (a.is_finite() && b.is_finite()) return Cardinal::fin(mpz_class(a.fin_value() * b.fin_value()));
  return canonical_max(a, b);
}

Cardinal csup(const std::vector<Cardinal>& xs) {
  if (xs.empty()) throw Error("csup: empty list");
  Cardinal m = xs.front();
  for (std::size_t i = 1; i < xs.size(); ++i) m = canonical_max(m, xs[i]);
  return m;
}

Cardinal exp2(const Cardinal& a) {
  if (a.is_succ()) {
    throw SuccNotSupported("2^" + a.str() + " is outside the cardinal fragment");
  }
  if (a.is_beth()) return Cardinal::beth(a.beth_level() + 1);
  const mpz_class& n = a.fin_value();
  if (!n.fits_ulong_p() || n.get_ui() > (1ul << 26)) {
    throw TooLarge("exp2: finite exponent too large to materialize");
  }
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, n.get_ui());
  return Cardinal::fin(r);
}

}  // namespace conntop
