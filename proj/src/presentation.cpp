#include "conntop/presentation.hpp"

#include <algorithm>
#include <map>
#include <utility>

#include "conntop/numeric.hpp"

namespace conntop {

// --- PrimeSet ---------------------------------------------------------------

namespace {
std::vector<std::uint64_t> sorted_unique(std::vector<std::uint64_t> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

void check_primes(const std::vector<std::uint64_t>& xs) {
  for (auto p : xs) {
    if (!is_prime_u64(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  }
}
}  // namespace

PrimeSet PrimeSet::finite(std::vector<std::uint64_t> members) {
  members = sorted_unique(std::move(members));
  check_primes(members);
  return PrimeSet{false, std::move(members)};
}

PrimeSet PrimeSet::cofinite_excluding(std::vector<std::uint64_t> excluded) {
  excluded = sorted_unique(std::move(excluded));
  check_primes(excluded);
  return PrimeSet{true, std::move(excluded)};
}

bool PrimeSet::contains(std::uint64_t p) const {
  bool listed = std::binary_search(primes.begin(), primes.end(), p);
  return cofinite ? !listed : listed;
}

std::string PrimeSet::str() const {
  std::string body;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    if (i) body += ",";
    body += std::to_string(primes[i]);
  }
  if (!cofinite) return "{" + body + "}";
  return primes.empty() ? "P" : "P\\{" + body + "}";
}

// --- Block ------------------------------------------------------------------

Block Block::cyclic(std::uint64_t p, std::uint32_t k) {
  if (!is_prime_u64(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  if (k == 0) throw Error("cyclic block requires k >= 1");
  return Block(BlockKind::Cyclic, p, k);
}

Block Block::prufer(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  return Block(BlockKind::Prufer, p, 0);
}

Block Block::integers() { return Block(BlockKind::IntZ, 0, 0); }
Block Block::rationals() { return Block(BlockKind::RatQ, 0, 0); }

Block Block::tower(std::uint64_t p) {
  if (!is_prime_u64(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
  return Block(BlockKind::Tower, p, 0);
}

Block Block::soc(std::vector<std::uint64_t> excluded) {
  excluded = sorted_unique(std::move(excluded));
  check_primes(excluded);
  Block b(BlockKind::Soc, 0, 0);
  b.excluded_ = std::move(excluded);
  return b;
}

std::uint64_t Block::prime() const {
  if (kind_ != BlockKind::Cyclic && kind_ != BlockKind::Prufer && kind_ != BlockKind::Tower) {
    throw Error("block has no single prime");
  }
  return p_;
}

std::uint32_t Block::power() const {
  if (kind_ != BlockKind::Cyclic) throw Error("block has no power");
  return k_;
}

const std::vector<std::uint64_t>& Block::soc_excluded() const {
  if (kind_ != BlockKind::Soc) throw Error("not a socle block");
  return excluded_;
}

bool Block::operator==(const Block& o) const {
  return kind_ == o.kind_ && p_ == o.p_ && k_ == o.k_ && excluded_ == o.excluded_;
}

bool Block::operator<(const Block& o) const {
  if (kind_ != o.kind_) return static_cast<int>(kind_) < static_cast<int>(o.kind_);
  if (p_ != o.p_) return p_ < o.p_;
  if (k_ != o.k_) return k_ < o.k_;
  return excluded_ < o.excluded_;
}

std::string Block::str() const {
  switch (kind_) {
    case BlockKind::Cyclic:
      return k_ == 1 ? "Z(" + std::to_string(p_) + ")"
                     : "Z(" + std::to_string(p_) + "^" + std::to_string(k_) + ")";
    case BlockKind::Prufer:
      return "Z(" + std::to_string(p_) + "^inf)";
    case BlockKind::IntZ:
      return "Z";
    case BlockKind::RatQ:
      return "Q";
    case BlockKind::Tower:
      return "L(" + std::to_string(p_) + ")";
    case BlockKind::Soc:
      return "Soc(" + PrimeSet::cofinite_excluding(excluded_).str() + ")";
  }
  return "?";
}

// --- Presentation -----------------------------------------------------------

namespace {

// Merge two cofinite socle terms. The group identity
//   Soc(E1)^(k1) + Soc(E2)^(k2)
//     = Soc(E1 u E2)^(k1+k2) + sum over p in E1\E2 of Z(p)^(k2)
//                            + sum over p in E2\E1 of Z(p)^(k1)
// keeps the p-component multiplicity exact at every prime.
Term merge_soc(const Term& a, const Term& b, std::vector<Term>& corrections) {
  const auto& e1 = a.block.soc_excluded();
  const auto& e2 = b.block.soc_excluded();
  std::vector<std::uint64_t> united;
  std::set_union(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(united));
  std::vector<std::uint64_t> only1, only2;
  std::set_difference(e1.begin(), e1.end(), e2.begin(), e2.end(), std::back_inserter(only1));
  std::set_difference(e2.begin(), e2.end(), e1.begin(), e1.end(), std::back_inserter(only2));
  for (auto p : only1) corrections.push_back({Block::cyclic(p, 1), b.mult});
  for (auto p : only2) corrections.push_back({Block::cyclic(p, 1), a.mult});
  return {Block::soc(std::move(united)), csum(a.mult, b.mult)};
}

}  // namespace

Presentation Presentation::normalize(std::vector<Term> terms) {
  // Drop absent terms, then fold all socle terms into one.
  std::vector<Term> work;
  std::optional<Term> soc;
  std::vector<Term> corrections;
  for (auto& t : terms) {
    if (t.mult.is_zero()) continue;
    if (t.block.kind() == BlockKind::Soc) {
      soc = soc ? merge_soc(*soc, t, corrections) : t;
    } else {
      work.push_back(std::move(t));
    }
  }
  for (auto& t : corrections) {
    if (!t.mult.is_zero()) work.push_back(std::move(t));
  }
  if (soc) work.push_back(std::move(*soc));

  std::sort(work.begin(), work.end(),
            [](const Term& x, const Term& y) { return x.block < y.block; });

  Presentation out;
  for (auto& t : work) {
    if (!out.terms_.empty() && out.terms_.back().block == t.block) {
      out.terms_.back().mult = csum(out.terms_.back().mult, t.mult);
    } else {
      out.terms_.push_back(std::move(t));
    }
  }
  return out;
}

std::string Presentation::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (i) s += " + ";
    s += terms_[i].block.str();
    if (!(terms_[i].mult == Cardinal::one())) s += "^" + terms_[i].mult.str();
  }
  return s;
}

std::vector<Block> crt_split(std::uint64_t n) {
  if (n < 2) throw InvalidModulus("Z(" + std::to_string(n) + ") is not a valid cyclic block");
  std::vector<Block> out;
  for (const auto& [p, k] : factorize_u64(n)) out.push_back(Block::cyclic(p, k));
  return out;
}

Presentation direct_sum(const Presentation& a, const Presentation& b) {
  std::vector<Term> all = a.terms();
  all.insert(all.end(), b.terms().begin(), b.terms().end());
  return Presentation::normalize(std::move(all));
}

Cardinal cardinality(const Presentation& g) {
  Cardinal total = Cardinal::one();
  for (const auto& t : g.terms()) {
    Cardinal per_term;
    if (t.mult.is_infinite()) {
      per_term = t.mult;
    } else if (t.block.kind() == BlockKind::Cyclic) {
      // |Z(p^k)^(n)| = p^(k n), exact.
      mpz_class pk;
      mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(t.block.prime()), t.block.power());
      const mpz_class& n = t.mult.fin_value();
      if (!n.fits_ulong_p() ||
          mpz_sizeinbase(pk.get_mpz_t(), 2) * n.get_ui() > (1ul << 26)) {
        throw TooLarge("cardinality: finite value too large to materialize");
      }
      mpz_class card;
      mpz_pow_ui(card.get_mpz_t(), pk.get_mpz_t(), n.get_ui());
      per_term = Cardinal::fin(card);
    } else {
      per_term = Cardinal::omega();  // countable block, finite multiplicity
    }
    total = cprod(total, per_term);
  }
  return total;
}

std::optional<mpz_class> exponent(const Presentation& g) {
  Factored f;
  for (const auto& t : g.terms()) {
    if (t.block.kind() != BlockKind::Cyclic) return std::nullopt;
    auto& k = f[t.block.prime()];
    k = std::max(k, t.block.power());
  }
  return factored_value(f);
}

}  // namespace conntop
