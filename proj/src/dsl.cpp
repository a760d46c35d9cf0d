#include "conntop/dsl.hpp"

#include <cctype>

#include "conntop/numeric.hpp"

namespace conntop {
namespace dsl {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Presentation parse_group() {
    skip_ws();
    if (peek() == '0') {
      ++pos_;
      skip_ws();
      expect_end();
      return Presentation();
    }
    std::vector<Term> terms;
    parse_term(terms);
    skip_ws();
    while (!at_end()) {
      expect('+');
      skip_ws();
      parse_term(terms);
      skip_ws();
    }
    return Presentation::normalize(std::move(terms));
  }

  Cardinal parse_cardinal_only() {
    skip_ws();
    Cardinal c = parse_card();
    skip_ws();
    expect_end();
    return c;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  char peek_at(std::size_t off) const {
    return pos_ + off >= text_.size() ? '\0' : text_[pos_ + off];
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const { throw SyntaxError(msg, pos_); }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing input");
  }

  bool consume(std::string_view lit) {
    if (text_.substr(pos_, lit.size()) == lit) {
      pos_ += lit.size();
      return true;
    }
    return false;
  }

  std::uint64_t parse_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (UINT64_MAX - d) / 10) fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  mpz_class parse_big_uint() {
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a number");
    std::string digits;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      ++pos_;
    }
    return mpz_class(digits);
  }

  std::vector<std::uint64_t> parse_prime_list() {
    std::vector<std::uint64_t> ps;
    ps.push_back(parse_uint());
    skip_ws();
    while (peek() == ',') {
      ++pos_;
      skip_ws();
      ps.push_back(parse_uint());
      skip_ws();
    }
    return ps;
  }

  // Appends the blocks of one surface term (Z(n) and finite socles expand to
  // several) with the term's multiplicity.
  void parse_term(std::vector<Term>& out) {
    std::vector<Block> blocks = parse_block();
    Cardinal mult = Cardinal::one();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      mult = parse_card();
    }
    for (auto& b : blocks) out.push_back({std::move(b), mult});
  }

  std::vector<Block> parse_block() {
    if (consume("Soc(")) return parse_soc_body();
    if (consume("L(")) {
      std::uint64_t p = parse_uint();
      if (!is_prime_u64(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
      expect(')');
      return {Block::tower(p)};
    }
    if (peek() == 'Q') {
      ++pos_;
      return {Block::rationals()};
    }
    if (peek() == 'Z') {
      ++pos_;
      if (peek() != '(') return {Block::integers()};
      ++pos_;
      std::uint64_t n = parse_uint();
      if (peek() == ')') {
        ++pos_;
        return crt_split(n);  // InvalidModulus for n < 2
      }
      expect('^');
      if (!is_prime_u64(n)) throw InvalidPrime(std::to_string(n) + " is not prime");
      if (consume("inf")) {
        expect(')');
        return {Block::prufer(n)};
      }
      std::uint64_t k = parse_uint();
      expect(')');
      if (k == 0) throw InvalidModulus("Z(" + std::to_string(n) + "^0) is trivial");
      if (k > 1000000) fail("exponent too large");
      return {Block::cyclic(n, static_cast<std::uint32_t>(k))};
    }
    fail("expected a block");
  }

  std::vector<Block> parse_soc_body() {
    if (consume("P")) {
      if (consume(")")) return {Block::soc({})};
      expect('\\');
      expect('{');
      auto ps = parse_prime_list();
      expect('}');
      expect(')');
      return {Block::soc(std::move(ps))};
    }
    // Soc over an explicit finite prime set is just the sum of its Z(p).
    expect('{');
    auto ps = parse_prime_list();
    expect('}');
    expect(')');
    std::vector<Block> blocks;
    for (auto p : ps) {
      if (!is_prime_u64(p)) throw InvalidPrime(std::to_string(p) + " is not prime");
      blocks.push_back(Block::cyclic(p, 1));
    }
    return blocks;
  }

  // A successor '+' binds only when glued to the cardinal token.
  Cardinal with_succ(Cardinal c) {
    if (peek() == '+') {
      ++pos_;
      return c.succ();
    }
    return c;
  }

  Cardinal parse_card() {
    if (peek() == 'w') {
      ++pos_;
      return with_succ(Cardinal::omega());
    }
    if (peek() == 'c') {
      ++pos_;
      return with_succ(Cardinal::continuum());
    }
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      // Either a plain finite cardinal or the "2^...^c" beth chain.
      if (peek() == '2' && peek_at(1) == '^') {
        int level = 0;
        while (peek() == '2' && peek_at(1) == '^') {
          pos_ += 2;
          ++level;
        }
        if (peek() != 'c') fail("expected 'c' after '2^'");
        ++pos_;
        return with_succ(Cardinal::beth(1 + level));
      }
      return Cardinal::fin(parse_big_uint());
    }
    fail("expected a cardinal");
  }
};

}  // namespace

Presentation parse(std::string_view text) { return Parser(text).parse_group(); }

std::string print(const Presentation& g) { return g.str(); }

Cardinal parse_cardinal(std::string_view text) { return Parser(text).parse_cardinal_only(); }

std::string print_cardinal(const Cardinal& c) { return c.str(); }

}  // namespace dsl
}  // namespace conntop
