#pragma once

#include <string>
#include <string_view>

#include "conntop/cardinal.hpp"
#include "conntop/presentation.hpp"

namespace conntop {
namespace dsl {

// Surface syntax for presentations:
//
//   group := term { "+" term } | "0"
//   term  := block [ "^" card ]
//   block := "Z(" int ")" | "Z(" prime "^" int ")" | "Z(" prime "^inf)"
//          | "Z" | "Q" | "L(" prime ")"
//          | "Soc(P)" | "Soc(P\{" primes "})" | "Soc({" primes "})"
//   card  := int | "w" | "c" | "c+" | "2^c" | "2^2^c" | ...
//
// "0" is the trivial group, "^inf" the Prufer block, default multiplicity 1.
// Deeper beth levels ("2^2^2^c") and successors ("w+", "2^c+") follow the
// same scheme. A successor "+" must be glued to its cardinal; the term
// separator "+" may carry whitespace.
Presentation parse(std::string_view text);           // SyntaxError, InvalidModulus, InvalidPrime
std::string print(const Presentation& g);            // canonical order, parse(print(g)) == g

Cardinal parse_cardinal(std::string_view text);      // SyntaxError
std::string print_cardinal(const Cardinal& c);

}  // namespace dsl
}  // namespace conntop
