#pragma once

#include <stdexcept>
#include <string>

#include "sympharm/poly.hpp"

namespace sympharm {

/// Parse failure with the 0-based offset of the offending character.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, size_t pos)
      : std::runtime_error(message + " at position " + std::to_string(pos + 1)),
        pos_(pos) {}
  size_t pos() const { return pos_; }

 private:
  size_t pos_;
};

/**
 * Parses the polynomial grammar
 *
 *   poly     := ('+'|'-')? term (('+'|'-') term)*
 *   term     := coeff ('*' factor)* | factor ('*' factor)*
 *   factor   := var ('^' natural)?
 *   var      := 'z' index | 'zb' index
 *   coeff    := rational | '(' rational ('+'|'-') rational '*'? 'i' ')'
 *             | rational '*' 'i'
 *   rational := integer ('/' positive-integer)?
 *
 * Whitespace is insignificant. Variable indices run from 1 to 2p.
 */
Poly parse_poly(const std::string& text, const Context& ctx);

/// "a,b" with optional whitespace.
Bidegree parse_bidegree(const std::string& text);

}  // namespace sympharm
