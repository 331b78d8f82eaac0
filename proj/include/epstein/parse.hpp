#pragma once

#include <cstddef>
#include <string>

#include "epstein/formula.hpp"

namespace epstein {

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " (at position " + std::to_string(position) + ")"), pos_(position) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

// Parses the ASCII surface syntax:
//   letters   p q r s t (aliases for p1..p5), pN for any N >= 0
//   constants T, F (expand to p0 | !p0 and its negation)
//   operators !  &  ^  |  ->  ~>  <->   with precedence
//             ! > {& ^} > | > {-> ~>} > <->
//   {& ^} associate left; {-> ~>} associate right and may be mixed.
Formula parse(const std::string& text);

}  // namespace epstein
