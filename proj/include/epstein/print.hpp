#pragma once

#include <string>

#include "epstein/formula.hpp"

namespace epstein {

// Renders a formula with minimal parentheses; parse(print(f)) == f.
// Mixed -> / ~> chains are parenthesized even where associativity would
// make them unambiguous.
std::string print(const Formula& f);

// Letter spelling used by the printer: p0, then p q r s t, then pN.
std::string letter_name(unsigned index);

std::string print(const FormulaPair& p);

}  // namespace epstein
