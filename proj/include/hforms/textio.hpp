#pragma once

// Text grammar for forms on the command line:
//   diagonal     a1,a2,...          integer element codes (signed ints are
//                                   reduced into prime fields)
//   valued       u@v or u@(v1,...,vn)   residue unit code @ valuations
//   polynomial   c*x1^e1*x2^e2 + ...    terms joined by + or -, ^1 and a
//                                       coefficient of 1 may be omitted
// Parsers throw std::invalid_argument with a position hint on bad input;
// printers emit the canonical spelling the parsers round-trip.

#include <string>
#include <vector>

#include "hforms/forms.hpp"
#include "hforms/gf.hpp"
#include "hforms/valued.hpp"

namespace hforms {

DiagonalForm parse_diagonal(const FieldDescriptor& F, std::uint32_t d,
                            const std::string& text);

// Units are parsed as residue element codes; layer counts must agree across
// entries.  Validation against a concrete valued field happens separately.
ValuedDiagonalForm parse_valued(std::uint32_t d, const std::string& text);

// The variable count is the largest index mentioned; exponents must sum to d
// in every term.
PolyForm parse_poly(const FieldDescriptor& F, std::uint32_t d,
                    const std::string& text);

std::string diagonal_str(const DiagonalForm& phi);
std::string valued_str(const ValuedDiagonalForm& phi);
std::string poly_str(const PolyForm& phi);

}  // namespace hforms
