/**
 * @file poly_text.hpp
 * @brief Text grammar for polynomials: integer/rational coefficients,
 *        declared variables, + - * / ^ and parentheses, whitespace
 *        insensitive. The field's generator (t, s, k, ...) may appear as a
 *        coefficient symbol; division is only allowed by constants.
 *        Printing round-trips through parsing to the same canonical form.
 */
#ifndef PEND_POLY_TEXT_HPP
#define PEND_POLY_TEXT_HPP

#include <string>
#include <vector>

#include "pend/multipoly.hpp"

namespace pend {

struct parse_error : error {
    using error::error;
};

MultiPoly parse_poly(const std::string& text, const std::vector<std::string>& vars,
                     const FieldSpec& field = FieldSpec::rationals());

/// Field from a JSON-ish tag: "Q", "Q(t)" (any generator name), or a
/// number-field modulus text like "k^2+k+1" with generator k.
FieldSpec parse_field_spec(const std::string& tag);
FieldSpec parse_number_field(const std::string& modulus_text, const std::string& gen);

}  // namespace pend

#endif
