#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "mideal/ideal.hpp"

namespace mideal {

/// Parses the line-oriented ideal format:
///
///   vars: 3
///   gens: x1^2*x2, x2*x3
///
/// A '/' is accepted as a line separator so a whole ideal fits in one shell
/// argument ("vars: 3 / gens: x1*x2"). An empty generator list is the zero
/// ideal and the literal "1" is the unit monomial. Throws ParseError.
MonomialIdeal parse_ideal(std::string_view text);

/// Parses a single term such as "x1^2*x3" in a ring with n variables.
Monomial parse_monomial(std::string_view text, std::size_t n);

std::string render_ideal(const MonomialIdeal& ideal);

/// {"n": 3, "gens": [[2,1,0],[0,1,1]]}
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::json monomial_to_json(const Monomial& m);
Monomial monomial_from_json(const nlohmann::json& j, std::size_t n);

}  // namespace mideal
