#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "quivergrass/polynomial.hpp"
#include "quivergrass/representation.hpp"

namespace quivergrass {

// Representation files:
//   {"vertices": n, "arrows": [[src,tgt],...], "dims": [d1,...,dn],
//    "matrices": [[[row],[row],...], ...]}
// 1-based vertices, integer entries (JSON integers or decimal strings for
// values beyond 64 bits), matrices in arrow order.

/// Throws ParseError on malformed input; the result is validated.
Representation representation_from_json(const nlohmann::json& j);
Representation read_representation(const std::filesystem::path& path);
/// Integer-domain representations only.
nlohmann::json representation_to_json(const Representation& rep);

// F-polynomials: {"vars": n, "terms": [{"exp": [...], "coef": c}, ...]},
// terms in lexicographic exponent order.
nlohmann::json fpolynomial_to_json(const FPolynomial& f);
FPolynomial fpolynomial_from_json(const nlohmann::json& j);

/// Integers outside the int64 range serialize as decimal strings.
nlohmann::json integer_to_json(const Integer& z);
Integer integer_from_json(const nlohmann::json& j);

}  // namespace quivergrass
