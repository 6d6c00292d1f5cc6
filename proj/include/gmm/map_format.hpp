#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "gmm/forms.hpp"

namespace gmm {

/// A polynomial that need not be homogeneous; what the expression parser
/// produces before degree checks.
using SparsePolynomial = std::map<Exponent, Rational, GrlexDescending>;

/// Parses an expression over the given coordinates using + - * / ^ and
/// parentheses. Division is only allowed by nonzero constants and exponents
/// must be nonnegative integer literals. Throws ParseError.
SparsePolynomial parse_polynomial(std::string_view text,
                                  const std::vector<std::string>& coords);

/// Builds a lift from polynomial strings, checking homogeneity and a common
/// degree (and `declared_degree` when positive).
HomogeneousLift parse_forms(const std::vector<std::string>& forms,
                            const std::vector<std::string>& coords,
                            int declared_degree = 0);

/// Map file: {"N": .., "d": .., "coords": [..], "forms": [..]}.
struct MapDocument {
  std::vector<std::string> coords;
  HomogeneousLift lift;
};

MapDocument read_map_document(std::string_view text);
HomogeneousLift parse_map(std::string_view text);

/// Canonical map file text; parse_map(render_map(lift, c)) == lift.
std::string render_map(const HomogeneousLift& lift,
                       const std::vector<std::string>& coords);
std::string render_map(const HomogeneousLift& lift);

}  // namespace gmm
