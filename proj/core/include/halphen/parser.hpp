#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "halphen/ideal.hpp"
#include "halphen/polynomial.hpp"

namespace halphen {

/// Grammar (whitespace insignificant):
///
///   polynomial := sign* term (('+' | '-') sign* term)*
///   term       := factor ('*'? factor)*
///   factor     := integer ('/' integer)? | variable ('^' integer)?
///
/// Two numbers in a row need an explicit '*'. Variables are matched
/// greedily against the declared names, so `xy` reads as x*y in a ring
/// with variables x and y. Decimal coefficients are rejected.
///
/// Throws ParseError with 1-based line/column.
Polynomial parse_polynomial(std::string_view text, const RingPtr& ring);

/// Ideal file format:
///
///   # comment
///   ring x y z w
///   label twisted cubic      (optional)
///   y^2 - z*x
///   ...
///
/// One generator per line; `#` starts a comment anywhere on a line. Every
/// generator must be homogeneous. Generator lines equal to zero contribute
/// nothing, but at least one generator line is required.
IdealSpec parse_ideal_file(std::string_view text);

/// Reads and parses a file; ParseError carries the path as its source.
IdealSpec load_ideal_file(const std::filesystem::path& path);

/// Terms in descending degrevlex order, e.g. "y^2 - x*z", "1/2*x^2", "0".
std::string format_polynomial(const Polynomial& p);

std::string format_ideal_file(const IdealSpec& ideal);

/// Parses "1:0:0:0" or "1/2:3:-1" into homogeneous coordinates.
std::vector<Rational> parse_point(std::string_view text);
std::string format_point(std::span<const Rational> coords);

/// Replaces every identifier token equal to `name` by `value`, e.g. to
/// specialize the parameter of a family before parsing.
std::string substitute_parameter(std::string_view text, std::string_view name,
                                 std::string_view value);

}  // namespace halphen
