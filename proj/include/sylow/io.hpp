#pragma once

#include <istream>
#include <string>

#include "sylow/structure.hpp"

namespace sylow {

/// Subgroup files: a header line `p=<p> n=<n>`, then one monic monomial per
/// line in element grammar (`D1`, `(x1^2)D2`, ...). Blank lines and text
/// after '#' are ignored. A line that is not a single monic monomial is a
/// ParseError.
SaturatedSubgroup read_subgroup(std::istream& in);
std::string write_subgroup(const SaturatedSubgroup& s);

}  // namespace sylow
