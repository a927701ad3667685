#pragma once

#include "sylow/polyring.hpp"
#include "text_cursor.hpp"

namespace sylow::detail {

/// Folds an exponent with x^p = x into 0..p-1.
inline int fold_exponent(std::int64_t e, int p) {
  if (e == 0) return 0;
  return static_cast<int>((e - 1) % (p - 1)) + 1;
}

/// Key of a scanned term over `nvars` variables; LayerError if it reads a
/// variable past nvars.
MonomialKey term_key(const RawTerm& t, int p, int nvars);

TruncPoly build_poly(const std::vector<SignedTerm>& terms, int p, int nvars);

/// Sum of signed terms, stopping at the first character that cannot
/// continue the sum.
TruncPoly parse_poly_body(Cursor& in, int p, int nvars);

}  // namespace sylow::detail
