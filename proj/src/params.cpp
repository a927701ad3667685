#include "sylow/params.hpp"

#include "sylow/errors.hpp"

namespace sylow {

bool is_prime(int value) {
  if (value < 2) return false;
  for (int d = 2; d * d <= value; ++d)
    if (value % d == 0) return false;
  return true;
}

std::uint64_t ipow(std::uint64_t base, int exponent) {
  std::uint64_t r = 1;
  for (int i = 0; i < exponent; ++i) {
    if (base != 0 && r > (std::uint64_t{1} << 62) / base)
      throw GuardError("integer power overflow");
    r *= base;
  }
  return r;
}

PrimeParams PrimeParams::make(int p, int n) {
  if (p == 2)
    throw ParamError("p must be an odd prime (p = 2 is not supported)");
  if (!is_prime(p)) throw ParamError("p must be an odd prime");
  if (p > 251) throw ParamError("p must be at most 251");
  if (n < 1) throw ParamError("n must be at least 1");
  // Keys of the top layer are < p^{n-1}; keep the whole basis well inside
  // 32 bits and the dense scratch tables of layer n reasonable.
  if (ipow(p, n) > (std::uint64_t{1} << 24))
    throw ParamError("p^n must not exceed 2^24");
  return PrimeParams{p, n};
}

std::uint32_t PrimeParams::pow(int e) const {
  return static_cast<std::uint32_t>(ipow(p, e));
}

std::size_t PrimeParams::basis_size() const {
  return static_cast<std::size_t>((ipow(p, n) - 1) / (p - 1));
}

std::string PrimeParams::to_string() const {
  return "p=" + std::to_string(p) + " n=" + std::to_string(n);
}

}  // namespace sylow
