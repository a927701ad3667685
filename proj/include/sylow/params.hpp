#pragma once

#include <cstdint>
#include <string>

namespace sylow {

bool is_prime(int value);

/// Integer power with overflow check; throws GuardError past 2^62.
std::uint64_t ipow(std::uint64_t base, int exponent);

/// The pair (p, n) fixing W_n = C_p wr ... wr C_p acting on F_p^n.
///
/// p is an odd prime and n >= 1. All sizes used by the library are
/// functions of these two numbers; `make` rejects anything whose largest
/// layer would not fit the 32-bit monomial keys.
struct PrimeParams {
  int p = 3;
  int n = 1;

  static PrimeParams make(int p, int n);

  /// p^e.
  std::uint32_t pow(int e) const;
  /// p^{n-1}: nilpotency class of W_n and the top p-degree plus one.
  std::uint32_t class_length() const { return pow(n - 1); }
  /// Number of monomials in layer k, i.e. p^{k-1}.
  std::uint32_t layer_size(int k) const { return pow(k - 1); }
  /// |B| = (p^n - 1)/(p - 1).
  std::size_t basis_size() const;

  std::string to_string() const;

  friend bool operator==(const PrimeParams&, const PrimeParams&) = default;
};

}  // namespace sylow
