#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sylow/params.hpp"
#include "sylow/wreath.hpp"

namespace sylow {

enum class CheckStatus { pass, fail, skip };

std::string to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

struct VerifyOptions {
  /// Run every family over its full domain whenever the hard guards allow.
  bool exhaustive = false;
  std::uint64_t seed = 1;
  /// Sample count for families that are not run exhaustively.
  std::size_t samples = 1000;
};

struct VerifyReport {
  PrimeParams params;
  VerifyOptions options;
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Uniformly random element of W_n: every coefficient of every layer drawn
/// independently.
WreathElement random_element(const PrimeParams& params, std::mt19937_64& rng);

/// Symbolic products and commutators of basis monomials against the
/// permutation oracle.
CheckResult check_oracle_monomials(const PrimeParams& params, const VerifyOptions& options,
                                   std::mt19937_64& rng);
/// The same on random full elements, plus the inverse law.
CheckResult check_oracle_random(const PrimeParams& params, const VerifyOptions& options,
                                std::mt19937_64& rng);
/// shift by substitution against the Taylor sum.
CheckResult check_taylor(const PrimeParams& params, const VerifyOptions& options,
                         std::mt19937_64& rng);
/// Antisymmetry and Jacobi on basis triples.
CheckResult check_lie_axioms(const PrimeParams& params, const VerifyOptions& options,
                             std::mt19937_64& rng);
/// Directly computed upper central series against the lower central series.
CheckResult check_group_series(const PrimeParams& params);
/// Lie powers from brackets, centers from kernels, and the closed forms.
CheckResult check_lie_series(const PrimeParams& params);
/// Closed-form normal closures against commutator saturation, with the
/// gamma bound on each.
CheckResult check_closures(const PrimeParams& params, const VerifyOptions& options,
                           std::mt19937_64& rng);
/// Homogeneous ideals against saturated normal subgroups over every basis
/// subset.
CheckResult check_bijection(const PrimeParams& params);
/// Both chains, their agreement and the growth predictions.
CheckResult check_chains(const PrimeParams& params);
/// phi_{i+j}([a, b]) = [phi_i(a), phi_j(b)] on monomial pairs.
CheckResult check_intertwining(const PrimeParams& params, const VerifyOptions& options,
                               std::mt19937_64& rng);
/// The partition enumerator against the generating-function count.
CheckResult check_partitions(const PrimeParams& params);

VerifyReport run_verification(const PrimeParams& params, const VerifyOptions& options);

}  // namespace sylow
