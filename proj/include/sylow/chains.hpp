#pragma once

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "sylow/liealg.hpp"
#include "sylow/structure.hpp"

namespace sylow {

// ---------------------------------------------------------------- partitions

/// t_{p,i}: partitions of i into at least two parts, each part repeated at
/// most p-1 times. Counted by explicit enumeration.
std::uint64_t count_partitions(int p, int i);

/// Partitions of i (any number of parts) with every multiplicity <= p-1,
/// from the product of (1 + x^k + ... + x^{(p-1)k}). Independent of
/// count_partitions; t_{p,i} = count_bounded_partitions(p, i) - 1.
std::uint64_t count_bounded_partitions(int p, int i);

struct PartitionTable {
  int p = 3;
  /// t[i] and q[i] for 1 <= i <= up_to; index 0 is unused and zero.
  std::vector<std::uint64_t> t;
  std::vector<std::uint64_t> q;

  int up_to() const { return static_cast<int>(t.size()) - 1; }
};

PartitionTable q_table(int p, int up_to);

// ---------------------------------------------------------------- chains

/// N_{W_n}(S): basis monomials g with [g, s] in S for every basis s of S.
SaturatedSubgroup normalizer(const SaturatedSubgroup& s);

enum class ChainKind { normalizer, idealizer };

std::string to_string(ChainKind kind);

struct ChainStep {
  int i = 0;                       // chain index; -1 is the start
  std::size_t basis = 0;           // |basis(N_i)|
  std::int64_t logp_index = 0;     // |basis(N_i)| - |basis(N_{i-1})|
  std::optional<std::int64_t> predicted;  // q_{p,i+1} for 1 <= i <= n-1, default start only
  MonomialSet members;
};

struct ChainReport {
  PrimeParams params;
  ChainKind kind = ChainKind::normalizer;
  /// Starting term N_{-1}; not listed in `steps`.
  MonomialSet start;
  std::vector<ChainStep> steps;
  bool stabilized = false;

  /// Every predicted step matches its logp_index.
  bool predictions_hold() const;
};

/// Default step cap: the chain lives in a group of class p^{n-1}.
int chain_guard(const PrimeParams& params);

/// N_{-1} = start (T by default), N_i = N_{W_n}(N_{i-1}). Computes up to
/// `steps` terms N_0..N_{steps-1}, stopping early once N_i = N_{i-1} or the
/// guard is reached.
ChainReport normalizer_chain(const PrimeParams& params, int steps,
                             std::optional<SaturatedSubgroup> start = std::nullopt);

/// The same iteration with idealizers in L_n, from span{d_1..d_n}.
ChainReport idealizer_chain(const PrimeParams& params, int steps,
                            std::optional<HomogeneousSubring> start = std::nullopt);

struct CrossReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};

/// Step-by-step comparison of the two chains: equal relative indices,
/// and (N_i)^phi = idealizer term basis for basis.
CrossReport cross_validate(const ChainReport& group, const ChainReport& lie);

std::string to_json(const ChainReport& report);
std::string to_csv(const ChainReport& report);

// ---------------------------------------------------------------- OEIS b-files

struct BFileEntry {
  std::int64_t index;
  std::int64_t value;
};

/// `index value` lines; '#' starts a comment, blank lines are skipped.
std::vector<BFileEntry> read_bfile(std::istream& in);

/// Which computed sequence a b-file agrees with, and at which index shift.
struct SequenceMatch {
  std::string sequence;  // "t", "t+1", "q"
  int shift = 0;         // b-file index = sequence index + shift
  std::size_t compared = 0;
};

/// Tries t_{p,i}, t_{p,i}+1 and q_{p,i} against the b-file at shifts
/// -2..2 over the indices that overlap 1..up_to. Reports every alignment
/// that matches on at least 3 entries; an empty result means none does.
std::vector<SequenceMatch> compare_bfile(const std::vector<BFileEntry>& entries, int p,
                                         int up_to);

}  // namespace sylow
