#include "sylow/chains.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "sylow/errors.hpp"

namespace sylow {

// ---------------------------------------------------------------- partitions

namespace {

/// Partitions of `remaining` using parts <= max_part, each used at most
/// `max_mult` times; `parts` counts the parts placed so far.
std::uint64_t enumerate(int remaining, int max_part, int max_mult, int parts) {
  if (remaining == 0) return parts >= 2 ? 1 : 0;
  std::uint64_t total = 0;
  for (int part = std::min(max_part, remaining); part >= 1; --part)
    for (int mult = 1; mult <= max_mult && mult * part <= remaining; ++mult)
      total += enumerate(remaining - mult * part, part - 1, max_mult, parts + mult);
  return total;
}

}  // namespace

std::uint64_t count_partitions(int p, int i) {
  if (i < 1) throw DomainError("partition counts start at i = 1");
  return enumerate(i, i, p - 1, 0);
}

std::uint64_t count_bounded_partitions(int p, int i) {
  if (i < 0) throw DomainError("negative partition size");
  std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(i) + 1, 0);
  coeffs[0] = 1;
  for (int part = 1; part <= i; ++part) {
    std::vector<std::uint64_t> next(coeffs.size(), 0);
    for (int s = 0; s <= i; ++s) {
      if (coeffs[static_cast<std::size_t>(s)] == 0) continue;
      for (int mult = 0; mult <= p - 1 && s + mult * part <= i; ++mult)
        next[static_cast<std::size_t>(s + mult * part)] += coeffs[static_cast<std::size_t>(s)];
    }
    coeffs = std::move(next);
  }
  return coeffs[static_cast<std::size_t>(i)];
}

PartitionTable q_table(int p, int up_to) {
  if (up_to < 1) throw DomainError("q_table needs up_to >= 1");
  PartitionTable table{p, std::vector<std::uint64_t>(static_cast<std::size_t>(up_to) + 1, 0),
                       std::vector<std::uint64_t>(static_cast<std::size_t>(up_to) + 1, 0)};
  for (int i = 1; i <= up_to; ++i) {
    table.t[static_cast<std::size_t>(i)] = count_partitions(p, i);
    table.q[static_cast<std::size_t>(i)] =
        table.q[static_cast<std::size_t>(i - 1)] + table.t[static_cast<std::size_t>(i)];
  }
  return table;
}

// ---------------------------------------------------------------- normalizer

SaturatedSubgroup normalizer(const SaturatedSubgroup& s) {
  const PrimeParams& params = s.params();
  std::vector<WreathElement> members;
  for (const auto& m : s.basis().elements()) members.push_back(WreathElement::monomial(params, m));
  return SaturatedSubgroup(MonomialSet::where(params, [&](const Monomial& g) {
    const WreathElement ge = WreathElement::monomial(params, g);
    for (const auto& sm : members)
      if (!s.contains(commutator(ge, sm))) return false;
    return true;
  }));
}

std::string to_string(ChainKind kind) {
  return kind == ChainKind::normalizer ? "normalizer" : "idealizer";
}

bool ChainReport::predictions_hold() const {
  for (const auto& s : steps)
    if (s.predicted && *s.predicted != s.logp_index) return false;
  return true;
}

int chain_guard(const PrimeParams& params) {
  return static_cast<int>(std::min<std::uint32_t>(params.class_length(), 1u << 20));
}

namespace {

ChainReport run_chain(const PrimeParams& params, ChainKind kind, int steps, MonomialSet start,
                      bool predict, const std::function<MonomialSet(const MonomialSet&)>& next_term) {
  if (steps < 1) throw DomainError("a chain needs at least one step");
  ChainReport report{params, kind, start, {}, false};
  const int limit = std::min(steps, chain_guard(params));
  const int top_predicted = params.n - 1;
  PartitionTable table = q_table(params.p, std::max(2, params.n));
  MonomialSet previous = std::move(start);
  for (int i = 0; i < limit; ++i) {
    MonomialSet current = next_term(previous);
    std::optional<std::int64_t> predicted;
    if (predict && i >= 1 && i <= top_predicted)
      predicted = static_cast<std::int64_t>(table.q[static_cast<std::size_t>(i + 1)]);
    report.steps.push_back(ChainStep{
        i, current.size(),
        static_cast<std::int64_t>(current.size()) - static_cast<std::int64_t>(previous.size()),
        predicted, current});
    if (current == previous) {
      report.stabilized = true;
      break;
    }
    previous = std::move(current);
  }
  return report;
}

}  // namespace

ChainReport normalizer_chain(const PrimeParams& params, int steps,
                             std::optional<SaturatedSubgroup> start) {
  SaturatedSubgroup first = start.value_or(SaturatedSubgroup::translations(params));
  return run_chain(params, ChainKind::normalizer, steps, first.basis(), !start,
                   [](const MonomialSet& s) { return normalizer(SaturatedSubgroup(s)).basis(); });
}

ChainReport idealizer_chain(const PrimeParams& params, int steps,
                            std::optional<HomogeneousSubring> start) {
  HomogeneousSubring first = start.value_or(HomogeneousSubring::translations(params));
  return run_chain(params, ChainKind::idealizer, steps, first.basis(), !start,
                   [](const MonomialSet& s) { return idealizer(HomogeneousSubring(s)).basis(); });
}

CrossReport cross_validate(const ChainReport& group, const ChainReport& lie) {
  CrossReport r;
  auto fail = [&](std::string what) {
    r.ok = false;
    r.mismatches.push_back(std::move(what));
  };
  if (!(group.params == lie.params)) fail("chains computed for different parameters");
  if (!(group.start == lie.start))
    fail("start terms differ: " + to_string(group.start, 'D') + " vs " + to_string(lie.start, 'd'));
  const std::size_t common = std::min(group.steps.size(), lie.steps.size());
  if (group.steps.size() != lie.steps.size())
    fail("chain lengths differ: " + std::to_string(group.steps.size()) + " vs " +
         std::to_string(lie.steps.size()));
  for (std::size_t s = 0; s < common; ++s) {
    const auto& g = group.steps[s];
    const auto& l = lie.steps[s];
    const std::string at = "step " + std::to_string(g.i) + ": ";
    if (g.logp_index != l.logp_index)
      fail(at + "log_p index " + std::to_string(g.logp_index) + " vs dimension increment " +
           std::to_string(l.logp_index));
    const HomogeneousSubring image = subring_image(SaturatedSubgroup(g.members));
    if (!(image.basis() == l.members)) {
      std::ostringstream os;
      os << at << "image " << to_string(image) << " vs idealizer term "
         << to_string(l.members, 'd');
      fail(os.str());
    }
  }
  return r;
}

std::string to_json(const ChainReport& report) {
  nlohmann::ordered_json j;
  j["p"] = report.params.p;
  j["n"] = report.params.n;
  j["kind"] = to_string(report.kind);
  j["start_basis"] = report.start.size();
  j["stabilized"] = report.stabilized;
  j["steps"] = nlohmann::ordered_json::array();
  for (const auto& s : report.steps) {
    nlohmann::ordered_json row;
    row["i"] = s.i;
    row["basis"] = s.basis;
    row["logp_index"] = s.logp_index;
    row["predicted"] = s.predicted ? nlohmann::ordered_json(*s.predicted) : nullptr;
    j["steps"].push_back(std::move(row));
  }
  return j.dump();
}

std::string to_csv(const ChainReport& report) {
  std::ostringstream os;
  os << "p,n,kind,i,basis,logp_index,predicted\n";
  for (const auto& s : report.steps) {
    os << report.params.p << ',' << report.params.n << ',' << to_string(report.kind) << ','
       << s.i << ',' << s.basis << ',' << s.logp_index << ',';
    if (s.predicted) os << *s.predicted;
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------- b-files

std::vector<BFileEntry> read_bfile(std::istream& in) {
  std::vector<BFileEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    BFileEntry e{};
    if (!(ls >> e.index)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      throw ParseError("malformed b-file line " + std::to_string(lineno), 0);
    }
    if (!(ls >> e.value)) throw ParseError("missing value on b-file line " + std::to_string(lineno), 0);
    if (std::string extra; ls >> extra)
      throw ParseError("extra field on b-file line " + std::to_string(lineno), 0);
    out.push_back(e);
  }
  return out;
}

std::vector<SequenceMatch> compare_bfile(const std::vector<BFileEntry>& entries, int p,
                                         int up_to) {
  const PartitionTable table = q_table(p, up_to);
  struct Candidate {
    const char* name;
    std::function<std::int64_t(int)> value;
  };
  const std::vector<Candidate> candidates{
      {"t", [&](int i) { return static_cast<std::int64_t>(table.t[static_cast<std::size_t>(i)]); }},
      {"t+1", [&](int i) { return static_cast<std::int64_t>(table.t[static_cast<std::size_t>(i)]) + 1; }},
      {"q", [&](int i) { return static_cast<std::int64_t>(table.q[static_cast<std::size_t>(i)]); }},
  };
  std::vector<SequenceMatch> matches;
  for (const auto& c : candidates) {
    for (int shift = -2; shift <= 2; ++shift) {
      std::size_t compared = 0;
      bool ok = true;
      for (const auto& e : entries) {
        const std::int64_t i = e.index - shift;
        if (i < 1 || i > up_to) continue;
        ++compared;
        if (c.value(static_cast<int>(i)) != e.value) {
          ok = false;
          break;
        }
      }
      if (ok && compared >= 3) matches.push_back({c.name, shift, compared});
    }
  }
  return matches;
}

}  // namespace sylow
