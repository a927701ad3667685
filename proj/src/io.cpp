#include "sylow/io.hpp"

#include <regex>
#include <sstream>

#include "sylow/errors.hpp"

namespace sylow {

namespace {

std::string strip(std::string line) {
  if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
  auto first = line.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  auto last = line.find_last_not_of(" \t\r");
  return line.substr(first, last - first + 1);
}

}  // namespace

SaturatedSubgroup read_subgroup(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  std::string header;
  while (header.empty() && std::getline(in, line)) {
    ++lineno;
    header = strip(line);
  }
  static const std::regex header_re(R"(p\s*=\s*(\d+)\s+n\s*=\s*(\d+))");
  std::smatch match;
  if (!std::regex_match(header, match, header_re))
    throw ParseError("subgroup file must start with 'p=<p> n=<n>' (line " +
                         std::to_string(lineno) + ")",
                     0);
  const PrimeParams params = PrimeParams::make(std::stoi(match[1]), std::stoi(match[2]));
  MonomialSet basis(params);
  while (std::getline(in, line)) {
    ++lineno;
    const std::string text = strip(line);
    if (text.empty()) continue;
    WreathElement g = [&] {
      try {
        return parse_element(text, params);
      } catch (const ParseError& e) {
        throw ParseError("line " + std::to_string(lineno) + ": " + e.what(), e.position());
      }
    }();
    auto support = g.support();
    if (support.size() != 1 || g.layer(support.front()).term_count() != 1 ||
        g.layer(support.front()).leading().coeff != 1)
      throw ParseError("line " + std::to_string(lineno) + ": expected one monic monomial", 0);
    basis.insert({support.front(), g.layer(support.front()).leading().key});
  }
  return SaturatedSubgroup(std::move(basis));
}

std::string write_subgroup(const SaturatedSubgroup& s) {
  std::ostringstream os;
  os << s.params().to_string() << '\n';
  for (const auto& m : s.basis().elements()) os << to_string(s.params(), m) << '\n';
  return os.str();
}

}  // namespace sylow
