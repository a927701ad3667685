#pragma once

// Shared scanning helpers for the element, Lie and polynomial grammars.

#include <cctype>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sylow/errors.hpp"

namespace sylow::detail {

/// Whitespace-free view of the input that still reports original offsets.
class Cursor {
 public:
  explicit Cursor(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      offsets_.push_back(i);
    }
    end_offset_ = text.size();
  }

  bool eof() const { return at_ >= chars_.size(); }
  char peek() const { return eof() ? '\0' : chars_[at_]; }
  char get() { return chars_[at_++]; }
  bool accept(char c) {
    if (peek() != c || eof()) return false;
    ++at_;
    return true;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }
  std::size_t position() const { return eof() ? end_offset_ : offsets_[at_]; }
  std::size_t mark() const { return at_; }
  std::size_t offset_of(std::size_t mark) const {
    return mark < offsets_.size() ? offsets_[mark] : end_offset_;
  }

  bool at_digit() const {
    return !eof() && std::isdigit(static_cast<unsigned char>(peek()));
  }

  /// Unsigned decimal, saturating well above anything meaningful.
  std::int64_t integer() {
    if (!at_digit()) fail("expected integer");
    std::int64_t v = 0;
    while (at_digit()) {
      v = v * 10 + (get() - '0');
      if (v > (std::int64_t{1} << 40)) fail("integer too large");
    }
    return v;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, position());
  }

 private:
  std::vector<char> chars_;
  std::vector<std::size_t> offsets_;
  std::size_t at_ = 0;
  std::size_t end_offset_ = 0;
};

struct RawFactor {
  int variable;
  std::int64_t exponent;
  std::size_t offset;
};

/// One summand `[c] x<i>[^e] x<j>[^f] ...`, before any layer is known.
struct RawTerm {
  std::int64_t coeff = 1;
  bool has_coeff = false;
  std::vector<RawFactor> factors;
};

inline RawTerm scan_term(Cursor& in) {
  RawTerm t;
  if (in.at_digit()) {
    t.coeff = in.integer();
    t.has_coeff = true;
  }
  while (in.peek() == 'x') {
    std::size_t at = in.position();
    in.get();
    std::int64_t var = in.integer();
    if (var < 1 || var > 1000000)
      throw ParseError("variable index out of range", at);
    std::int64_t e = 1;
    if (in.accept('^')) e = in.integer();
    t.factors.push_back({static_cast<int>(var), e, at});
  }
  return t;
}

struct SignedTerm {
  std::int64_t sign;
  RawTerm term;
};

/// `[+-] term ([+-] term)*`, stopping where the sum cannot continue.
inline std::vector<SignedTerm> scan_sum(Cursor& in) {
  std::vector<SignedTerm> out;
  while (true) {
    std::int64_t sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!in.accept('+') && !out.empty()) {
      break;
    }
    RawTerm t = scan_term(in);
    if (!t.has_coeff && t.factors.empty()) in.fail("expected a term");
    out.push_back({sign, std::move(t)});
  }
  return out;
}

}  // namespace sylow::detail
