#include "fva/expr_parser.hpp"

#include <cctype>
#include <limits>
#include <string>

#include "fva/errors.hpp"

namespace fva {

namespace {

class Parser {
 public:
  Parser(const Signature& sig, std::string_view text) : sig_(sig), text_(text) {}

  std::vector<ParsedTerm> terms() {
    std::vector<ParsedTerm> out;
    skip_ws();
    Scalar sign = 1;
    if (peek() == '-' || peek() == '+') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    out.push_back(term(sign));
    while (true) {
      skip_ws();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') throw ParseError("expected '+' or '-'", pos_);
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
      out.push_back(term(sign));
    }
    return out;
  }

  VertexExpr single() {
    VertexExpr e = monomial();
    skip_ws();
    if (!at_end()) throw ParseError("unexpected trailing input", pos_);
    return e;
  }

  std::int64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (peek() == '-' || peek() == '+') {
      neg = peek() == '-';
      ++pos_;
    }
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", pos_);
    std::int64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const int d = peek() - '0';
      if (v > (std::numeric_limits<std::int64_t>::max() - d) / 10) throw ParseError("integer out of range", start);
      v = v * 10 + d;
      ++pos_;
    }
    return neg ? -v : v;
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  std::size_t pos() const { return pos_; }

 private:
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void expect(char c) {
    skip_ws();
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }

  ParsedTerm term(const Scalar& sign) {
    skip_ws();
    Scalar coeff = sign;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      Integer num{std::string(digits())};
      Integer den = 1;
      skip_ws();
      if (peek() == '/') {
        ++pos_;
        skip_ws();
        const std::size_t at = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected denominator", pos_);
        den = Integer{std::string(digits())};
        if (den == 0) throw ParseError("zero denominator", at);
      }
      Scalar q(num, den);
      q.canonicalize();
      coeff *= q;
      expect('*');
    }
    return ParsedTerm{coeff, monomial()};
  }

  std::string_view digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  VertexExpr monomial() {
    skip_ws();
    if (at_end()) throw ParseError("expected monomial", pos_);
    if (peek() == '(') {
      ++pos_;
      VertexExpr left = monomial();
      expect('[');
      const std::int64_t mode = integer();
      expect(']');
      VertexExpr right = monomial();
      expect(')');
      return VertexExpr::product(std::move(left), mode, std::move(right));
    }
    const std::size_t start = pos_;
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
    if (start == pos_) throw ParseError("expected monomial", pos_);
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "vac") return VertexExpr::vacuum();
    const auto gen = sig_.find(name);
    if (!gen) throw ValidationError("unknown generator '" + std::string(name) + "' at offset " + std::to_string(start));
    skip_ws();
    if (peek() != '(') return VertexExpr::generator(*gen);
    ++pos_;
    const std::int64_t mode = integer();
    expect(')');
    VertexExpr rest = monomial();
    return VertexExpr::product(VertexExpr::generator(*gen), mode, std::move(rest));
  }

  const Signature& sig_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

VertexExpr parse_expr(const Signature& sig, std::string_view text) { return Parser(sig, text).single(); }

std::vector<ParsedTerm> parse_terms(const Signature& sig, std::string_view text) {
  return Parser(sig, text).terms();
}

FreeElement parse_element(const Signature& sig, std::string_view text) {
  FreeElement out;
  for (const auto& t : parse_terms(sig, text)) out.add(evaluate_expr(sig, t.expr), t.coeff);
  return out;
}

std::int64_t parse_integer(std::string_view text) {
  static const Signature none({}, {});
  Parser p(none, text);
  const std::int64_t v = p.integer();
  p.skip_ws();
  if (!p.at_end()) throw ParseError("unexpected trailing input", p.pos());
  return v;
}

std::pair<std::int64_t, std::int64_t> parse_range(std::string_view text) {
  const auto dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t v = parse_integer(text);
    return {v, v};
  }
  std::int64_t lo = 0;
  std::int64_t hi = 0;
  try {
    lo = parse_integer(text.substr(0, dots));
  } catch (const ParseError& e) {
    throw ParseError("bad range start", e.offset());
  }
  try {
    hi = parse_integer(text.substr(dots + 2));
  } catch (const ParseError& e) {
    throw ParseError("bad range end", dots + 2 + e.offset());
  }
  if (hi < lo) throw ValidationError("empty range '" + std::string(text) + "'");
  return {lo, hi};
}

}  // namespace fva
