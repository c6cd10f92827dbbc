#include "dslice/expression.hpp"

#include <cctype>

#include "dslice/errors.hpp"

namespace dslice {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression parse() {
    skip();
    Expression out;
    if (accept("S2") || accept("S²")) {
      auto [e, coeffs] = body(true);
      out = SeifertInvariants(std::move(e), std::move(coeffs));
    } else if (accept("M")) {
      auto [e, coeffs] = body(true);
      out = MontesinosLink(std::move(e), std::move(coeffs));
    } else if (accept("P")) {
      out = pretzel_body();
    } else {
      fail("expected S2, M or P");
    }
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skip();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  bool peek(std::string_view token) {
    skip();
    return text_.substr(pos_, token.size()) == token;
  }

  Integer integer() {
    skip();
    bool negative = false;
    if (accept("-") || accept("−")) {
      negative = true;
    } else {
      accept("+");
    }
    skip();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    Integer v(std::string(text_.substr(start, pos_ - start)));
    return negative ? Integer(-v) : v;
  }

  Rational rational(bool require_nonunit) {
    skip();
    const std::size_t start = pos_;
    Integer p = integer();
    Integer q = 1;
    if (accept("/")) {
      q = integer();
      if (q == 0) fail("zero denominator");
    }
    if (gcd(p, q) != 1) {
      pos_ = start;
      fail("fraction " + p.get_str() + "/" + q.get_str() + " is not reduced");
    }
    if (require_nonunit && abs(p) <= 1) {
      pos_ = start;
      fail("coefficient needs |p| > 1");
    }
    return Rational(p, q);
  }

  std::pair<Integer, std::vector<Rational>> body(bool require_nonunit) {
    expect("(");
    Integer e = integer();
    expect(";");
    std::vector<Rational> coeffs;
    if (!peek(")")) {
      coeffs.push_back(rational(require_nonunit));
      while (accept(",")) coeffs.push_back(rational(require_nonunit));
    }
    expect(")");
    return {std::move(e), std::move(coeffs)};
  }

  PretzelParams pretzel_body() {
    expect("(");
    PretzelParams p;
    do {
      skip();
      const std::size_t start = pos_;
      p.strands.push_back(integer());
      if (p.strands.back() == 0) {
        pos_ = start;
        fail("pretzel strand 0 is not allowed");
      }
    } while (accept(","));
    expect(")");
    return p;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const PretzelParams& p) {
  std::string out = "P(";
  for (std::size_t i = 0; i < p.strands.size(); ++i) out += (i ? ", " : "") + p.strands[i].get_str();
  return out + ")";
}

std::string to_string(const Expression& e) {
  return std::visit([](const auto& v) { return dslice::to_string(v); }, e);
}

}  // namespace dslice
