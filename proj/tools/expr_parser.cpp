#include "expr_parser.hpp"

#include <cctype>

namespace superint {

namespace {

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  ParamRatFn parse() {
    ParamRatFn v = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + s_.substr(pos_, 1) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ExprError("in '" + s_ + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool eat(const std::string& tok) {
    skip();
    if (s_.compare(pos_, tok.size(), tok) != 0) return false;
    pos_ += tok.size();
    return true;
  }

  bool starts_atom() {
    skip();
    if (pos_ >= s_.size()) return false;
    unsigned char c = s_[pos_];
    return std::isalnum(c) || c == '(' || c >= 0x80;
  }

  ParamRatFn expr() {
    ParamRatFn v = eat("-") ? -term() : (eat("+"), term());
    for (;;) {
      if (eat("+")) v += term();
      else if (eat("-")) v -= term();
      else return v;
    }
  }

  ParamRatFn term() {
    ParamRatFn v = factor();
    for (;;) {
      if (eat("*")) {
        v *= factor();
      } else if (eat("/")) {
        ParamRatFn d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else if (starts_atom()) {
        v *= factor();
      } else {
        return v;
      }
    }
  }

  ParamRatFn factor() {
    if (eat("-")) return -factor();
    ParamRatFn base = atom();
    if (!eat("^")) return base;
    bool neg = eat("-");
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 4) fail("exponent too large");
    int e = std::stoi(s_.substr(start, pos_ - start));
    ParamRatFn r(1);
    for (int n = 0; n < e; ++n) r *= base;
    if (neg) {
      if (r.is_zero()) fail("zero to a negative power");
      r = ParamRatFn(1) / r;
    }
    return r;
  }

  ParamRatFn atom() {
    skip();
    if (eat("(")) {
      ParamRatFn v = expr();
      if (!eat(")")) fail("expected ')'");
      return v;
    }
    if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') fail("decimal numbers are not exact; use a ratio");
      return ParamRatFn(Rational::parse(s_.substr(start, pos_ - start)));
    }
    static const std::pair<const char*, Var> names[] = {
        {"alpha", Var::Alpha}, {"beta", Var::Beta}, {"gamma", Var::Gamma}, {"α", Var::Alpha},
        {"β", Var::Beta},      {"γ", Var::Gamma},  {"L2", Var::L2},       {"H", Var::H}};
    for (const auto& [name, v] : names)
      if (eat(name)) return ParamRatFn::var(v);
    if (eat("i")) return ParamRatFn(GaussRational::i());
    fail(pos_ < s_.size() ? "unknown symbol" : "unexpected end of input");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

}  // namespace

ParamRatFn parse_param_expr(const std::string& text) { return Parser(text).parse(); }

std::array<ParamRatFn, 2> parse_seed(const std::string& text) {
  int depth = 0;
  size_t comma = std::string::npos;
  for (size_t n = 0; n < text.size(); ++n) {
    if (text[n] == '(') ++depth;
    else if (text[n] == ')') --depth;
    else if (text[n] == ',' && depth == 0) {
      if (comma != std::string::npos) throw ExprError("seed '" + text + "' has more than two parts");
      comma = n;
    }
  }
  if (comma == std::string::npos) throw ExprError("seed '" + text + "' must be two expressions separated by a comma");
  return {parse_param_expr(text.substr(0, comma)), parse_param_expr(text.substr(comma + 1))};
}

}  // namespace superint
