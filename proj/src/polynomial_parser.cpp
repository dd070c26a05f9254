#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

#include "resmahler/laurent.hpp"

namespace resmahler {
namespace {

constexpr int kMaxPower = 4096;

enum class Tok { kNumber, kIdent, kPlus, kMinus, kStar, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw InputError("polynomial parse error at column " + std::to_string(pos + 1) + ": " + what);
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto digit = [&](std::size_t k) { return k < s.size() && std::isdigit(static_cast<unsigned char>(s[k])); };
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (digit(i) || (c == '.' && digit(i + 1))) {
      while (digit(i)) ++i;
      if (i < s.size() && s[i] == '.') {
        ++i;
        while (digit(i)) ++i;
      } else if (i < s.size() && s[i] == '/' && digit(i + 1)) {
        ++i;
        while (digit(i)) ++i;
      }
      out.push_back({Tok::kNumber, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::kIdent, std::string(s.substr(start, i - start)), start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::kPlus; break;
      case '-': kind = Tok::kMinus; break;
      case '*': kind = Tok::kStar; break;
      case '^': kind = Tok::kCaret; break;
      case '(': kind = Tok::kLParen; break;
      case ')': kind = Tok::kRParen; break;
      default: fail(i, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), i});
    ++i;
  }
  out.push_back({Tok::kEnd, "", s.size()});
  return out;
}

// cpp_int reads a leading 0 as octal.
Integer decimal_integer(std::string digits) {
  digits.erase(0, std::min(digits.find_first_not_of('0'), digits.size()));
  return digits.empty() ? Integer(0) : Integer(digits);
}

Rational parse_number(const Token& t) {
  const std::string& s = t.text;
  if (auto slash = s.find('/'); slash != std::string::npos) {
    const Integer den = decimal_integer(s.substr(slash + 1));
    if (den == 0) fail(t.pos, "zero denominator");
    return Rational(decimal_integer(s.substr(0, slash)), den);
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    Integer scale = boost::multiprecision::pow(Integer(10), static_cast<unsigned>(s.size() - dot - 1));
    return Rational(decimal_integer(digits), scale);
  }
  return Rational(decimal_integer(s));
}

class Parser {
 public:
  Parser(std::vector<Token> tokens, std::vector<std::string> vars)
      : toks_(std::move(tokens)), vars_(std::move(vars)) {}

  RationalLaurent parse() {
    RationalLaurent p = expr();
    if (peek().kind != Tok::kEnd) fail(peek().pos, "unexpected '" + peek().text + "'");
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  RationalLaurent expr() {
    RationalLaurent acc(vars_.size());
    bool negate = false;
    if (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) negate = next().kind == Tok::kMinus;
    RationalLaurent t = term();
    acc = negate ? -t : t;
    while (peek().kind == Tok::kPlus || peek().kind == Tok::kMinus) {
      const bool minus = next().kind == Tok::kMinus;
      t = term();
      if (minus) acc -= t; else acc += t;
    }
    return acc;
  }

  RationalLaurent term() {
    RationalLaurent acc = power();
    while (true) {
      const Tok k = peek().kind;
      if (k == Tok::kStar) {
        next();
        acc = acc * power();
      } else if (k == Tok::kNumber || k == Tok::kIdent || k == Tok::kLParen) {
        fail(peek().pos, "implicit multiplication is not allowed; use '*'");
      } else {
        return acc;
      }
    }
  }

  RationalLaurent power() {
    RationalLaurent base = primary();
    if (peek().kind != Tok::kCaret) return base;
    next();
    bool negative = false;
    if (peek().kind == Tok::kMinus || peek().kind == Tok::kPlus) negative = next().kind == Tok::kMinus;
    const Token& e = next();
    if (e.kind != Tok::kNumber || e.text.find_first_of("./") != std::string::npos)
      fail(e.pos, "exponent must be an integer");
    if (e.text.size() > 6 || std::stoi(e.text) > kMaxPower) fail(e.pos, "exponent too large");
    const int k = std::stoi(e.text);
    if (!negative) return base.pow(static_cast<unsigned>(k));
    if (base.size() != 1) fail(e.pos, "negative powers are only allowed on monomials");
    const auto& [exp, coeff] = *base.terms().begin();
    Exponent inv(exp.size());
    std::transform(exp.begin(), exp.end(), inv.begin(), [](int v) { return -v; });
    return RationalLaurent::monomial(inv, Rational(1) / coeff).pow(static_cast<unsigned>(k));
  }

  RationalLaurent primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kNumber:
        return RationalLaurent::constant(parse_number(t), vars_.size());
      case Tok::kIdent: {
        auto it = std::lower_bound(vars_.begin(), vars_.end(), t.text);
        return RationalLaurent::variable(static_cast<std::size_t>(it - vars_.begin()), vars_.size());
      }
      case Tok::kLParen: {
        RationalLaurent inner = expr();
        if (next().kind != Tok::kRParen) fail(toks_[pos_ - 1].pos, "expected ')'");
        return inner;
      }
      case Tok::kEnd:
        fail(t.pos, toks_.size() == 1 ? "empty polynomial" : "unexpected end of input");
      default:
        fail(t.pos, "unexpected '" + t.text + "'");
    }
  }

  std::vector<Token> toks_;
  std::vector<std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPolynomial parse_polynomial(std::string_view text) {
  auto tokens = tokenize(text);
  std::set<std::string> names;
  for (const auto& t : tokens)
    if (t.kind == Tok::kIdent) names.insert(t.text);
  std::vector<std::string> vars(names.begin(), names.end());
  Parser parser(std::move(tokens), vars);
  return {parser.parse(), std::move(vars)};
}

std::string to_string(const RationalLaurent& p, const std::vector<std::string>& variables) {
  if (variables.size() != p.num_vars()) throw InputError("variable name count mismatch");
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  // Highest total degree first reads more naturally.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool wrote = false;
    const bool constant = std::all_of(e.begin(), e.end(), [](int v) { return v == 0; });
    if (mag != 1 || constant) {
      os << mag.str();
      wrote = true;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (wrote) os << "*";
      os << variables[i];
      if (e[i] != 1) os << "^" << e[i];
      wrote = true;
    }
  }
  return os.str();
}

}  // namespace resmahler
