#include "moment_forge/io.hpp"

#include <cctype>
#include <cstdio>
#include <set>
#include <string>

#include "moment_forge/errors.hpp"

namespace moment_forge {

namespace {

constexpr std::size_t kMaxNesting = 256;
// Bound on (coefficient bits) * (exponent) for a single '^'.
constexpr unsigned long kMaxCoefficientBits = 1UL << 24;

bool is_ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}
bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string describe_char(char c) {
  const auto u = static_cast<unsigned char>(c);
  if (u >= 0x20 && u < 0x7f) return std::string("'") + c + "'";
  char buf[8];
  std::snprintf(buf, sizeof buf, "0x%02x", u);
  return buf;
}

class Parser {
 public:
  Parser(std::string_view text, Ring ring, const std::vector<std::string>& variables)
      : text_(text), ring_(ring), variables_(variables) {}

  LaurentPoly parse() {
    try {
      LaurentPoly result = expr();
      skip_ws();
      if (!at_end()) {
        const char c = text_[pos_];
        if (is_ident_start(c) || is_digit(c) || c == '(') {
          fail(pos_, "unexpected " + describe_char(c) + " (use '*' for multiplication)");
        }
        if (c == '/') fail(pos_, "'/' is only allowed inside a rational literal");
        fail(pos_, "unexpected " + describe_char(c));
      }
      return result;
    } catch (const LimitError& e) {
      fail(pos_, e.what());
    }
  }

 private:
  [[noreturn]] void fail(std::size_t offset, const std::string& message) const {
    std::size_t line = 1, column = 1;
    for (std::size_t k = 0; k < offset && k < text_.size(); ++k) {
      if (text_[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(message, line, column);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }

  LaurentPoly expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') {
      negate = peek() == '-';
      ++pos_;
    }
    LaurentPoly acc = term();
    if (negate) acc = -acc;
    while (true) {
      skip_ws();
      const char op = peek();
      if (op != '+' && op != '-') break;
      ++pos_;
      const LaurentPoly rhs = term();
      acc = op == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  LaurentPoly term() {
    LaurentPoly acc = factor();
    while (true) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  LaurentPoly factor() {
    LaurentPoly b = base();
    skip_ws();
    if (peek() != '^') return b;
    ++pos_;
    skip_ws();
    const std::size_t exp_start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    if (!is_digit(peek())) fail(pos_, "expected an integer exponent after '^'");
    std::int64_t value = 0;
    while (is_digit(peek())) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > degree_cap()) fail(exp_start, "exponent exceeds the degree cap");
      ++pos_;
    }
    if (negative && value != 0) {
      if (ring_ == Ring::polynomial) fail(exp_start, "negative exponent in polynomial ring");
      if (b.size() != 1) fail(exp_start, "negative power of a non-monomial");
      b = invert_monomial(b);
    }
    check_growth(b, static_cast<unsigned long>(value), exp_start);
    return b.pow(static_cast<unsigned long>(value));
  }

  LaurentPoly base() {
    skip_ws();
    if (at_end()) fail(pos_, "unexpected end of input");
    const std::size_t start = pos_;
    const char c = peek();
    const std::size_t arity = variables_.size();
    if (is_digit(c)) {
      while (is_digit(peek())) ++pos_;
      mpz_class num(std::string(text_.substr(start, pos_ - start)), 10);
      mpz_class den = 1;
      if (peek() == '/') {
        ++pos_;
        const std::size_t den_start = pos_;
        if (!is_digit(peek())) fail(pos_, "malformed rational: expected a denominator");
        while (is_digit(peek())) ++pos_;
        den = mpz_class(std::string(text_.substr(den_start, pos_ - den_start)), 10);
        if (den == 0) fail(den_start, "malformed rational: zero denominator");
      }
      mpq_class q(num, den);
      q.canonicalize();
      return LaurentPoly::constant(arity, GaussRat(std::move(q)));
    }
    if (is_ident_start(c)) {
      while (is_ident_char(peek())) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      if (name == "i") return LaurentPoly::constant(arity, GaussRat::i());
      for (std::size_t v = 0; v < arity; ++v) {
        if (variables_[v] == name) return LaurentPoly::variable(arity, v);
      }
      fail(start, "unknown identifier '" + std::string(name) + "'");
    }
    if (c == '(') {
      if (++depth_ > kMaxNesting) fail(pos_, "expression nested too deeply");
      ++pos_;
      LaurentPoly inner = expr();
      skip_ws();
      if (peek() != ')') {
        fail(pos_, at_end() ? "expected ')' before end of input" : "expected ')'");
      }
      ++pos_;
      --depth_;
      return inner;
    }
    if (c == '/') fail(pos_, "'/' is only allowed inside a rational literal");
    fail(pos_, "unexpected " + describe_char(c));
  }

  static LaurentPoly invert_monomial(const LaurentPoly& b) {
    const Term& t = b.terms()[0];
    Exponents e(t.exponents.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = -t.exponents[k];
    std::vector<Term> terms;
    terms.push_back(Term{std::move(e), GaussRat(1) / t.coeff});
    return LaurentPoly::from_terms(b.arity(), std::move(terms));
  }

  void check_growth(const LaurentPoly& b, unsigned long exponent, std::size_t at) const {
    unsigned long bits = 1;
    for (const Term& t : b.terms()) {
      const mpq_class& re = t.coeff.re();
      const mpq_class& im = t.coeff.im();
      bits = std::max<unsigned long>(
          bits, mpz_sizeinbase(re.get_num_mpz_t(), 2) + mpz_sizeinbase(re.get_den_mpz_t(), 2) +
                    mpz_sizeinbase(im.get_num_mpz_t(), 2) + mpz_sizeinbase(im.get_den_mpz_t(), 2));
    }
    if (exponent != 0 && bits > kMaxCoefficientBits / exponent) {
      fail(at, "power would produce coefficients that are too large");
    }
  }

  std::string_view text_;
  Ring ring_;
  const std::vector<std::string>& variables_;
  std::size_t pos_ = 0;
  std::size_t depth_ = 0;
};

bool is_identifier(std::string_view name) {
  if (name.empty() || !is_ident_start(name[0])) return false;
  for (char c : name) {
    if (!is_ident_char(c)) return false;
  }
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())) != 0) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())) != 0) s.remove_suffix(1);
  return s;
}

// "x12" -> ("x", 12); nullopt-like (empty prefix, -1) when no trailing digits.
std::pair<std::string, long> split_index(std::string_view name) {
  std::size_t k = name.size();
  while (k > 0 && is_digit(name[k - 1])) --k;
  if (k == name.size() || name.size() - k > 6) return {std::string(name), -1};
  return {std::string(name.substr(0, k)), std::stol(std::string(name.substr(k)))};
}

struct FormattedCoeff {
  bool negative = false;
  std::string text;  // empty means a bare unit in front of a monomial
};

FormattedCoeff format_coeff(const GaussRat& c) {
  FormattedCoeff out;
  if (c.is_real()) {
    out.negative = sgn(c.re()) < 0;
    const mpq_class mag = abs(c.re());
    if (mag != 1) out.text = mag.get_str();
  } else if (sgn(c.re()) == 0) {
    out.negative = sgn(c.im()) < 0;
    const mpq_class mag = abs(c.im());
    out.text = mag == 1 ? "i" : mag.get_str() + "*i";
  } else {
    out.text = "(" + c.to_string() + ")";
  }
  return out;
}

}  // namespace

AnyPoly parse_poly(const PolySource& source) {
  validate_variables(source.variables);
  LaurentPoly parsed = Parser(source.text, source.ring, source.variables).parse();
  if (source.ring == Ring::polynomial) return to_polynomial(parsed);
  return parsed;
}

MPoly parse_mpoly(std::string_view text, const std::vector<std::string>& variables) {
  return std::get<MPoly>(parse_poly(PolySource{std::string(text), Ring::polynomial, variables}));
}

LaurentPoly parse_laurent(std::string_view text, const std::vector<std::string>& variables) {
  return std::get<LaurentPoly>(
      parse_poly(PolySource{std::string(text), Ring::laurent, variables}));
}

void validate_variables(const std::vector<std::string>& variables) {
  std::set<std::string> seen;
  for (const std::string& name : variables) {
    if (!is_identifier(name)) throw UsageError("invalid variable name '" + name + "'");
    if (name == "i") throw UsageError("'i' is reserved for the imaginary unit");
    if (!seen.insert(name).second) throw UsageError("duplicate variable '" + name + "'");
  }
}

std::vector<std::string> parse_variable_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t comma = list.find(',', start);
    if (comma == std::string_view::npos) comma = list.size();
    const std::string_view item = trim(list.substr(start, comma - start));
    if (item.empty()) throw UsageError("empty entry in variable list '" + std::string(list) + "'");
    if (const std::size_t dots = item.find(".."); dots != std::string_view::npos) {
      const auto [prefix, first] = split_index(trim(item.substr(0, dots)));
      const auto [prefix2, last] = split_index(trim(item.substr(dots + 2)));
      if (first < 0 || last < 0 || prefix != prefix2 || first > last || last - first > 1000) {
        throw UsageError("invalid variable range '" + std::string(item) + "'");
      }
      for (long k = first; k <= last; ++k) out.push_back(prefix + std::to_string(k));
    } else {
      out.emplace_back(item);
    }
    start = comma + 1;
  }
  validate_variables(out);
  return out;
}

template <Ring R>
std::string format_poly(const BasicPoly<R>& p, const std::vector<std::string>& variables) {
  if (variables.size() != p.arity()) {
    throw UsageError("format_poly: " + std::to_string(variables.size()) +
                     " variable names for arity " + std::to_string(p.arity()));
  }
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : p.terms()) {
    std::string monomial;
    for (std::size_t v = 0; v < variables.size(); ++v) {
      const Exponent e = t.exponents[v];
      if (e == 0) continue;
      if (!monomial.empty()) monomial += '*';
      monomial += variables[v];
      if (e != 1) monomial += "^" + std::to_string(e);
    }
    const FormattedCoeff c = format_coeff(t.coeff);
    std::string body;
    if (monomial.empty()) {
      body = c.text.empty() ? "1" : c.text;
    } else {
      body = c.text.empty() ? monomial : c.text + "*" + monomial;
    }
    if (first) {
      out += c.negative ? "-" : "";
    } else {
      out += c.negative ? " - " : " + ";
    }
    out += body;
    first = false;
  }
  return out;
}

template std::string format_poly(const MPoly&, const std::vector<std::string>&);
template std::string format_poly(const LaurentPoly&, const std::vector<std::string>&);

std::string format_poly(const AnyPoly& p, const std::vector<std::string>& variables) {
  return std::visit([&](const auto& poly) { return format_poly(poly, variables); }, p);
}

}  // namespace moment_forge
