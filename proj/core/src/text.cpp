#include "gaussq/text.hpp"

#include <cctype>
#include <map>
#include <sstream>
#include <vector>

namespace gaussq {

std::string to_string(const Rational& r) { return r.get_str(); }

namespace {

struct Term {
  Rational coeff;
  std::vector<std::pair<char, long>> powers;  // in print order
};

std::string join_terms(const std::vector<Term>& terms) {
  if (terms.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms) {
    const bool negative = t.coeff < 0;
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;

    const Rational mag = abs(t.coeff);
    bool wrote = false;
    bool has_var = false;
    for (const auto& [v, e] : t.powers) has_var |= e != 0;
    if (mag != 1 || !has_var) {
      out << mag.get_str();
      wrote = true;
    }
    for (const auto& [v, e] : t.powers) {
      if (e == 0) continue;
      if (wrote) out << '*';
      out << v;
      if (e != 1) out << '^' << e;
      wrote = true;
    }
  }
  return out.str();
}

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  // Each term is a coefficient and a map from variable to exponent.
  std::vector<std::pair<Rational, std::map<char, long>>> parse() {
    std::vector<std::pair<Rational, std::map<char, long>>> out;
    skip_ws();
    if (at_end()) fail("empty polynomial");
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = peek() == '-' ? -1 : 1;
      ++pos_;
    }
    for (;;) {
      auto term = parse_term();
      term.first *= sign;
      out.push_back(std::move(term));
      skip_ws();
      if (at_end()) break;
      const char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      sign = c == '-' ? -1 : 1;
      ++pos_;
    }
    return out;
  }

 private:
  std::pair<Rational, std::map<char, long>> parse_term() {
    Rational coeff = 1;
    std::map<char, long> powers;
    for (;;) {
      skip_ws();
      if (at_end()) fail("expected a factor");
      const char c = peek();
      if (std::isdigit(static_cast<unsigned char>(c))) {
        Integer num(read_digits());
        skip_ws();
        Integer den = 1;
        if (!at_end() && peek() == '/') {
          ++pos_;
          skip_ws();
          den = Integer(read_digits());
          if (den == 0) fail("zero denominator");
        }
        Rational r(num, den);
        r.canonicalize();
        coeff *= r;
      } else if (std::isalpha(static_cast<unsigned char>(c))) {
        ++pos_;
        long e = 1;
        skip_ws();
        if (!at_end() && peek() == '^') {
          ++pos_;
          skip_ws();
          e = std::stol(read_digits());
        }
        powers[c] += e;
      } else {
        fail(std::string("unexpected character '") + c + "'");
      }
      skip_ws();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {coeff, powers};
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(s_.substr(start, pos_ - start));
  }

  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("cannot parse polynomial '" + std::string(s_) + "' at offset " +
                     std::to_string(pos_) + ": " + what);
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string to_string(const UniPoly& p) {
  std::vector<Term> terms;
  for (long i = 0; i <= p.degree(); ++i) {
    if (p.coeff(i) == 0) continue;
    terms.push_back({p.coeff(i), {{p.var(), i}}});
  }
  return join_terms(terms);
}

std::string to_string(const BiPoly& p) {
  std::vector<Term> terms;
  for (const auto& [key, c] : p.terms()) terms.push_back({c, {{'x', key.first}, {'t', key.second}}});
  return join_terms(terms);
}

std::string to_string(const TruncSeries& s) {
  std::string body = to_string(s.to_poly());
  return body + " + O(" + s.var() + "^" + std::to_string(s.order() + 1) + ")";
}

UniPoly parse_unipoly(std::string_view text, char var) {
  std::vector<Rational> coeffs;
  for (const auto& [c, powers] : Parser(text).parse()) {
    long e = 0;
    for (const auto& [v, pw] : powers) {
      if (v != var) throw ParseError(std::string("unexpected variable '") + v + "'");
      e += pw;
    }
    if (coeffs.size() <= static_cast<std::size_t>(e)) coeffs.resize(static_cast<std::size_t>(e) + 1);
    coeffs[static_cast<std::size_t>(e)] += c;
  }
  return UniPoly(std::move(coeffs), var);
}

BiPoly parse_bipoly(std::string_view text) {
  BiPoly p;
  for (const auto& [c, powers] : Parser(text).parse()) {
    int ex = 0, et = 0;
    for (const auto& [v, pw] : powers) {
      if (v == 'x') {
        ex += static_cast<int>(pw);
      } else if (v == 't') {
        et += static_cast<int>(pw);
      } else {
        throw ParseError(std::string("unexpected variable '") + v + "'");
      }
    }
    p.add_term(ex, et, c);
  }
  return p;
}

}  // namespace gaussq
