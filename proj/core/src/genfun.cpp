#include "gaussq/genfun.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "gaussq/cyclotomic.hpp"
#include "gaussq/errors.hpp"
#include "gaussq/qbinom.hpp"
#include "gaussq/text.hpp"

namespace gaussq {

char which_name(Which w) { return w == Which::F ? 'F' : 'G'; }

Which parse_which(std::string_view s) {
  if (s == "F" || s == "f") return Which::F;
  if (s == "G" || s == "g") return Which::G;
  throw ParseError("expected F or G, got '" + std::string(s) + "'");
}

XSeries series_FG(int k, Which which, long order, long t_order) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (order < 0) throw std::invalid_argument("order must be nonnegative");
  XSeries s(order);
  for (long a = 0; a <= order; ++a) {
    const auto coeffs = qbinomial_coefficients(a, k);
    const long m = a * k / 2;
    long top = m;
    if (t_order >= 0) top = std::min(top, t_order);
    std::vector<Rational> tc(static_cast<std::size_t>(top + 1));
    for (long c = 0; c <= top; ++c) {
      Rational v = coeffs[static_cast<std::size_t>(m - c)];
      if (which == Which::F && m - c - 1 >= 0) v -= coeffs[static_cast<std::size_t>(m - c - 1)];
      tc[static_cast<std::size_t>(c)] = v;
    }
    s.set(a, UniPoly(std::move(tc), 't'));
  }
  return s;
}

// ---- factored denominators ----

namespace {

BiPoly t_factor_poly(const TFactor& f) {
  BiPoly p = BiPoly::constant(1);
  p.add_term(f.x_exp, f.t_exp, -1);
  return p;
}

}  // namespace

UniPoly FactoredDenominator::x_part() const {
  UniPoly p = UniPoly::constant(1, 'x');
  for (const auto& [m, e] : cyclo) p *= cyclotomic(m, 'x').pow(static_cast<unsigned>(e));
  return p;
}

BiPoly FactoredDenominator::t_part() const {
  BiPoly p = BiPoly::constant(1);
  for (const auto& f : t_factors) p = p * t_factor_poly(f);
  return p;
}

BiPoly FactoredDenominator::expand() const { return BiPoly::from_x(x_part()) * t_part(); }

long FactoredDenominator::x_degree() const {
  long d = 0;
  for (const auto& [m, e] : cyclo) d += euler_phi(m) * e;
  return d;
}

long FactoredDenominator::period() const {
  long p = 1;
  for (const auto& [m, e] : cyclo) {
    if (e > 0) p = std::lcm(p, static_cast<long>(m));
  }
  return p;
}

XSeries RatFun2::expand(long order) const {
  XSeries s = XSeries::from_bipoly(numerator, order);
  s = s.divided_by(BiPoly::from_x(denominator.x_part()));
  for (const auto& f : denominator.t_factors) s = s.divided_by(t_factor_poly(f));
  return s;
}

bool RatFun2::same_function(const RatFun2& other) const {
  return numerator * other.denominator.expand() == other.numerator * denominator.expand();
}

RatFun2 RatFun2::at_t_zero() const {
  RatFun2 r;
  r.numerator = BiPoly::from_x(numerator.t_coefficient(0));
  r.denominator.cyclo = denominator.cyclo;
  return r;
}

std::string to_string(const FactoredDenominator& d) {
  std::string out;
  auto append = [&](const std::string& piece) {
    if (!out.empty()) out += "*";
    out += piece;
  };
  for (const auto& [m, e] : d.cyclo) {
    if (e == 0) continue;
    append("Phi" + std::to_string(m) + (e == 1 ? "" : "^" + std::to_string(e)));
  }
  // Repeated t-factors are written once with an exponent.
  for (std::size_t i = 0; i < d.t_factors.size();) {
    std::size_t j = i;
    while (j < d.t_factors.size() && d.t_factors[j] == d.t_factors[i]) ++j;
    const long e = static_cast<long>(j - i);
    append("(" + to_string(t_factor_poly(d.t_factors[i])) + ")" +
           (e == 1 ? "" : "^" + std::to_string(e)));
    i = j;
  }
  return out.empty() ? "1" : out;
}

std::string to_string(const RatFun2& r) {
  return "(" + to_string(r.numerator) + ") / (" + to_string(r.denominator) + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Index of the parenthesis closing the one at `open`, or npos.
std::size_t matching_paren(std::string_view s, std::size_t open) {
  int depth = 0;
  for (std::size_t i = open; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')' && --depth == 0) return i;
  }
  return std::string_view::npos;
}

bool wrapped(std::string_view s) {
  return !s.empty() && s.front() == '(' && matching_paren(s, 0) == s.size() - 1;
}

std::vector<std::string_view> split_top_level(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') {
      if (--depth < 0) throw ParseError("unbalanced ')'");
    }
    if (s[i] == sep && depth == 0) {
      parts.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('");
  parts.push_back(trim(s.substr(start)));
  return parts;
}

int parse_positive(std::string_view s, const char* what) {
  s = trim(s);
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); })) {
    throw ParseError(std::string("expected ") + what + ", got '" + std::string(s) + "'");
  }
  const int v = std::stoi(std::string(s));
  if (v < 1) throw ParseError(std::string(what) + " must be positive");
  return v;
}

void add_polynomial_factor(FactoredDenominator& d, const BiPoly& p, int e, std::string_view text) {
  if (p.degree_t() <= 0) {
    const UniPoly px = p.t_coefficient(0);
    if (px == UniPoly::constant(1, 'x')) return;
    const auto fac = cyclotomic_factorization(px);
    if (!fac) throw ParseError("factor '" + std::string(text) + "' is not a product of cyclotomic polynomials");
    for (const auto& [m, me] : *fac) d.cyclo[m] += me * e;
    return;
  }
  const auto& terms = p.terms();
  if (terms.size() != 2 || p.coeff(0, 0) != 1) {
    throw ParseError("t-factor '" + std::string(text) + "' is not of the form 1 - x^s*t^i");
  }
  const auto& [key, c] = *terms.rbegin();
  if (c != -1 || key.first < 1 || key.second < 1) {
    throw ParseError("t-factor '" + std::string(text) + "' is not of the form 1 - x^s*t^i");
  }
  for (int i = 0; i < e; ++i) d.t_factors.push_back({key.second, key.first});
}

FactoredDenominator parse_factor_list(std::string_view text) {
  FactoredDenominator d;
  text = trim(text);
  if (text == "1") return d;
  for (std::string_view piece : split_top_level(text, '*')) {
    if (piece.empty()) throw ParseError("empty factor");
    std::string_view base = piece;
    int e = 1;
    std::size_t base_end;
    if (piece.starts_with("Phi")) {
      base_end = piece.find('^');
      if (base_end == std::string_view::npos) base_end = piece.size();
    } else if (piece.front() == '(') {
      base_end = matching_paren(piece, 0);
      if (base_end == std::string_view::npos) throw ParseError("unbalanced '('");
      ++base_end;
    } else {
      throw ParseError("unexpected factor '" + std::string(piece) + "'");
    }
    base = trim(piece.substr(0, base_end));
    std::string_view rest = trim(piece.substr(base_end));
    if (!rest.empty()) {
      if (rest.front() != '^') throw ParseError("unexpected text after factor '" + std::string(base) + "'");
      e = parse_positive(rest.substr(1), "exponent");
    }
    if (base.starts_with("Phi")) {
      const int m = parse_positive(base.substr(3), "cyclotomic index");
      d.cyclo[m] += e;
    } else {
      const std::string_view inner = base.substr(1, base.size() - 2);
      add_polynomial_factor(d, parse_bipoly(inner), e, inner);
    }
  }
  std::sort(d.t_factors.begin(), d.t_factors.end());
  return d;
}

}  // namespace

FactoredDenominator parse_denominator(std::string_view text) {
  text = trim(text);
  try {
    return parse_factor_list(text);
  } catch (const ParseError&) {
    if (wrapped(text)) return parse_denominator(text.substr(1, text.size() - 2));
    // A single bare polynomial such as "1 - x".
    FactoredDenominator d;
    try {
      add_polynomial_factor(d, parse_bipoly(text), 1, text);
    } catch (const ParseError&) {
      throw ParseError("cannot parse denominator '" + std::string(text) + "'");
    }
    return d;
  }
}

RatFun2 parse_ratfun2(std::string_view text) {
  const auto parts = split_top_level(trim(text), '/');
  if (parts.size() != 2) throw ParseError("expected '(numerator) / (denominator)'");
  std::string_view num = parts[0];
  if (wrapped(num)) num = num.substr(1, num.size() - 2);
  return RatFun2{parse_bipoly(num), parse_denominator(parts[1])};
}

// ---- denominator ansatz ----

DenominatorAnsatz::DenominatorAnsatz(int k, Which which, AnsatzBounds bounds)
    : k_(k),
      which_(which),
      max_m_(bounds.max_m > 0 ? bounds.max_m : 2 * k + 1),
      max_exponent_(bounds.max_exponent > 0 ? bounds.max_exponent : k),
      recognition_limit_(std::max(bounds.recognition_limit, 1)) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (k % 2 == 0) {
    for (int i = 1; i <= k / 2; ++i) t_factors_.push_back({i, 1});
  } else {
    for (int i = 1; i <= k; i += 2) t_factors_.push_back({i, 2});
  }
}

bool DenominatorAnsatz::contains(const FactoredDenominator& d) const {
  if (d.t_factors != t_factors_) return false;
  for (const auto& [m, e] : d.cyclo) {
    if (e < 0 || m < 1 || m > max_m_ || e > max_exponent_) return false;
  }
  return true;
}

std::vector<FactoredDenominator> DenominatorAnsatz::enumerate(long max_x_degree) const {
  std::vector<FactoredDenominator> out;
  std::map<int, int> current;
  // Depth-first over m = 1..max_m choosing exponents within the degree budget.
  auto rec = [&](auto&& self, int m, long budget) -> void {
    if (m > max_m_) {
      out.push_back(FactoredDenominator{current, t_factors_});
      return;
    }
    const long phi = euler_phi(m);
    for (int e = 0; e <= max_exponent_ && e * phi <= budget; ++e) {
      if (e > 0) current[m] = e;
      self(self, m + 1, budget - e * phi);
    }
    current.erase(m);
  };
  rec(rec, 1, max_x_degree);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    const long da = a.x_degree(), db = b.x_degree();
    if (da != db) return da < db;
    return a.cyclo < b.cyclo;
  });
  return out;
}

DenominatorAnsatz denominator_ansatz(int k, Which which, AnsatzBounds bounds) {
  return DenominatorAnsatz(k, which, bounds);
}

// ---- reconstruction ----

LinearRecurrence berlekamp_massey(std::span<const Rational> seq) {
  std::vector<Rational> conn{1}, prev{1};
  long length = 0, gap = 1;
  Rational last_disc = 1;
  for (std::size_t n = 0; n < seq.size(); ++n) {
    Rational d = seq[n];
    for (long i = 1; i <= length && i < static_cast<long>(conn.size()); ++i) {
      d += conn[static_cast<std::size_t>(i)] * seq[n - static_cast<std::size_t>(i)];
    }
    if (d == 0) {
      ++gap;
      continue;
    }
    const Rational factor = d / last_disc;
    std::vector<Rational> next = conn;
    if (next.size() < prev.size() + static_cast<std::size_t>(gap)) {
      next.resize(prev.size() + static_cast<std::size_t>(gap));
    }
    for (std::size_t i = 0; i < prev.size(); ++i) next[i + static_cast<std::size_t>(gap)] -= factor * prev[i];
    if (2 * length <= static_cast<long>(n)) {
      length = static_cast<long>(n) + 1 - length;
      prev = std::move(conn);
      last_disc = d;
      gap = 1;
    } else {
      ++gap;
    }
    conn = std::move(next);
  }
  return {UniPoly(std::move(conn), 'x'), length};
}

long default_reconstruction_order(int k) { return k <= 6 ? 60 : std::max(100L, 14L * k); }

namespace {

// Coefficients the fit must leave unexplained before it is trusted.
constexpr long kGuard = 8;

}  // namespace

RatFun2 reconstruct_from_series(const DenominatorAnsatz& ansatz, const XSeries& series,
                                long fit_order) {
  if (fit_order > series.order()) {
    throw std::invalid_argument("fit order exceeds the available series");
  }
  const std::string label = std::string(1, which_name(ansatz.which())) + std::to_string(ansatz.k());
  BiPoly tpart = BiPoly::constant(1);
  for (const auto& f : ansatz.t_factors()) tpart = tpart * t_factor_poly(f);
  const XSeries scaled = series.truncated(fit_order).times(tpart);

  UniPoly den = UniPoly::constant(1, 'x');
  for (long c = 0; c <= scaled.t_degree(); ++c) {
    const TruncSeries slice = scaled.t_slice(c);
    if (slice.is_zero()) continue;
    const LinearRecurrence rec = berlekamp_massey(slice.coeffs());
    if (2 * rec.length + kGuard > fit_order + 1) {
      throw ReconstructionFailed(label + ": truncation too small, t^" + std::to_string(c) +
                                 " slice needs recurrence length " + std::to_string(rec.length) +
                                 " from " + std::to_string(fit_order + 1) + " terms");
    }
    den = poly_lcm(den, rec.connection.with_var('x'));
  }

  const auto fac = cyclotomic_factorization(den, ansatz.recognition_limit());
  if (!fac) {
    throw ReconstructionFailed(label + ": minimal denominator " + to_string(den) +
                               " is not a product of cyclotomic polynomials");
  }
  FactoredDenominator fd{*fac, ansatz.t_factors()};
  if (!ansatz.contains(fd)) {
    throw ReconstructionFailed(label + ": ansatz bound too tight, need " + to_string(fd) +
                               " (max m " + std::to_string(ansatz.max_m()) + ", max exponent " +
                               std::to_string(ansatz.max_exponent()) + ")");
  }

  const XSeries num_series = scaled.times_x(den);
  long last = -1;
  for (long a = 0; a <= fit_order; ++a) {
    if (!num_series.coeff(a).is_zero()) last = a;
  }
  if (last + kGuard > fit_order) {
    throw ReconstructionFailed(label + ": truncation too small, numerator reaches x^" +
                               std::to_string(last) + " of " + std::to_string(fit_order));
  }
  RatFun2 result{num_series.truncated(std::max(last, 0L)).to_bipoly(), fd};
  if (!result.numerator.has_integer_coefficients()) {
    throw ReconstructionFailed(label + ": numerator has non-integral coefficients");
  }
  if (!(result.expand(series.order()) == series)) {
    throw ReconstructionFailed(label + ": closed form disagrees with the series within x^" +
                               std::to_string(series.order()));
  }
  return result;
}

RatFun2 reconstruct(int k, Which which, const ReconstructOptions& options) {
  const DenominatorAnsatz ansatz(k, which, options.bounds);
  const long order = options.order > 0 ? options.order : default_reconstruction_order(k);
  const long margin = std::max(options.margin, 0L);
  return reconstruct_from_series(ansatz, series_FG(k, which, order + margin), order);
}

// ---- quasipolynomials ----

long Quasipoly::degree() const {
  long d = -1;
  for (const auto& p : components) d = std::max(d, p.degree());
  return d;
}

Rational Quasipoly::operator()(long n) const {
  if (n < 0) throw std::invalid_argument("quasipolynomial argument must be nonnegative");
  Rational v = components[static_cast<std::size_t>(n % period)](Rational(n));
  if (n < static_cast<long>(corrections.size())) v += corrections[static_cast<std::size_t>(n)];
  return v;
}

namespace {

// [t^c] numerator / prod(1 - t^i x^s), as a polynomial in x.
UniPoly t_slice_numerator(const RatFun2& h, long c) {
  BiPoly w = BiPoly::constant(1);
  for (const auto& f : h.denominator.t_factors) {
    BiPoly geo;
    for (long l = 0; l * f.t_exp <= c; ++l) {
      geo.add_term(static_cast<int>(l * f.x_exp), static_cast<int>(l * f.t_exp), 1);
    }
    BiPoly prod;
    const BiPoly full = w * geo;
    for (const auto& [key, v] : full.terms()) {
      if (key.second <= c) prod.add_term(key.first, key.second, v);
    }
    w = std::move(prod);
  }
  UniPoly p = UniPoly('x');
  for (long l = 0; l <= c; ++l) {
    const UniPoly nl = h.numerator.t_coefficient(static_cast<int>(l));
    if (nl.is_zero()) continue;
    p += nl.with_var('x') * w.t_coefficient(static_cast<int>(c - l)).with_var('x');
  }
  return p;
}

std::optional<Quasipoly> try_fit(int k, long c, Which which, long period,
                                 const std::vector<Rational>& corrections) {
  const long points = k;
  const long held_out = 2;
  const long a_max = (period - 1) + (points + held_out - 1) * period;
  const FixedKCoefficients table(k, a_max * k / 2 + 2);
  auto target = [&](long a) {
    Rational v = which == Which::G ? Rational(table.g(c, a)) : Rational(table.f(c, a));
    if (a < static_cast<long>(corrections.size())) v -= corrections[static_cast<std::size_t>(a)];
    return v;
  };
  Quasipoly q;
  q.period = period;
  q.corrections = corrections;
  for (long r = 0; r < period; ++r) {
    std::vector<Rational> xs, ys;
    for (long l = 0; l < points; ++l) {
      xs.emplace_back(r + l * period);
      ys.push_back(target(r + l * period));
    }
    UniPoly comp = interpolate(xs, ys, 'a');
    for (long l = points; l < points + held_out; ++l) {
      const long a = r + l * period;
      if (comp(Rational(a)) != target(a)) return std::nullopt;
    }
    q.components.push_back(std::move(comp));
  }
  return q;
}

}  // namespace

Quasipoly quasipoly_fit(int k, long c, Which which, const RatFun2& closed_form) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (c < 0) throw std::invalid_argument("c must be nonnegative");
  const UniPoly den = closed_form.denominator.x_part();
  const DivMod qr = divmod(t_slice_numerator(closed_form, c), den);
  std::vector<Rational> corrections(qr.quotient.coeffs().begin(), qr.quotient.coeffs().end());

  long period = closed_form.denominator.period();
  if (k % 2 == 1) period *= 2;
  if (auto q = try_fit(k, c, which, period, corrections)) return *q;
  long wide = 1;
  for (long i = 1; i <= k; ++i) wide = std::lcm(wide, i);
  wide *= 2;
  if (wide != period) {
    if (auto q = try_fit(k, c, which, wide, corrections)) return *q;
  }
  throw FitFailed(std::string(1, which_name(which)) + std::to_string(k) + ", c=" + std::to_string(c) +
                  ": no quasipolynomial of degree < " + std::to_string(k) + " and period " +
                  std::to_string(period) + " or " + std::to_string(wide) + " fits");
}

Quasipoly quasipoly_fit(int k, long c, Which which) {
  return quasipoly_fit(k, c, which, reconstruct(k, which));
}

// ---- fixtures ----

namespace {

std::vector<Integer> parse_integer_list(std::string_view text) {
  std::vector<Integer> out;
  for (std::string_view item : split_top_level(text, ',')) {
    if (item.empty()) continue;
    Integer v;
    if (v.set_str(std::string(item), 10) != 0) throw ParseError("bad integer '" + std::string(item) + "'");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Fixture parse_fixture(std::string_view text) {
  Fixture fx;
  std::istringstream in{std::string(text)};
  std::string line;
  long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view s = trim(line);
    if (s.empty() || s.front() == '#') continue;
    const std::size_t colon = s.find(':');
    if (colon == std::string_view::npos) {
      throw ParseError("fixture line " + std::to_string(lineno) + ": expected 'key: value'");
    }
    const std::string_view key = trim(s.substr(0, colon));
    const std::string_view value = trim(s.substr(colon + 1));
    if (key == "name") {
      fx.name = value;
    } else if (key == "slice") {
      if (value != "t=0") throw ParseError("fixture: unsupported slice '" + std::string(value) + "'");
      fx.t_zero_slice = true;
    } else if (key == "numerator") {
      fx.numerator = parse_bipoly(value);
    } else if (key == "printed_numerator") {
      fx.printed_numerator = parse_bipoly(value);
    } else if (key == "printed_denominator") {
      fx.printed_denominator = parse_denominator(value);
    } else if (key == "denominator") {
      fx.denominator = parse_denominator(value);
    } else if (key == "series") {
      fx.series = parse_integer_list(value);
    } else {
      throw ParseError("fixture line " + std::to_string(lineno) + ": unknown key '" + std::string(key) + "'");
    }
  }
  return fx;
}

Fixture load_fixture(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixture " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_fixture(buf.str());
}

}  // namespace gaussq
