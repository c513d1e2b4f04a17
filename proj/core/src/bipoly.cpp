#include "gaussq/bipoly.hpp"

#include <algorithm>

namespace gaussq {

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int ex, int et) {
  BiPoly p;
  p.add_term(ex, et, c);
  return p;
}

BiPoly BiPoly::from_x(const UniPoly& p) {
  BiPoly r;
  for (long i = 0; i <= p.degree(); ++i) r.add_term(static_cast<int>(i), 0, p.coeff(i));
  return r;
}

BiPoly BiPoly::from_t(const UniPoly& p) {
  BiPoly r;
  for (long i = 0; i <= p.degree(); ++i) r.add_term(0, static_cast<int>(i), p.coeff(i));
  return r;
}

Rational BiPoly::coeff(int ex, int et) const {
  auto it = terms_.find({ex, et});
  return it == terms_.end() ? Rational(0) : it->second;
}

int BiPoly::degree_x() const { return terms_.empty() ? -1 : terms_.rbegin()->first.first; }

int BiPoly::degree_t() const {
  int d = -1;
  for (const auto& [key, c] : terms_) d = std::max(d, key.second);
  return d;
}

bool BiPoly::has_integer_coefficients() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& kv) { return kv.second.get_den() == 1; });
}

UniPoly BiPoly::x_coefficient(int ex) const {
  std::vector<Rational> v;
  for (auto it = terms_.lower_bound({ex, 0}); it != terms_.end() && it->first.first == ex; ++it) {
    const auto et = static_cast<std::size_t>(it->first.second);
    if (v.size() <= et) v.resize(et + 1);
    v[et] = it->second;
  }
  return UniPoly(std::move(v), 't');
}

UniPoly BiPoly::t_coefficient(int et) const {
  std::vector<Rational> v;
  for (const auto& [key, c] : terms_) {
    if (key.second != et) continue;
    const auto ex = static_cast<std::size_t>(key.first);
    if (v.size() <= ex) v.resize(ex + 1);
    v[ex] = c;
  }
  return UniPoly(std::move(v), 'x');
}

void BiPoly::add_term(int ex, int et, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace({ex, et}, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
  for (const auto& [key, c] : o.terms_) add_term(key.first, key.second, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, v] : terms_) v *= c;
  return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
  BiPoly r;
  for (const auto& [ka, ca] : a.terms_) {
    for (const auto& [kb, cb] : b.terms_) {
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    }
  }
  return r;
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& [key, v] : r.terms_) v = -v;
  return r;
}

BiPoly BiPoly::pow(unsigned e) const {
  BiPoly r = constant(1);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

}  // namespace gaussq
