#include <gtest/gtest.h>

#include <complex>

#include "gaussq/cyclotomic.hpp"
#include "gaussq/text.hpp"
#include "oracles.hpp"

using namespace gaussq;
using oracle::Gen;

namespace {

UniPoly P(std::initializer_list<long> c, char var = 'q') { return UniPoly::from_ints(c, var); }

}  // namespace

TEST(UniPoly, ProductExamples) {
  EXPECT_EQ(P({1, 1}) * P({1, -1}), P({1, 0, -1}));
  EXPECT_EQ(P({1, 1, 1}) * P({1, 1}), P({1, 2, 2, 1}));
  EXPECT_EQ(P({3, 0, 2}) * P({1}), P({3, 0, 2}));
  EXPECT_TRUE((P({1, 2}) * UniPoly()).is_zero());
}

TEST(UniPoly, TrailingZerosAreTrimmed) {
  const UniPoly p = P({1, 1}) - P({0, 1});
  EXPECT_EQ(p.degree(), 0);
  EXPECT_EQ(P({0, 0, 0}).degree(), -1);
  EXPECT_TRUE((P({2, 5}) - P({2, 5})).is_zero());
}

TEST(UniPoly, ExactDivisionExamples) {
  EXPECT_EQ(poly_exact_div(P({1, 0, -1}), P({1, -1})), P({1, 1}));
  EXPECT_EQ(poly_exact_div(P({1, 0, 0, -1}), P({1, -1})), P({1, 1, 1}));
  try {
    poly_exact_div(P({1, 1}), P({1, -1}));
    FAIL() << "expected NonDivisible";
  } catch (const NonDivisible& e) {
    EXPECT_EQ(e.remainder(), P({2}));
  }
  EXPECT_THROW(poly_exact_div(P({1}), UniPoly()), DivisionByZero);
}

TEST(UniPoly, RingAxiomsProperty) {
  Gen g(101);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly a = g.poly(8), b = g.poly(8), c = g.poly(8);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a + b - b, a);
    if (!a.is_zero() && !b.is_zero()) EXPECT_EQ((a * b).degree(), a.degree() + b.degree());
  }
}

TEST(UniPoly, ExactDivisionRoundTripProperty) {
  Gen g(102);
  for (int trial = 0; trial < 150; ++trial) {
    const UniPoly a = g.poly(20);
    const UniPoly b = g.nonzero_poly(10);
    EXPECT_EQ(poly_exact_div(a * b, b), a);
    const DivMod dm = divmod(a, b);
    EXPECT_EQ(dm.quotient * b + dm.remainder, a);
    EXPECT_LT(dm.remainder.degree(), b.degree() > 0 ? b.degree() : 0);
  }
}

TEST(UniPoly, GcdLcmProperty) {
  Gen g(103);
  for (int trial = 0; trial < 60; ++trial) {
    const UniPoly common = g.nonzero_poly(3);
    const UniPoly a = g.nonzero_poly(4) * common;
    const UniPoly b = g.nonzero_poly(4) * common;
    const UniPoly d = poly_gcd(a, b);
    EXPECT_TRUE(divmod(a, d).remainder.is_zero());
    EXPECT_TRUE(divmod(b, d).remainder.is_zero());
    EXPECT_GE(d.degree(), common.degree());
    const UniPoly l = poly_lcm(a, b);
    EXPECT_EQ((l * d).degree(), a.degree() + b.degree());
  }
}

TEST(UniPoly, EvaluationAndInterpolation) {
  EXPECT_EQ(P({1, 2, 3})(Rational(2)), Rational(17));
  Gen g(104);
  for (int trial = 0; trial < 40; ++trial) {
    const UniPoly p = g.poly(6, 9, 'a');
    std::vector<Rational> xs, ys;
    for (long i = 0; i < 7; ++i) {
      xs.emplace_back(3 * i - 5);
      ys.push_back(p(xs.back()));
    }
    EXPECT_EQ(interpolate(xs, ys, 'a'), p);
  }
}

TEST(UniPoly, SubstitutePowerAndShift) {
  EXPECT_EQ(P({1, -1}).substitute_power(3), P({1, 0, 0, -1}));
  EXPECT_EQ(P({1, 1}).shifted(2), P({0, 0, 1, 1}));
  EXPECT_EQ(P({1, 1}).pow(3), P({1, 3, 3, 1}));
}

TEST(BiPoly, NoZeroTermsStored) {
  BiPoly p = BiPoly::monomial(3, 2, 1);
  p.add_term(2, 1, -3);
  EXPECT_TRUE(p.is_zero());
  EXPECT_TRUE(p.terms().empty());
  Gen g(105);
  for (int trial = 0; trial < 50; ++trial) {
    const BiPoly a = g.bipoly(5, 5, 6);
    for (const auto& [key, c] : (a - a).terms()) ADD_FAILURE() << key.first << "," << key.second << " " << c;
    for (const auto& [key, c] : a.terms()) EXPECT_NE(c, 0);
  }
}

TEST(BiPoly, RingAxiomsProperty) {
  Gen g(106);
  for (int trial = 0; trial < 100; ++trial) {
    const BiPoly a = g.bipoly(4, 4, 5), b = g.bipoly(4, 4, 5), c = g.bipoly(4, 4, 5);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
  }
}

TEST(BiPoly, SlicesAndDegrees) {
  const BiPoly p = parse_bipoly("1 - x*t + 2*x^3*t^2");
  EXPECT_EQ(p.degree_x(), 3);
  EXPECT_EQ(p.degree_t(), 2);
  EXPECT_EQ(p.x_coefficient(1), UniPoly::from_ints({0, -1}, 't'));
  EXPECT_EQ(p.t_coefficient(2), UniPoly::from_ints({0, 0, 0, 2}, 'x'));
}

TEST(Text, CanonicalForms) {
  BiPoly p = BiPoly::constant(1);
  p.add_term(1, 1, -1);
  EXPECT_EQ(to_string(p), "1 - x*t");
  EXPECT_EQ(to_string(BiPoly()), "0");
  EXPECT_EQ(to_string(P({0, 1, -2})), "q - 2*q^2");
  EXPECT_EQ(to_string(oracle::Q(3, 6)), "1/2");
  EXPECT_EQ(to_string(parse_bipoly("x * x * t + 3")), "3 + x^2*t");
  EXPECT_EQ(to_string(TruncSeries::from_poly(P({1, 1}), 3)), "1 + q + O(q^4)");
}

TEST(Text, RejectsMalformedInput) {
  EXPECT_THROW(parse_bipoly("1 + + x"), ParseError);
  EXPECT_THROW(parse_bipoly("x^"), ParseError);
  EXPECT_THROW(parse_bipoly("y"), ParseError);
  EXPECT_THROW(parse_unipoly("q*x", 'q'), ParseError);
}

TEST(Text, RoundTripProperty) {
  Gen g(107);
  for (int trial = 0; trial < 200; ++trial) {
    const BiPoly p = g.bipoly(6, 6, 7, 20);
    EXPECT_EQ(parse_bipoly(to_string(p)), p) << to_string(p);
    const UniPoly u = g.poly(8, 20, 'q');
    EXPECT_EQ(parse_unipoly(to_string(u), 'q'), u) << to_string(u);
  }
}

TEST(Series, ExpandExamples) {
  const TruncSeries ones = RatFun{P({1}), P({1, -1})}.expand(5);
  for (long n = 0; n <= 5; ++n) EXPECT_EQ(ones.coeff(n), 1);
  EXPECT_THROW(ones.coeff(6), InsufficientTruncation);
  EXPECT_EQ(ones.coeff(-1), 0);
  const TruncSeries fib = RatFun{P({1}), P({1, -1, -1})}.expand(8);
  EXPECT_EQ(fib.coeff(8), 34);
  EXPECT_THROW((RatFun{P({1}), P({0, 1})}.expand(3)), NotExpandable);
}

TEST(Series, ExpandTimesDenominatorIsNumeratorProperty) {
  Gen g(108);
  for (int trial = 0; trial < 60; ++trial) {
    const UniPoly num = g.poly(5);
    UniPoly den = g.nonzero_poly(5);
    if (den.coeff(0) == 0) den += UniPoly::constant(1);
    const long order = 20;
    const UniPoly prod = RatFun{num, den}.expand(order).to_poly() * den;
    for (long n = 0; n <= order; ++n) EXPECT_EQ(prod.coeff(n), num.coeff(n)) << n;
  }
}

TEST(Series, XSeriesDivisionInvertsMultiplication) {
  Gen g(109);
  for (int trial = 0; trial < 30; ++trial) {
    const BiPoly a = g.bipoly(6, 3, 6);
    // x^0 part must be a nonzero constant
    BiPoly d = BiPoly::constant(g.rational() + 10);
    for (int i = 0; i < 3; ++i) d.add_term(static_cast<int>(g.integer(1, 3)), static_cast<int>(g.integer(0, 2)), g.rational());
    const XSeries s = XSeries::from_bipoly(a, 12);
    EXPECT_EQ(s.times(d).divided_by(d), s);
  }
}

TEST(Cyclotomic, SmallExamples) {
  EXPECT_EQ(cyclotomic(1), P({1, -1}, 'x'));
  EXPECT_EQ(cyclotomic(2), P({1, 1}, 'x'));
  EXPECT_EQ(cyclotomic(3), P({1, 1, 1}, 'x'));
  EXPECT_EQ(cyclotomic(4), P({1, 0, 1}, 'x'));
  EXPECT_EQ(cyclotomic(6), P({1, -1, 1}, 'x'));
  EXPECT_EQ(cyclotomic(12), P({1, 0, -1, 0, 1}, 'x'));
}

TEST(Cyclotomic, DivisorProductIsOneMinusXPowerProperty) {
  for (int m = 1; m <= 40; ++m) {
    UniPoly prod = UniPoly::constant(1, 'x');
    for (long d : divisors(m)) prod *= cyclotomic(static_cast<int>(d));
    UniPoly expected = UniPoly::constant(1, 'x');
    expected -= UniPoly::monomial(1, static_cast<std::size_t>(m), 'x');
    EXPECT_EQ(prod, expected) << m;
    EXPECT_EQ(cyclotomic(m).degree(), euler_phi(m)) << m;
  }
}

TEST(Cyclotomic, FactorizationRecoversExponents) {
  const UniPoly p = P({1, 0, -1}, 'x') * P({1, 0, 0, -1}, 'x');
  const auto f = cyclotomic_factorization(p);
  ASSERT_TRUE(f);
  EXPECT_EQ(*f, (std::map<int, int>{{1, 2}, {2, 1}, {3, 1}}));
  EXPECT_FALSE(cyclotomic_factorization(P({1, -2}, 'x')));
  EXPECT_FALSE(cyclotomic_factorization(P({2, 2}, 'x')));
}

TEST(CycloNum, FieldAxioms) {
  for (int h : {1, 2, 3, 5, 7, 8, 12}) {
    const CycloNum z = CycloNum::root_power(h, 1);
    EXPECT_EQ(z.pow(h), CycloNum(h)) << h;
    EXPECT_EQ(z.pow(-1) * z, CycloNum(h));
    const CycloNum w = z + CycloNum::rational(h, 3);
    EXPECT_EQ(w.inverse() * w, CycloNum(h));
    EXPECT_EQ(CycloNum(h).trace(), euler_phi(h));
    EXPECT_EQ(z.trace(), mobius(h));
    EXPECT_EQ(z.conjugate(h - 1), z.pow(-1));
  }
}

TEST(CycloSum, RootPowersProperty) {
  for (int h = 1; h <= 12; ++h) {
    for (long e = 0; e < 24; ++e) {
      const RatFun r = cyclo_sum_over_roots(h, [&](const CycloNum& zeta) {
        return CycloRatFun{CycloPoly(zeta.modulus(), {zeta.pow(e)}),
                           CycloPoly::from_rational(zeta.modulus(), UniPoly::constant(1, 'x'))};
      });
      const Rational value = r.num.coeff(0) / r.den.coeff(0);
      EXPECT_TRUE(r.num.is_constant() && r.den.is_constant());
      EXPECT_EQ(value, e % h == 0 ? h : 0) << "h=" << h << " e=" << e;
      const auto numeric = oracle::root_sum(h, [&](std::complex<double> z) { return std::pow(z, e); });
      EXPECT_NEAR(numeric.real(), value.get_d(), 1e-9);
    }
  }
}

TEST(CycloSum, GeometricRootAverage) {
  // sum over zeta of 1 / (1 - zeta x) = h / (1 - x^h)
  for (int h = 1; h <= 9; ++h) {
    const RatFun r = cyclo_sum_over_roots(h, [&](const CycloNum& zeta) {
      return CycloRatFun{CycloPoly::from_rational(zeta.modulus(), UniPoly::constant(1, 'x')),
                         CycloPoly::scaled(P({1, -1}, 'x'), zeta)};
    });
    UniPoly den = UniPoly::constant(1, 'x');
    den -= UniPoly::monomial(1, static_cast<std::size_t>(h), 'x');
    EXPECT_EQ(r.num * den, r.den * UniPoly::constant(h, 'x')) << h;
    const double x = 0.3;
    const auto numeric = oracle::root_sum(h, [&](std::complex<double> z) { return 1.0 / (1.0 - z * x); });
    const auto exact = oracle::eval(r.num, x) / oracle::eval(r.den, x);
    EXPECT_NEAR(numeric.real(), exact.real(), 1e-9);
  }
}

TEST(CycloSum, RandomRationalFunctionsMatchNumericProperty) {
  Gen g(110);
  for (int trial = 0; trial < 40; ++trial) {
    const int h = static_cast<int>(g.integer(1, 6));
    const UniPoly num = g.poly(4, 5, 'x');
    UniPoly den = g.nonzero_poly(3, 5, 'x');
    den = den * den + UniPoly::constant(1, 'x');  // nonzero constant term
    const RatFun r = cyclo_sum_over_roots(h, [&](const CycloNum& zeta) {
      return CycloRatFun{CycloPoly::scaled(num, zeta), CycloPoly::scaled(den, zeta)};
    });
    const std::complex<double> x(0.25, 0);
    const auto numeric = oracle::root_sum(h, [&](std::complex<double> z) {
      return oracle::eval(num, z * x) / oracle::eval(den, z * x);
    });
    const auto exact = oracle::eval(r.num, x) / oracle::eval(r.den, x);
    EXPECT_NEAR(numeric.real(), exact.real(), 1e-7 * (1 + std::abs(exact)));
    EXPECT_NEAR(numeric.imag(), 0.0, 1e-7 * (1 + std::abs(exact)));
  }
}
