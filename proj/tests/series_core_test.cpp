#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cauchymix/errors.hpp"
#include "cauchymix/polynomial.hpp"
#include "cauchymix/polyseries.hpp"
#include "cauchymix/series.hpp"

using namespace cauchymix;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Series make(std::vector<Rational> c) { return Series(std::move(c)); }

// Deterministic random series/polynomials for property checks.
struct Gen {
  std::mt19937 rng{20240817};
  Rational rational() {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 7);
    return Rational(num(rng), den(rng));
  }
  Series series(int order, bool unit) {
    Series s(order);
    for (int j = 0; j <= order; ++j) s.set(j, rational());
    if (unit && s[0].is_zero()) s.set(0, q(1));
    return s;
  }
  Series delta(int order) {
    Series s = series(order, false);
    s.set(0, q(0));
    if (s[1].is_zero()) s.set(1, q(1));
    return s;
  }
  Polynomial poly(int deg) {
    std::vector<Rational> c(static_cast<size_t>(deg) + 1);
    for (auto& x : c) x = rational();
    return Polynomial(std::move(c));
  }
};

}  // namespace

TEST_CASE("rational basics") {
  CHECK(q(2, 4) == q(1, 2));
  CHECK((q(1, 2) + q(1, 3)) == q(5, 6));
  CHECK(q(-3, -6).str() == "1/2");
  CHECK(q(3, -6).str() == "-1/2");
  CHECK(Rational::parse("7/3") == q(7, 3));
  CHECK(Rational::parse("-4") == q(-4));
  CHECK(Rational::parse("-4/6").str() == "-2/3");
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse(""), Error);
  CHECK_THROWS_AS(Rational::parse("2/-3"), Error);
  CHECK(q(2, 3).pow(-2) == q(9, 4));
  CHECK(int_pow(3, -1) == q(1, 3));
  CHECK(int_pow(2, 3) == q(8));
}

TEST_CASE("series add") {
  Series a = make({q(1), q(1)});
  Series b = make({q(1), q(-1)});
  CHECK((a + b) == make({q(2), q(0)}));
  CHECK((Series::zero(1) + a) == a);
  Series c = make({q(0), q(1, 2)});
  Series d = make({q(0), q(1, 3)});
  CHECK((c + d) == make({q(0), q(5, 6)}));
}

TEST_CASE("series mul") {
  Series a = make({q(1), q(1), q(0)});
  Series b = make({q(1), q(-1), q(0)});
  CHECK((a * b) == make({q(1), q(0), q(-1)}));
  CHECK((a * Series::one(2)) == a);
  // (t - t^2/2 + t^3/3)^2 has t^3 coefficient -1
  Series l = Series::log1p(4);
  CHECK((l * l)[3] == q(-1));
}

TEST_CASE("series div") {
  Series one_plus_t = make({q(1), q(1), q(0), q(0)});
  Series g = Series::one(3).div(one_plus_t);
  CHECK(g == make({q(1), q(-1), q(1), q(-1)}));

  // t / log(1+t) = 1 + t/2 - t^2/12 + ...
  Series tl = Series::t(4).div_cancel(Series::log1p(4));
  CHECK(tl[0] == q(1));
  CHECK(tl[1] == q(1, 2));
  CHECK(tl[2] == q(-1, 12));

  // t/((1+t)log(1+t)) = 1 - t/2 + 5/12 t^2 - 3/8 t^3
  Series den = make({q(1), q(1), q(0), q(0), q(0)}) * Series::log1p(4);
  Series c = Series::t(4).div_cancel(den);
  CHECK(c[0] == q(1));
  CHECK(c[1] == q(-1, 2));
  CHECK(c[2] == q(5, 12));
  CHECK(c[3] == q(-3, 8));

  CHECK_THROWS_AS(Series::one(3).div(Series::t(3)), DivisionByNonUnit);
  CHECK_THROWS_AS(Series::one(3).div_cancel(Series::zero(3)), DivisionByNonUnit);
}

TEST_CASE("series compose") {
  CHECK(Series::exp(6).compose(Series::log1p(6)) ==
        (Series::one(6) + Series::t(6)));
  Series outer = make({q(0), q(0), q(1), q(0), q(0)});  // t^2
  Series inner = make({q(0), q(1), q(1), q(0), q(0)});  // t + t^2
  CHECK(outer.compose(inner) == make({q(0), q(0), q(1), q(2), q(1)}));
  // Lif_1(-log(1+t)) has t coefficient -1/2
  Series lif1 = make({q(1), q(1, 2), q(1, 12)});
  CHECK(lif1.compose(-Series::log1p(2))[1] == q(-1, 2));
  CHECK_THROWS_AS(outer.compose(Series::one(4)), ComposeWithUnit);
}

TEST_CASE("series comp_inverse") {
  Series em1 = Series::exp(6) - Series::one(6);
  CHECK(em1.comp_inverse() == Series::log1p(6));
  CHECK(Series::t(4).comp_inverse() == Series::t(4));
  Series f = make({q(0), q(1), q(1), q(0), q(0)});  // t + t^2
  CHECK(f.comp_inverse() == make({q(0), q(1), q(-1), q(2), q(-5)}));
  CHECK_THROWS_AS(Series::one(3).comp_inverse(), NotDelta);
  CHECK_THROWS_AS(make({q(0), q(0), q(1)}).comp_inverse(), NotDelta);
}

TEST_CASE("series log1p, exp, pow") {
  CHECK(Series::log1p(3) == make({q(0), q(1), q(-1, 2), q(1, 3)}));
  // [t^3](log(1+t))^2 * 3!/2! = S_1(3,2) = -3
  Series l2 = Series::log1p(3).pow(2);
  CHECK(l2[3] * q(6) / q(2) == q(-3));
  CHECK(Series::exp(4).pow(0) == Series::one(4));
  CHECK(make({q(1), q(1)}).pow(-1) == make({q(1), q(-1)}));
  CHECK_THROWS_AS(Series::t(3).pow(-1), DivisionByNonUnit);
}

TEST_CASE("series derivative") {
  Series t2 = make({q(0), q(0), q(1)});
  CHECK(t2.derivative() == make({q(0), q(2)}));
  Series dl = Series::log1p(5).derivative();
  CHECK(dl == make({q(1), q(-1), q(1), q(-1), q(1)}));
}

TEST_CASE("polynomial basics") {
  Polynomial p = Polynomial(std::vector<Rational>{q(0), q(-1), q(1)});  // x^2-x
  CHECK(p.eval(q(1, 2)) == q(-1, 4));
  Polynomial sq = Polynomial(std::vector<Rational>{q(0), q(0), q(1)});
  Polynomial lin = Polynomial(std::vector<Rational>{q(1), q(-1)});
  CHECK(sq.compose(lin) == Polynomial(std::vector<Rational>{q(1), q(-2), q(1)}));
  Polynomial cube = Polynomial(std::vector<Rational>{q(0), q(0), q(0), q(1)});
  CHECK(cube.derivative() == Polynomial(std::vector<Rational>{q(0), q(0), q(3)}));
  CHECK(Polynomial().is_zero());
  CHECK((p - p).is_zero());
  CHECK(Polynomial(std::vector<Rational>{q(1), q(0), q(0)}).degree() == 0);
}

TEST_CASE("polyseries from_exp") {
  // u = t, prefactor = 1: coefficient of t^n is x^n/n!
  PolySeries plain = PolySeries::from_exp(Series::t(5), Series::one(5));
  for (int nn = 0; nn <= 5; ++nn) {
    Polynomial expect(
        [&] {
          std::vector<Rational> c(static_cast<size_t>(nn) + 1);
          c.back() = q(1);
          return c;
        }());
    CHECK(plain.egf_coeff(nn) == expect);
  }
  // u = log(1+t), prefactor = 1: n! coeff of t^n = (x)_n
  PolySeries ff = PolySeries::from_exp(Series::log1p(4), Series::one(4));
  CHECK(ff.egf_coeff(3) ==
        Polynomial(std::vector<Rational>{q(0), q(2), q(-3), q(1)}));
  CHECK_THROWS_AS(PolySeries::from_exp(Series::one(3), Series::one(3)),
                  ComposeWithUnit);
}

TEST_CASE("property: div then mul round-trips") {
  Gen gen;
  for (int iter = 0; iter < 40; ++iter) {
    Series a = gen.series(8, false);
    Series b = gen.series(8, true);
    CHECK((a.div(b) * b) == a);
  }
}

TEST_CASE("property: compositional inverse on both sides") {
  Gen gen;
  for (int iter = 0; iter < 25; ++iter) {
    Series f = gen.delta(8);
    Series fb = f.comp_inverse();
    CHECK(fb.compose(f) == Series::t(8));
    CHECK(f.compose(fb) == Series::t(8));
  }
}

TEST_CASE("property: truncation monotonicity") {
  Gen gen;
  for (int iter = 0; iter < 20; ++iter) {
    Series a = gen.series(9, true);
    Series b = gen.series(9, true);
    Series f = gen.delta(9);
    CHECK((a * b).truncated(5) == (a.truncated(5) * b.truncated(5)));
    CHECK((a + b).truncated(5) == (a.truncated(5) + b.truncated(5)));
    CHECK(a.inverse().truncated(5) == a.truncated(5).inverse());
    CHECK(a.compose(f).truncated(5) == a.truncated(5).compose(f.truncated(5)));
    CHECK(f.comp_inverse().truncated(5) == f.truncated(5).comp_inverse());
  }
}
