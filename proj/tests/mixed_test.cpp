#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "cauchymix/errors.hpp"
#include "cauchymix/mixed.hpp"
#include "cauchymix/sequences.hpp"

using namespace cauchymix;
using namespace cauchymix::mixed;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

constexpr int kNMax = 6;
const std::vector<int> kRs{0, 1, 2};
const std::vector<int> kKs{-2, -1, 0, 1, 2};

}  // namespace

TEST_CASE("oracle small values") {
  for (int r : {0, 1, 2, 5}) {
    for (int k : {-3, -1, 0, 1, 2}) {
      CHECK(mixed_oracle(0, r, k) == poly({q(1)}));
      // A~_1^{(r,k)} = -r/2 - 2^{-k}
      CHECK(mixed_number(1, r, k) == q(-r, 2) - int_pow(2, -k));
    }
  }
  // frozen regression polynomials
  CHECK(mixed_oracle(2, 1, 1) == poly({q(13, 6), q(-3), q(1)}));
  CHECK(mixed_oracle(3, 2, -1) == poly({q(-52), q(89, 2), q(-12), q(1)}));
  CHECK(mixed_oracle(2, 0, 2) == poly({q(13, 36), q(-3, 2), q(1)}));
  // degree n, leading coefficient 1
  for (int n = 0; n <= 8; ++n) {
    Polynomial p = mixed_oracle(n, 2, 1);
    CHECK(p.degree() == n);
    CHECK(p.coeff(n) == q(1));
  }
  CHECK_THROWS_AS(mixed_oracle(-1, 0, 0), ParamDomain);
}

TEST_CASE("r = 0 specializes to poly-Cauchy of the second kind") {
  for (int k : kKs)
    for (int n = 0; n <= kNMax; ++n)
      CHECK(mixed_oracle(n, 0, k) == seq::poly_cauchy2_poly(n, k));
}

TEST_CASE("prefactor with the Lif factor removed gives Cauchy numbers") {
  for (int r = 0; r <= 3; ++r) {
    Series pref = seq::cauchy2_prefactor(r, 8);
    for (int n = 0; n <= 8; ++n)
      CHECK(seq::factorial(n) * pref[n] == seq::cauchy2_number(n, r));
  }
}

TEST_CASE("thm1 closed form equals oracle") {
  for (int n = 0; n <= kNMax; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(thm1_closed_form(n, r, k) == mixed_oracle(n, r, k));
}

TEST_CASE("thm2 expansion equals oracle") {
  for (int n = 0; n <= kNMax; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(thm2_expansion(n, r, k) == mixed_oracle(n, r, k));
}

TEST_CASE("thm3 expansion equals oracle") {
  for (int n = 0; n <= kNMax; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(thm3_expansion(n, r, k) == mixed_oracle(n, r, k));
}

TEST_CASE("cor4 expansion equals oracle and rejects r = 0") {
  for (int n = 0; n <= 5; ++n)
    for (int r : {1, 2, 3})
      for (int k : kKs)
        CHECK(cor4_expansion(n, r, k) == mixed_oracle(n, r, k));
  CHECK_THROWS_AS(cor4_expansion(3, 0, 1), RequiresPositiveR);
}

TEST_CASE("thm5 recurrence equals oracle") {
  for (int n = 1; n <= kNMax; ++n)
    for (int r : {1, 2, 3})
      for (int k : kKs) {
        Polynomial rhs = thm5_recurrence(n, r, k);
        CHECK(rhs == mixed_oracle(n, r, k));
        CHECK(rhs.degree() == n);
      }
  CHECK_THROWS_AS(thm5_recurrence(0, 1, 1), ParamDomain);
  CHECK_THROWS_AS(thm5_recurrence(2, 0, 1), ParamDomain);
}

TEST_CASE("eq35 recurrence equals oracle at the next index") {
  for (int n = 0; n <= kNMax - 1; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(eq35_recurrence(n, r, k) == mixed_oracle(n + 1, r, k));
}

TEST_CASE("thm6 identity") {
  for (int n = 2; n <= kNMax; ++n)
    for (int m = 1; m <= n - 1; ++m)
      for (int r : {1, 2})
        for (int k : {-1, 0, 1, 2}) {
          auto rep = thm6_identity(n, m, r, k);
          CHECK(rep.equal);
        }
  // boundary m = n-1
  CHECK(thm6_identity(5, 4, 2, -1).equal);
  CHECK_THROWS_AS(thm6_identity(3, 3, 1, 1), ParamDomain);
  CHECK_THROWS_AS(thm6_identity(3, 0, 1, 1), ParamDomain);
}

TEST_CASE("eq49 derivative formula") {
  for (int n = 1; n <= kNMax; ++n)
    for (int r : kRs)
      for (int k : kKs) {
        auto rep = eq49_derivative(n, r, k);
        CHECK(rep.equal);
      }
  CHECK(mixed_oracle(5, 1, 1).derivative().degree() == 4);
  CHECK_THROWS_AS(eq49_derivative(0, 1, 1), ParamDomain);
}

TEST_CASE("thm7 bernoulli basis") {
  for (int s : {1, 2, 3})
    for (int n = 0; n <= 5; ++n)
      for (int r : {1, 2})
        for (int k : {-1, 0, 2})
          CHECK(thm7_bernoulli_basis(n, r, k, s) == mixed_oracle(n, r, k));
  CHECK_THROWS_AS(thm7_bernoulli_basis(2, 0, 1, 1), ParamDomain);
}

TEST_CASE("thm8 frobenius-euler basis") {
  for (const auto& lambda : {q(-1), q(2), q(1, 2)})
    for (int s : {1, 2})
      for (int n = 0; n <= 5; ++n)
        for (int r : {1, 2})
          for (int k : {-1, 1})
            CHECK(thm8_frobenius_basis(n, r, k, s, lambda) ==
                  mixed_oracle(n, r, k));
  CHECK_THROWS_AS(thm8_frobenius_basis(2, 1, 1, 1, q(1)), LambdaUnit);
  CHECK_THROWS_AS(thm8_frobenius_basis(2, 1, 1, 0, q(2)), ParamDomain);
}

TEST_CASE("eq56 falling factorial basis") {
  for (int n = 0; n <= 8; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(eq56_falling_basis(n, r, k) == mixed_oracle(n, r, k));
  // n=1: A~_1 + x
  Polynomial e = eq56_falling_basis(1, 1, 1);
  CHECK(e == poly({mixed_number(1, 1, 1), q(1)}));
}

TEST_CASE("eq34 addition formula") {
  for (const auto& y : {q(0), q(1), q(-2), q(1, 2)})
    for (int n = 0; n <= kNMax; ++n)
      for (int r : kRs)
        for (int k : {-1, 0, 1})
          CHECK(eq34_addition(n, r, k, y).equal);
}

TEST_CASE("eq24 operator maps the sequence to falling factorials") {
  for (int n = 0; n <= kNMax; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(eq24_operator_identity(n, r, k).equal);
}

TEST_CASE("eq40 lif derivative identity") {
  for (int k : {-2, -1, 0, 1, 2, 3}) CHECK(eq40_lif_derivative(k, 8).equal);
  CHECK_THROWS_AS(eq40_lif_derivative(1, 1), ParamDomain);
}

TEST_CASE("mixed pair membership: biorthogonality, delta action, recurrence") {
  for (int r : {0, 1, 2})
    for (int k : {-1, 0, 2}) {
      ShefferPair pair = mixed_pair(r, k, 8);
      auto polys = sheffer_polys(pair, 6);
      for (int n = 0; n <= 6; ++n)
        CHECK(polys[static_cast<size_t>(n)] == mixed_oracle(n, r, k));
      CHECK(delta_action_check(pair, polys).ok);
      Series fpow = Series::one(8);
      for (int kk = 0; kk <= 6; ++kk) {
        for (int n = 0; n <= 6; ++n)
          CHECK(pairing(pair.g() * fpow, polys[static_cast<size_t>(n)]) ==
                (n == kk ? seq::factorial(n) : q(0)));
        fpow = fpow * pair.f();
      }
      for (int n = 0; n <= 5; ++n)
        CHECK(sheffer_recurrence_next(pair, mixed_oracle(n, r, k)) ==
              mixed_oracle(n + 1, r, k));
    }
}

TEST_CASE("conjugate expansion equals the oracle") {
  for (int n = 0; n <= kNMax; ++n)
    for (int r : kRs)
      for (int k : kKs)
        CHECK(conjugate_expansion(mixed_pair(r, k, n + 1), n) ==
              mixed_oracle(n, r, k));
}

TEST_CASE("report serialization helpers") {
  CHECK(poly_str(poly({q(1), q(-1, 2)})) == "[\"1\",\"-1/2\"]");
  CHECK(poly_str(Polynomial()) == "[]");
  Series s(1);
  s.set(1, q(2, 3));
  CHECK(series_str(s) == "[\"0\",\"2/3\"]");
}
