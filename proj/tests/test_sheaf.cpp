#include <doctest.h>

#include "chern3/ci.hpp"
#include "chern3/error.hpp"
#include "chern3/sheaf.hpp"
#include "chern3/splitting.hpp"
#include "support.hpp"

using namespace chern3;
using testing::curve1;
using testing::div1;
using testing::sheaf1;

namespace {

// Generalised binomial coefficient C(x, n) for integer x (possibly negative).
Rat binom(long x, int n) {
  Rat out(1);
  for (int i = 0; i < n; ++i) out = out * Rat(x - i) / Rat(i + 1);
  return out;
}

// chi(O_X(a)) for a complete intersection from the Koszul resolution.
Rat koszul_chi(const CIPreset& p, long a) {
  Rat total(0);
  const std::size_t m = p.degrees.size();
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    long shift = 0;
    int sign = 1;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) {
        shift += p.degrees[i];
        sign = -sign;
      }
    // chi(O_P^n(b)) = C(b + n, n)
    total = total + Rat(sign) * binom(a - shift + p.ambient, p.ambient);
  }
  return total;
}

}  // namespace

TEST_CASE("Chern character") {
  const Threefold X = testing::quadric();
  const ChernData F = sheaf1(2, 1, 1);
  const CharacterData ch = to_character(X, F);
  CHECK(ch.ch0 == Rat(2));
  CHECK(ch.ch1 == div1(1));
  CHECK(ch.ch2 == curve1(0));
  CHECK(ch.ch3.value == Rat(-1, 6));
  CHECK(from_character(X, ch) == F);

  CharacterData bad = ch;
  bad.ch0 = Rat(3, 2);
  CHECK_THROWS_AS(from_character(X, bad), Error);
  bad.ch0 = Rat(0);
  CHECK_THROWS_AS(from_character(X, bad), Error);
}

TEST_CASE("character round trip on random threefolds") {
  testing::Gen g(3);
  for (int i = 0; i < 50; ++i) {
    const Threefold X = g.threefold(1 + i % 3);
    const ChernData F = g.sheaf(X, g.integer(1, 5));
    CHECK(from_character(X, to_character(X, F)) == F);
  }
}

TEST_CASE("tensor, dual and twist examples") {
  const Threefold X = testing::quadric();
  const ChernData F = sheaf1(2, 1, 1);
  CHECK(tensor(X, F, ChernData::trivial(X)) == F);
  const ChernData FF = tensor(X, F, F);
  CHECK(FF.rank == 4);
  CHECK(FF.c1 == div1(4));

  CHECK(dual(X, sheaf1(2, 1, 1, 3)) == sheaf1(2, -1, 1, -3));
  CHECK(twist(X, F, div1(1)) == sheaf1(2, 3, 5));
  CHECK(twist(X, ChernData::line(div1(2)), div1(-2)) == ChernData::trivial(X));

  CHECK(discriminant(X, F) == curve1(2));
  CHECK(discriminant(testing::ci23(), sheaf1(2, 1, 3)) == curve1(6));
}

TEST_CASE("tensor is commutative, associative and unital") {
  testing::Gen g(11);
  for (int i = 0; i < 40; ++i) {
    const Threefold X = g.threefold(1 + i % 3);
    const ChernData A = g.sheaf(X, g.integer(1, 3));
    const ChernData B = g.sheaf(X, g.integer(1, 3));
    const ChernData C = g.sheaf(X, g.integer(1, 3));
    CHECK(tensor(X, A, B) == tensor(X, B, A));
    CHECK(tensor(X, tensor(X, A, B), C) == tensor(X, A, tensor(X, B, C)));
    CHECK(tensor(X, A, ChernData::trivial(X)) == A);
    CHECK(dual(X, dual(X, A)) == A);
  }
}

TEST_CASE("discriminant is c2 of the endomorphism sheaf and twist invariant") {
  testing::Gen g(5);
  for (int i = 0; i < 200; ++i) {
    const Threefold X = g.threefold(1 + i % 3);
    const ChernData F = g.sheaf(X, g.integer(1, 4));
    const DivClass L(g.rats(X.rank()));
    CHECK(discriminant(X, twist(X, F, L)) == discriminant(X, F));
    CHECK(tensor(X, F, dual(X, F)).c2 == discriminant(X, F));
  }
}

TEST_CASE("tensor agrees with the corrected closed form on a Picard-rank-one model") {
  // With every class a multiple of a power of H, c_i(F) = x_i H^i and the
  // scalar closed form acts on the coefficients x_i.
  const Threefold X = testing::quadric();
  const Rat deg = X.form(0, 0, 0);
  auto scalar = [&](const ChernData& F) {
    return ScalarChern{F.c1[0], F.c2[0] / deg, F.c3.value / deg};
  };
  testing::Gen g(23);
  for (int i = 0; i < 50; ++i) {
    const ChernData E = g.sheaf(X, g.integer(1, 4));
    const ChernData F = g.sheaf(X, g.integer(1, 4));
    const ScalarChern expect = tensor_closed_form_corrected(E.rank, F.rank, scalar(E), scalar(F));
    CHECK(scalar(tensor(X, E, F)) == expect);
    if (E.rank <= 2 && F.rank <= 2) CHECK(tensor_closed_form(E.rank, F.rank, scalar(E), scalar(F)) == expect);
  }
}

TEST_CASE("Riemann-Roch examples") {
  CHECK(euler_char(testing::p3(), ChernData::line(div1(1))) == Rat(4));
  CHECK(euler_char(testing::p3(), ChernData::trivial(testing::p3())) == Rat(1));
  CHECK(euler_char(testing::quintic(), ChernData::trivial(testing::quintic())) == Rat(0));

  const RRTerms t = euler_char_terms(testing::quadric(), sheaf1(2, 1, 1));
  const std::array<Rat, 8> hand{Rat(1, 3), Rat(-1, 2), Rat(-3, 2), Rat(3, 2),
                                Rat(3, 2), Rat(2, 3),  Rat(2),     Rat(0)};
  CHECK(t.terms == hand);
  CHECK(t.total() == Rat(4));
  CHECK(RRTerms::labels()[0] == "c1(F)^3/6");
}

TEST_CASE("Riemann-Roch matches the Koszul count on line bundles") {
  for (const CIPreset& p : {CIPreset::make(3, {}), CIPreset::make(4, {2}), CIPreset::make(4, {3}),
                            CIPreset::make(5, {2, 3}), CIPreset::make(4, {5}), CIPreset::make(6, {2, 2, 2}),
                            CIPreset::make(6, {2, 3, 3})}) {
    const Threefold X = build_ci(p);
    for (long a = -6; a <= 6; ++a) {
      CAPTURE(p.name());
      CAPTURE(a);
      CHECK(euler_char(X, ChernData::line(div1(a))) == koszul_chi(p, a));
    }
  }
}

TEST_CASE("chi(F) + chi(F*) has no odd terms") {
  testing::Gen g(29);
  for (int i = 0; i < 200; ++i) {
    const Threefold X = g.threefold(1 + i % 3);
    const ChernData F = g.sheaf(X, g.integer(1, 4));
    const Rat expect = -pair_div_curve(X, X.c1X(), F.c2).value +
                       Rat(1, 2) * triple(X, X.c1X(), F.c1, F.c1).value +
                       Rat(F.rank, 12) * pair_div_curve(X, X.c1X(), X.c2X()).value;
    CHECK(euler_char(X, F) + euler_char(X, dual(X, F)) == expect);
  }
}

TEST_CASE("slope") {
  const Threefold X = testing::quadric();
  CHECK(slope(X, sheaf1(2, 1, 1), div1(1)) == Rat(1, 2));
  CHECK(slope(X, sheaf1(2, 0, 1), div1(3)) == Rat(0));
  CHECK_THROWS_AS(slope(X, sheaf1(2, 1, 1), div1(0)), Error);
  // degree one in L^-1
  CHECK(slope(X, sheaf1(3, 2, 1), div1(5)) == slope(X, sheaf1(3, 2, 1), div1(1)) / Rat(5));
}

TEST_CASE("validation") {
  const Threefold X = testing::quadric();
  ChernData F{2, DivClass({Rat(1), Rat(0)}), curve1(0), {Rat(0)}};
  CHECK_THROWS_AS(validate(X, F), Error);
  CHECK_THROWS_AS(validate(X, sheaf1(0, 1, 1)), Error);
  CHECK_NOTHROW(validate(X, sheaf1(2, 1, 1)));
}
