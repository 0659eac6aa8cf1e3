#include <doctest.h>

#include <functional>
#include <numeric>

#include "chern3/ci.hpp"
#include "chern3/error.hpp"
#include "support.hpp"

using namespace chern3;

namespace {

TruncSeries S(long a, long b, long c, long d) { return {{Rat(a), Rat(b), Rat(c), Rat(d)}}; }

// Integer oracle: coefficients of (1+H)^(n+1) up to H^3.
std::array<long, 4> binomial_row(int n1) {
  std::array<long, 4> out{1, 0, 0, 0};
  for (int k = 1; k < 4; ++k) out[k] = out[k - 1] * (n1 - k + 1) / k;
  return out;
}

std::vector<CIPreset> all_presets(int max_ambient) {
  std::vector<CIPreset> out;
  std::vector<int> cur;
  // nonincreasing degree tuples of length n-3 with entries in [1, 6]
  std::function<void(int, int, int)> rec = [&](int n, int left, int max_d) {
    if (left == 0) {
      out.push_back(CIPreset::make(n, cur));
      return;
    }
    for (int d = 1; d <= max_d; ++d) {
      cur.push_back(d);
      rec(n, left - 1, d);
      cur.pop_back();
    }
  };
  for (int n = 3; n <= max_ambient; ++n) rec(n, n - 3, 6);
  return out;
}

}  // namespace

TEST_CASE("series arithmetic") {
  CHECK(series_mul(S(1, 1, 0, 0), S(1, 1, 0, 0)) == S(1, 2, 1, 0));
  CHECK(series_mul(S(1, 2, 0, 0), S(1, -2, 4, -8)) == S(1, 0, 0, 0));
  const TruncSeries a = S(3, -1, 7, 2);
  CHECK(series_mul(a, TruncSeries::one()) == a);

  CHECK(series_inv(S(1, 5, 6, 0)) == S(1, -5, 19, -65));
  CHECK(series_inv(TruncSeries::one()) == TruncSeries::one());
  CHECK_THROWS_AS(series_inv(S(0, 1, 0, 0)), Error);
}

TEST_CASE("series inverse on random units") {
  testing::Gen g(17);
  for (int i = 0; i < 100; ++i) {
    TruncSeries a{{g.rat(), g.rat(), g.rat(), g.rat()}};
    if (a.c[0].is_zero()) a.c[0] = Rat(1, 7);
    CHECK(series_mul(a, series_inv(a)) == TruncSeries::one());
  }
}

TEST_CASE("tangent Chern classes of complete intersections") {
  CHECK(tangent_chern(CIPreset::make(4, {2})) == S(1, 3, 4, 2));
  CHECK(tangent_chern(CIPreset::make(5, {2, 3})) == S(1, 1, 4, -6));
  CHECK(tangent_chern(CIPreset::make(4, {5})) == S(1, 0, 10, -40));
  CHECK(tangent_chern(CIPreset::make(3, {})) == S(1, 4, 6, 4));
  // quintic: topological Euler characteristic c3 * deg = -200
  CHECK(tangent_chern(CIPreset::make(4, {5})).c[3] * Rat(5) == Rat(-200));
}

TEST_CASE("tangent_chern times the normal bundle recovers (1+H)^(n+1)") {
  for (const auto& p : all_presets(7)) {
    CAPTURE(p.name());
    TruncSeries prod = tangent_chern(p);
    for (int d : p.degrees) prod = series_mul(prod, S(1, d, 0, 0));
    const auto row = binomial_row(p.ambient + 1);
    CHECK(prod == S(row[0], row[1], row[2], row[3]));
  }
}

TEST_CASE("build_ci") {
  CHECK(build_ci(CIPreset::make(4, {2})) == testing::quadric());
  CHECK(build_ci(CIPreset::make(5, {2, 3})) == testing::ci23());
  CHECK(build_ci(CIPreset::make(3, {})) == testing::p3());
  CHECK(build_ci(CIPreset::make(4, {5})) == testing::quintic());
  // a redundant hyperplane changes nothing
  CHECK(build_ci(CIPreset::make(4, {1})) == testing::p3());
}

TEST_CASE("Threefold fields reproduce c1 and c2 of the tangent bundle") {
  for (const auto& p : all_presets(7)) {
    const Threefold X = build_ci(p);
    const TruncSeries c = tangent_chern(p);
    CHECK(X.c1X()[0] == c.c[1]);
    CHECK(X.c2X()[0] / X.form(0, 0, 0) == c.c[2]);
  }
}

TEST_CASE("Todd genus of Fano and Calabi-Yau complete intersections") {
  int fano = 0, cy = 0;
  for (const auto& p : all_presets(7)) {
    CAPTURE(p.name());
    const Threefold X = build_ci(p);
    const int sum = std::accumulate(p.degrees.begin(), p.degrees.end(), 0);
    if (sum <= p.ambient) {
      ++fano;
      CHECK(classify(p) == CanonicalType::Fano);
      CHECK(pair_div_curve(X, X.c1X(), X.c2X()).value == Rat(24));
      CHECK(todd_genus(X) == Rat(1));
    } else if (sum == p.ambient + 1) {
      ++cy;
      CHECK(classify(p) == CanonicalType::CalabiYau);
      CHECK(X.c1X()[0] == Rat(0));
      CHECK(todd_genus(X) == Rat(0));
    } else {
      CHECK(classify(p) == CanonicalType::GeneralType);
    }
  }
  CHECK(fano > 10);
  CHECK(cy > 4);
}

TEST_CASE("classification examples") {
  CHECK(classify(CIPreset::make(4, {2})) == CanonicalType::Fano);
  CHECK(classify(CIPreset::make(4, {5})) == CanonicalType::CalabiYau);
  CHECK(classify(CIPreset::make(6, {2, 2, 3})) == CanonicalType::CalabiYau);
  CHECK(classify(CIPreset::make(6, {2, 3, 3})) == CanonicalType::GeneralType);
}

TEST_CASE("preset names") {
  CHECK(CIPreset::parse("[2,3] in P5") == CIPreset::make(5, {2, 3}));
  CHECK(CIPreset::parse(" [ 2 , 2 , 2 ] in P6 ") == CIPreset::make(6, {2, 2, 2}));
  CHECK(CIPreset::parse("[] in P3") == CIPreset::make(3, {}));
  CHECK(CIPreset::make(5, {2, 3}).name() == "[2,3] in P5");
  for (const char* bad : {"[2,3] in P4", "[2 3] in P5", "2 in P4", "[2] in", "[0] in P4", "[2] in Q4", "[2] in P4 x"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(CIPreset::parse(bad), Error);
  }
  CHECK_THROWS_AS(CIPreset::make(2, {}), Error);
}

TEST_CASE("redundant linear equations are flagged") {
  const CIPreset p = CIPreset::make(5, {1, 2});
  CHECK(p.reduced() == CIPreset::make(4, {2}));
  REQUIRE(preset_warnings(p).size() == 1);
  CHECK(preset_warnings(p)[0].find("[2] in P4") != std::string::npos);
  CHECK(preset_warnings(CIPreset::make(4, {2})).empty());
}
