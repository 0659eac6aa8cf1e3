// Acceptance gate: one PASS/FAIL line per criterion. All comparisons are exact
// rational equalities; the tolerance column is printed to make that explicit.
#include <CLI11.hpp>

#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "chern3/ci.hpp"
#include "chern3/dzero.hpp"
#include "chern3/moduli.hpp"
#include "chern3/splitting.hpp"

using namespace chern3;

namespace {

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

DivClass div1(long a) { return DivClass({Rat(a)}); }
CurveClass curve1(long a) { return CurveClass({Rat(a)}); }
ChernData sheaf1(long r, long c1, long c2, long c3) { return {r, div1(c1), curve1(c2), {Rat(c3)}}; }

class Random {
 public:
  explicit Random(std::uint64_t seed) : rng_(seed) {}
  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  Rat rat() { return Rat(integer(-20, 20), integer(1, 12)); }
  std::vector<Rat> rats(std::size_t n) {
    std::vector<Rat> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rat());
    return v;
  }
  Threefold threefold(bool trivial_canonical) {
    const std::size_t m = static_cast<std::size_t>(integer(1, 3));
    std::vector<std::vector<std::vector<Rat>>> T(m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) {
          const Rat v(integer(-9, 9));
          for (auto [a, b, c] : {std::array{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}})
            T[a][b][c] = v;
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("D" + std::to_string(i));
    return Threefold::make(names, T, trivial_canonical ? DivClass::zero(m) : DivClass(rats(m)),
                           CurveClass(rats(m)));
  }
  ChernData sheaf(const Threefold& X, long rank) {
    return {rank, DivClass(rats(X.rank())), CurveClass(rats(X.rank())), {rat()}};
  }

 private:
  std::mt19937_64 rng_;
};

std::vector<CIPreset> fano_presets() {
  std::vector<CIPreset> out;
  std::vector<int> cur;
  std::function<void(int, int, int)> rec = [&](int n, int left, int max_d) {
    if (left == 0) {
      if (std::accumulate(cur.begin(), cur.end(), 0) <= n) out.push_back(CIPreset::make(n, cur));
      return;
    }
    for (int d = 2; d <= max_d; ++d) {
      cur.push_back(d);
      rec(n, left - 1, d);
      cur.pop_back();
    }
  };
  for (int n = 3; n <= 8; ++n) rec(n, n - 3, n);
  return out;
}

Outcome criterion1() {
  Outcome o;
  const PaperClaimsReport rep = check_paper_claims();
  o.require(rep.entries.size() == 7, "seven cases");
  for (const ClaimEntry& e : rep.entries) {
    const DZeroReport& r = e.report;
    o.require(e.ok, e.preset + ": " + e.note);
    o.require(r.k.lo == -50 && r.k.hi == 50 && r.c.lo == -50 && r.c.hi == 50, e.preset + " range");
    o.require(r.enumeration_agrees, e.preset + " enumeration");
    if (e.expect_solvable) {
      o.require(r.status == DZeroStatus::Solvable && !r.witnesses.empty(), e.preset + " solvable");
      o.require(e.expected_relation && r.relation == *e.expected_relation, e.preset + " relation");
    } else {
      o.require(r.status == DZeroStatus::Obstructed && r.obstruction.has_value(), e.preset + " certificate");
      o.require(r.enumerated_zeros == 0, e.preset + " enumeration found zeros");
    }
    o.detail << " " << e.preset << "=" << to_string(r.status);
  }
  const auto relation_of = [&](const std::string& preset) {
    for (const auto& e : rep.entries)
      if (e.preset == preset) return e.report.relation.str();
    return std::string("missing");
  };
  o.require(relation_of("[2] in P4") == "2c = k^2 + 1", "quadric relation string");
  o.require(relation_of("[2,3] in P5") == "2c = 3(k^2 + 1)", "(2,3) relation string");
  return o;
}

Outcome criterion2() {
  Outcome o;
  const Threefold Q = build_ci(CIPreset::make(4, {2}));
  const Threefold Y = build_ci(CIPreset::make(5, {2, 3}));
  const Rat dq = expected_dim(Q, sheaf1(2, 1, 1, 0));
  const Rat dy = expected_dim(Y, sheaf1(2, 1, 3, 0));
  const Rat gq = serre_genus(Q, div1(1), curve1(1), Rat(0)).genus;
  const Rat gy = serre_genus(Y, div1(1), curve1(3), Rat(0)).genus;
  o.require(dq == Rat(0), "quadric D = " + dq.str());
  o.require(dy == Rat(0), "(2,3) D = " + dy.str());
  o.require(gq == Rat(0), "line genus " + gq.str());
  o.require(gy == Rat(1), "plane cubic genus " + gy.str());
  o.detail << " D(quadric;1,1)=" << dq << " D((2,3);1,3)=" << dy << " genus=" << gq << "," << gy;
  return o;
}

Outcome criterion3() {
  Outcome o;
  const TensorVerifyReport rep = verify_tensor_formulas(4, 100, 42, tensor_closed_form);
  long failures = 0;
  for (const PairResult& p : rep.pairs)
    if (!p.passed) {
      ++failures;
      o.detail << " fails at (" << p.r1 << "," << p.r2 << ")";
      if (p.counterexample && failures == 1) {
        const auto& ce = *p.counterexample;
        auto list = [](const std::vector<Rat>& v) {
          std::string s;
          for (const Rat& x : v) s += (s.empty() ? "" : ",") + x.str();
          return "{" + s + "}";
        };
        o.detail << " (roots E=" << list(ce.spec.rootsE) << " F=" << list(ce.spec.rootsF) << ": c3 " << ce.from_roots.c3
                 << " from roots vs " << ce.closed_form.c3 << " closed form)";
      }
    }
  o.require(rep.pairs.size() == 16, "16 rank pairs");
  o.require(failures == 0, std::to_string(failures) + " failing rank pairs");
  const bool corrected = verify_tensor_formulas(4, 100, 42, tensor_closed_form_corrected).all_passed();
  o.detail << " (note: with c3 coefficients r2, r1 the closed form "
           << (corrected ? "passes" : "also fails") << " the same run)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto presets = fano_presets();
  for (const CIPreset& p : presets) {
    const Threefold X = build_ci(p);
    o.require(pair_div_curve(X, X.c1X(), X.c2X()).value == Rat(24), p.name() + " c1c2");
    o.require(euler_char(X, ChernData::trivial(X)) == Rat(1), p.name() + " chi(O)");
  }
  const Threefold quintic = build_ci(CIPreset::make(4, {5}));
  o.require(euler_char(quintic, ChernData::trivial(quintic)) == Rat(0), "quintic chi(O)");
  const Threefold P3 = build_ci(CIPreset::make(3, {}));
  o.require(euler_char(P3, ChernData::line(div1(1))) == Rat(4), "chi(O_P3(1))");
  o.detail << " " << presets.size() << " Fano presets, quintic, P3 O(1)";
  return o;
}

Outcome criterion5() {
  Outcome o;
  Random g(20240501);
  long n = 0;
  for (; n < 250; ++n) {
    const Threefold X = g.threefold(false);
    const ChernData F = g.sheaf(X, g.integer(1, 5));
    const DivClass L(g.rats(X.rank()));
    o.require(discriminant(X, twist(X, F, L)) == discriminant(X, F), "Delta twist invariance");
    const Rat lhs = euler_char(X, F) + euler_char(X, dual(X, F));
    const Rat rhs = -pair_div_curve(X, X.c1X(), F.c2).value +
                    Rat(1, 2) * triple(X, X.c1X(), F.c1, F.c1).value +
                    Rat(F.rank, 12) * pair_div_curve(X, X.c1X(), X.c2X()).value;
    o.require(lhs == rhs, "chi(F) + chi(F*)");
    if (!o.pass) break;
  }
  o.detail << " " << n << " random inputs per identity";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Random g(20240502);
  long n = 0;
  for (; n < 100; ++n) {
    const Threefold X = g.threefold(true);
    const ChernData F = g.sheaf(X, 2);
    o.require(ext_euler(X, F) == Rat(0), "ext_euler");
    o.require(expected_dim(X, F) == Rat(0), "expected_dim");
    if (!o.pass) break;
  }
  o.detail << " " << n << " random rank-2 inputs";
  return o;
}

Outcome criterion7() {
  Outcome o;
  o.require(ext1_ledger({2, 3, std::nullopt, true}) == 0, "blown-up P3 secant line");
  for (long h0N = 1; h0N <= 40; ++h0N)
    o.require(ext1_ledger({h0N, 2, std::nullopt, true}) == h0N - 1, "quintic canonical curve pattern");
  o.detail << " Ext1 = 0 for (2,3,H1=0); Ext1 = h0(N) - 1 for h0(F) = 2, h0(N) in 1..40";
  return o;
}

Outcome criterion8() {
  // Smoothness of moduli and virtual cycles are cohomological statements that
  // have no finite numerical test; the gate is the property suites.
  Outcome o;
  Random g(20240503);
  for (int i = 0; i < 200; ++i) {
    const Threefold X = g.threefold(false);
    const ChernData F = g.sheaf(X, 2);
    const DivClass L(g.rats(X.rank()));
    o.require(expected_dim(X, twist(X, F, L)) == expected_dim(X, F), "expected_dim twist invariance");
    if (!numerically_trivial(X, X.c1X()))
      o.require(expected_dim(X, F) == Rat(1) - ext_euler(X, F), "expected_dim = 1 - ext_euler");
    if (!o.pass) break;
  }
  const Outcome five = criterion5(), six = criterion6();
  o.require(five.pass, "identity suite");
  o.require(six.pass, "Calabi-Yau suite");
  o.detail << " property suites hold; smoothness and virtual-cycle statements are out of scope (see README)";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance gate"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
  CLI11_PARSE(app, argc, argv);

  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Fano CI dzero classification", criterion1},
      {"worked dzero instances and Serre genera", criterion2},
      {"tensor closed form vs splitting principle, ranks [1,4]^2", criterion3},
      {"Riemann-Roch sanity on CI presets", criterion4},
      {"Delta twist invariance and chi(F)+chi(F*) identity", criterion5},
      {"Calabi-Yau degeneration", criterion6},
      {"cohomology ledger examples", criterion7},
      {"out-of-scope material covered by property suites", criterion8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only != 0 && static_cast<int>(i + 1) != only) continue;
    const Outcome o = criteria[i].second();
    failed += o.pass ? 0 : 1;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  criterion " << i + 1 << "  tolerance=exact  "
              << criteria[i].first << ":" << o.detail.str() << "\n";
  }
  return failed == 0 ? 0 : 1;
}
