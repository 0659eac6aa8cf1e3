#include "chern3/splitting.hpp"

#include <algorithm>
#include <random>

#include "chern3/error.hpp"

namespace chern3 {

namespace {

Rat binom2(long r) { return Rat(r * (r - 1), 2); }
Rat binom3(long r) { return Rat(r * (r - 1) * (r - 2), 6); }

// All multisets of size r over `values`, as sorted vectors.
void multisets(const std::vector<long>& values, std::size_t r, std::size_t start,
               std::vector<Rat>& cur, std::vector<std::vector<Rat>>& out) {
  if (cur.size() == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < values.size(); ++i) {
    cur.emplace_back(values[i]);
    multisets(values, r, i, cur, out);
    cur.pop_back();
  }
}

ScalarChern closed_form_impl(long r1, long r2, const ScalarChern& E, const ScalarChern& F,
                             const Rat& c3E_coeff, const Rat& c3F_coeff) {
  const Rat R1(r1), R2(r2), P(r1 * r2);
  ScalarChern out;
  out.c1 = R2 * E.c1 + R1 * F.c1;
  out.c2 = binom2(r2) * E.c1 * E.c1 + R2 * E.c2 + (P - Rat(1)) * E.c1 * F.c1 + R1 * F.c2 +
           binom2(r1) * F.c1 * F.c1;
  out.c3 = binom3(r2) * E.c1 * E.c1 * E.c1 + Rat(2) * binom2(r2) * E.c1 * E.c2 +
           (P - Rat(2)) * E.c1 * F.c2 +
           Rat(1, 2) * (R2 - Rat(1)) * (P - Rat(2)) * E.c1 * E.c1 * F.c1 +
           Rat(1, 2) * (R1 - Rat(1)) * (P - Rat(2)) * E.c1 * F.c1 * F.c1 +
           (P - Rat(2)) * E.c2 * F.c1 + Rat(2) * binom2(r1) * F.c1 * F.c2 +
           binom3(r1) * F.c1 * F.c1 * F.c1 + c3E_coeff * E.c3 + c3F_coeff * F.c3;
  return out;
}

}  // namespace

ScalarChern chern_from_roots(const std::vector<Rat>& roots) {
  if (roots.empty()) throw Error(ErrorKind::EmptyRoots, "need at least one Chern root");
  // e_j of the prefix, updated one root at a time.
  Rat e1, e2, e3;
  for (const Rat& x : roots) {
    e3 += e2 * x;
    e2 += e1 * x;
    e1 += x;
  }
  return {e1, e2, e3};
}

ScalarChern tensor_from_roots(const RootSpec& spec) {
  if (spec.rootsE.empty() || spec.rootsF.empty())
    throw Error(ErrorKind::EmptyRoots, "need at least one Chern root on each side");
  std::vector<Rat> sums;
  sums.reserve(spec.rootsE.size() * spec.rootsF.size());
  for (const Rat& a : spec.rootsE)
    for (const Rat& b : spec.rootsF) sums.push_back(a + b);
  return chern_from_roots(sums);
}

ScalarChern tensor_closed_form(long r1, long r2, const ScalarChern& cE, const ScalarChern& cF) {
  return closed_form_impl(r1, r2, cE, cF, Rat(r2 * (r2 * r2 - 3 * r2 + 3)),
                          Rat(r1 * (r1 * r1 - 3 * r1 + 3)));
}

ScalarChern tensor_closed_form_corrected(long r1, long r2, const ScalarChern& cE,
                                         const ScalarChern& cF) {
  return closed_form_impl(r1, r2, cE, cF, Rat(r2), Rat(r1));
}

bool TensorVerifyReport::all_passed() const {
  return std::all_of(pairs.begin(), pairs.end(), [](const PairResult& p) { return p.passed; });
}

TensorVerifyReport verify_tensor_formulas(long max_rank, long trials, std::uint64_t seed,
                                          const ClosedForm& closed_form) {
  if (max_rank < 1 || max_rank > 6)
    throw Error(ErrorKind::InvalidArgument, "max_rank must lie in [1, 6]");
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "trials must be positive");

  TensorVerifyReport rep{max_rank, trials, seed, {}};
  const std::vector<long> grid_values = {-1, 0, 1, 2};

  for (long r1 = 1; r1 <= max_rank; ++r1) {
    for (long r2 = 1; r2 <= max_rank; ++r2) {
      PairResult pr;
      pr.r1 = r1;
      pr.r2 = r2;
      auto check = [&](RootSpec spec) {
        const ScalarChern want = tensor_from_roots(spec);
        const ScalarChern got =
            closed_form(r1, r2, chern_from_roots(spec.rootsE), chern_from_roots(spec.rootsF));
        if (want != got && pr.passed) {
          pr.passed = false;
          pr.counterexample = Counterexample{std::move(spec), want, got};
        }
      };

      // Independent stream per rank pair so results do not depend on max_rank.
      std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                        static_cast<std::uint32_t>(r1), static_cast<std::uint32_t>(r2)};
      std::mt19937_64 rng(seq);
      std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
      std::uniform_int_distribution<long> den(1, 1'000'000);
      auto draw = [&](long n) {
        std::vector<Rat> v;
        v.reserve(static_cast<std::size_t>(n));
        for (long i = 0; i < n; ++i) {
          const long p = num(rng);
          v.emplace_back(p, den(rng));
        }
        return v;
      };
      std::vector<std::vector<Rat>> gridE, gridF;
      std::vector<Rat> cur;
      multisets(grid_values, static_cast<std::size_t>(r1), 0, cur, gridE);
      multisets(grid_values, static_cast<std::size_t>(r2), 0, cur, gridF);
      for (const auto& e : gridE)
        for (const auto& f : gridF) {
          check({e, f});
          ++pr.grid_points;
        }

      for (long t = 0; t < trials; ++t) {
        auto e = draw(r1);
        check({std::move(e), draw(r2)});
        ++pr.random_trials;
      }
      rep.pairs.push_back(std::move(pr));
    }
  }
  return rep;
}

}  // namespace chern3
