#pragma once

// Chern classes of a tensor product checked through the splitting principle:
// specialise the Chern roots of E and F to rational numbers, so that every
// class becomes a scalar, and compare the closed-form polynomials against the
// elementary symmetric functions of the pairwise root sums.

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "chern3/rat.hpp"

namespace chern3 {

struct ScalarChern {
  Rat c1, c2, c3;
  friend bool operator==(const ScalarChern&, const ScalarChern&) = default;
};

struct RootSpec {
  std::vector<Rat> rootsE;
  std::vector<Rat> rootsF;
};

/// Elementary symmetric functions e1, e2, e3 of the roots.
ScalarChern chern_from_roots(const std::vector<Rat>& roots);

/// e1, e2, e3 of { a_i + b_j }.
ScalarChern tensor_from_roots(const RootSpec& spec);

/// c1, c2, c3 of E (x) F for ranks r1 = rank E, r2 = rank F, transcribed
/// term for term from the published closed form. Its c3(E), c3(F)
/// coefficients are r2(r2^2 - 3r2 + 3) and r1(r1^2 - 3r1 + 3), which agree
/// with the true values only for ranks 1 and 2.
ScalarChern tensor_closed_form(long r1, long r2, const ScalarChern& cE, const ScalarChern& cF);

/// Same closed form with the c3(E), c3(F) coefficients replaced by r2 and r1.
ScalarChern tensor_closed_form_corrected(long r1, long r2, const ScalarChern& cE,
                                         const ScalarChern& cF);

using ClosedForm =
    std::function<ScalarChern(long, long, const ScalarChern&, const ScalarChern&)>;

struct Counterexample {
  RootSpec spec;
  ScalarChern from_roots;
  ScalarChern closed_form;
};

struct PairResult {
  long r1 = 0, r2 = 0;
  long random_trials = 0;
  long grid_points = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // first failure
};

struct TensorVerifyReport {
  long max_rank = 0, trials = 0;
  std::uint64_t seed = 0;
  std::vector<PairResult> pairs;
  bool all_passed() const;
};

/// For every (r1, r2) in [1, max_rank]^2: `trials` seeded random rational
/// specialisations plus every multiset of roots drawn from {-1, 0, 1, 2}.
/// max_rank is capped at 6; failures are report content, not exceptions.
TensorVerifyReport verify_tensor_formulas(long max_rank, long trials, std::uint64_t seed,
                                          const ClosedForm& closed_form = tensor_closed_form);

}  // namespace chern3
