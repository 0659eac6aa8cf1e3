#pragma once

// When is the expected dimension of rank-2 reflexive sheaves zero on a
// Picard-rank-one threefold? With c1(F) = kH and c = H.c2(F), D(F) is an
// affine function of (c, k^2); this module decides its integer solvability by
// congruences and enumerates solutions in a box.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chern3/moduli.hpp"

namespace chern3 {

struct IntRange {
  long lo = 0;
  long hi = 0;
  long count() const { return hi - lo + 1; }
};

/// D(k, c) = a*c + b*k^2 + e identically.
struct AffineCondition {
  Rat a, b, e;
  Rat eval(long k, const Rat& c) const { return a * c + b * Rat(k) * Rat(k) + e; }
  friend bool operator==(const AffineCondition&, const AffineCondition&) = default;
};

/// Throws UnsupportedPicardRank (m != 1) or MissingCurveLattice.
AffineCondition dzero_condition(const Threefold& X);

/// Integer relation A c + B k^2 + E = 0 in lowest terms with A > 0 (or A = 0,
/// B >= 0); the zero relation when the condition vanishes identically.
struct IntegerRelation {
  mpz_class A, B, E;
  /// Rendered as "A c = R(k)", e.g. "2c = 3(k^2 + 1)".
  std::string str() const;
  friend bool operator==(const IntegerRelation&, const IntegerRelation&) = default;
};

IntegerRelation normalize(const AffineCondition& cond);

struct DZeroProblem {
  Threefold threefold;
  std::string label;
  IntRange k;
  IntRange c;
};

enum class DZeroStatus {
  Solvable,          // congruence classes of k admit integer c
  Obstructed,        // a single-modulus congruence rules out every (k, c)
  IdenticallyZero,   // D vanishes for every (k, c)
  NoCertificate,     // no witness in range and no congruence obstruction found
};

std::string_view to_string(DZeroStatus s);

struct Obstruction {
  long modulus = 0;
  std::vector<long> rhs_residues;  // values of the k-side mod modulus, none of them admissible
  std::string description;
};

struct SolutionClasses {
  long modulus = 0;              // k is taken mod this
  std::vector<long> k_residues;  // admissible residues
};

struct DZeroReport {
  std::string label;
  AffineCondition condition;
  IntegerRelation relation;
  Rat lattice_step;  // H.l for the lattice generator l; c runs over its multiples
  IntRange k, c;
  DZeroStatus status = DZeroStatus::NoCertificate;
  std::optional<Obstruction> obstruction;
  std::optional<SolutionClasses> classes;
  std::vector<std::pair<long, long>> witnesses;  // (k, c); empty when IdenticallyZero
  long enumerated_points = 0;
  long enumerated_zeros = 0;
  bool enumeration_agrees = false;
};

/// Default cap on enumerated lattice points, overridable through CHERN3_MAX_ENUM.
long max_enumeration();

/// Brute force over the box: evaluates expected_dim on (2, kH, n l, 0) for
/// every k and every lattice c. Ranges are partitioned across threads.
std::vector<std::pair<long, long>> enumerate_zeros(const Threefold& X, IntRange k, IntRange c);

DZeroReport solve_dzero(const DZeroProblem& problem);

struct ClaimEntry {
  std::string preset;
  bool expect_solvable = false;
  std::optional<IntegerRelation> expected_relation;
  DZeroReport report;
  bool ok = false;
  std::string note;
};

struct PaperClaimsReport {
  std::vector<ClaimEntry> entries;
  bool all_ok() const;
};

/// Runs the seven Fano complete-intersection cases over k, c in [-50, 50]
/// without throwing; entries carry their own verdict.
PaperClaimsReport check_paper_claims();

/// As check_paper_claims, but throws ClaimViolation naming the first failing preset.
PaperClaimsReport verify_paper_claims();

}  // namespace chern3
