#pragma once

// Numerical formulas for moduli of rank-2 reflexive sheaves: the Ext Euler
// characteristic, the expected dimension, the Serre correspondence between c3
// and the arithmetic genus of the associated curve, and the dimension count
// relating Ext^1(F,F) to sections of the normal bundle.

#include <optional>
#include <string>
#include <vector>

#include "chern3/sheaf.hpp"

namespace chern3 {

/// sum_i (-1)^i dim Ext^i(F,F) = r^2 c1(X)c2(X)/24 - c1(X).Delta(F)/2.
/// Valid for sheaves of homological dimension at most one; that hypothesis is
/// not checked.
Rat ext_euler(const Threefold& X, const ChernData& F);

/// D(F) = 1 - c1(X)c2(X)/6 + c1(X).Delta(F)/2, rank 2 only (RankUnsupported
/// otherwise). Stability and the vanishing hypotheses under which this equals
/// dim Ext^1 - dim Ext^2 are not checked. When c1(X) is numerically trivial
/// the value is 0.
Rat expected_dim(const Threefold& X, const ChernData& F);

struct ModuliReport {
  std::string threefold;
  ChernData sheaf;
  Rat ext_euler;
  Rat expected_dim;
  CurveClass discriminant;
  Rat c1X_c2X;
  Rat c1X_delta;
};

ModuliReport moduli_report(const Threefold& X, const ChernData& F, std::string threefold_label);

/// c3(F) = 2 p_a(Y) - 2 + c1(X)c2(F) - c1(F)c2(F).
Rat serre_c3(const Threefold& X, const DivClass& detF, const CurveClass& c2F, const Rat& genus);

struct GenusResult {
  Rat genus;
  std::vector<std::string> warnings;  // set when genus is not a nonnegative integer
};

GenusResult serre_genus(const Threefold& X, const DivClass& detF, const CurveClass& c2F,
                        const Rat& c3);

struct CohomologyLedger {
  long h0_N = 0;  // h^0(C, N_{C/X})
  long h0_F = 0;  // h^0(X, F)
  std::optional<long> h0_IF;  // h^0(X, I_C (x) F)
  bool h1_IC_zero = false;    // H^1(X, I_C) = 0, which forces h0_IF = 1

  /// Throws InvalidArgument on negative entries or h1_IC_zero with h0_IF != 1.
  void validate() const;
};

/// dim Ext^1(F,F) = h0_N - h0_F + h0_IF. Throws InsufficientLedger when h0_IF
/// is unknown and cannot be inferred, NegativeDimension when the count is < 0.
long ext1_ledger(const CohomologyLedger& ledger);

}  // namespace chern3
