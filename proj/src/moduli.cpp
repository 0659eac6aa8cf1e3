#include "chern3/moduli.hpp"

#include "chern3/error.hpp"

namespace chern3 {

Rat ext_euler(const Threefold& X, const ChernData& F) {
  validate(X, F);
  const Rat r(F.rank);
  const Rat c1c2 = pair_div_curve(X, X.c1X(), X.c2X()).value;
  const Rat c1delta = pair_div_curve(X, X.c1X(), discriminant(X, F)).value;
  return r * r * c1c2 / Rat(24) - c1delta / Rat(2);
}

Rat expected_dim(const Threefold& X, const ChernData& F) {
  validate(X, F);
  if (F.rank != 2)
    throw Error(ErrorKind::RankUnsupported,
                "expected dimension is defined for rank 2, got rank " + std::to_string(F.rank));
  // Trivial canonical class: Ext^3 is dual to Hom, so the 1 from Hom cancels
  // and the Euler characteristic term vanishes with c1(X).
  if (numerically_trivial(X, X.c1X())) return Rat(0);
  const Rat c1c2 = pair_div_curve(X, X.c1X(), X.c2X()).value;
  const Rat c1delta = pair_div_curve(X, X.c1X(), discriminant(X, F)).value;
  return Rat(1) - c1c2 / Rat(6) + c1delta / Rat(2);
}

ModuliReport moduli_report(const Threefold& X, const ChernData& F, std::string threefold_label) {
  ModuliReport rep;
  rep.threefold = std::move(threefold_label);
  rep.sheaf = F;
  rep.expected_dim = expected_dim(X, F);
  rep.ext_euler = ext_euler(X, F);
  rep.discriminant = discriminant(X, F);
  rep.c1X_c2X = pair_div_curve(X, X.c1X(), X.c2X()).value;
  rep.c1X_delta = pair_div_curve(X, X.c1X(), rep.discriminant).value;
  return rep;
}

Rat serre_c3(const Threefold& X, const DivClass& detF, const CurveClass& c2F, const Rat& genus) {
  check_length(X, detF.size(), "det F");
  check_length(X, c2F.size(), "c2(F)");
  return Rat(2) * genus - Rat(2) + pair_div_curve(X, X.c1X(), c2F).value -
         pair_div_curve(X, detF, c2F).value;
}

GenusResult serre_genus(const Threefold& X, const DivClass& detF, const CurveClass& c2F,
                        const Rat& c3) {
  check_length(X, detF.size(), "det F");
  check_length(X, c2F.size(), "c2(F)");
  GenusResult out;
  out.genus = (c3 + Rat(2) - pair_div_curve(X, X.c1X(), c2F).value +
               pair_div_curve(X, detF, c2F).value) /
              Rat(2);
  if (!out.genus.is_integer())
    out.warnings.push_back("arithmetic genus " + out.genus.str() + " is not an integer");
  else if (out.genus.sign() < 0)
    out.warnings.push_back("arithmetic genus " + out.genus.str() + " is negative");
  return out;
}

void CohomologyLedger::validate() const {
  if (h0_N < 0 || h0_F < 0 || (h0_IF && *h0_IF < 0))
    throw Error(ErrorKind::InvalidArgument, "cohomology dimensions must be nonnegative");
  if (h1_IC_zero && h0_IF && *h0_IF != 1)
    throw Error(ErrorKind::InvalidArgument,
                "H^1(X, I_C) = 0 forces h0(I_C (x) F) = 1, got " + std::to_string(*h0_IF));
}

long ext1_ledger(const CohomologyLedger& ledger) {
  ledger.validate();
  long h0_IF = 0;
  if (ledger.h0_IF)
    h0_IF = *ledger.h0_IF;
  else if (ledger.h1_IC_zero)
    h0_IF = 1;
  else
    throw Error(ErrorKind::InsufficientLedger,
                "need h0(I_C (x) F) or the assertion H^1(X, I_C) = 0");
  const long dim = ledger.h0_N - ledger.h0_F + h0_IF;
  if (dim < 0)
    throw Error(ErrorKind::NegativeDimension,
                "ledger gives dim Ext^1 = " + std::to_string(dim) + "; inputs are inconsistent");
  return dim;
}

}  // namespace chern3
