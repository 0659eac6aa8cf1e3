#include "chern3/sheaf.hpp"

#include "chern3/error.hpp"

namespace chern3 {

ChernData ChernData::trivial(const Threefold& X, long rank) {
  return {rank, DivClass::zero(X.rank()), CurveClass::zero(X.rank()), {}};
}

ChernData ChernData::line(const DivClass& L) {
  return {1, L, CurveClass::zero(L.size()), {}};
}

void validate(const Threefold& X, const ChernData& F) {
  if (F.rank < 1) throw Error(ErrorKind::InvalidArgument, "rank must be positive");
  check_length(X, F.c1.size(), "c1");
  check_length(X, F.c2.size(), "c2");
}

CharacterData to_character(const Threefold& X, const ChernData& F) {
  validate(X, F);
  const CurveClass c1sq = mul_div_div(X, F.c1, F.c1);
  const Rat c1cube = pair_div_curve(X, F.c1, c1sq).value;
  const Rat c1c2 = pair_div_curve(X, F.c1, F.c2).value;
  CharacterData ch;
  ch.ch0 = Rat(F.rank);
  ch.ch1 = F.c1;
  ch.ch2 = Rat(1, 2) * (c1sq - Rat(2) * F.c2);
  ch.ch3 = {(c1cube - Rat(3) * c1c2 + Rat(3) * F.c3.value) / Rat(6)};
  return ch;
}

ChernData from_character(const Threefold& X, const CharacterData& ch) {
  if (!ch.ch0.is_integer() || ch.ch0.sign() <= 0 || !ch.ch0.num().fits_slong_p())
    throw Error(ErrorKind::NonIntegralRank, "ch0 = " + ch.ch0.str() + " is not a positive integer");
  check_length(X, ch.ch1.size(), "ch1");
  check_length(X, ch.ch2.size(), "ch2");
  ChernData F;
  F.rank = ch.ch0.num().get_si();
  F.c1 = ch.ch1;
  const CurveClass c1sq = mul_div_div(X, F.c1, F.c1);
  // ch2 = c1^2/2 - c2, ch3 = (c1^3 - 3 c1 c2 + 3 c3)/6
  F.c2 = Rat(1, 2) * c1sq - ch.ch2;
  const Rat c1cube = pair_div_curve(X, F.c1, c1sq).value;
  const Rat c1c2 = pair_div_curve(X, F.c1, F.c2).value;
  F.c3 = {Rat(2) * ch.ch3.value - c1cube / Rat(3) + c1c2};
  return F;
}

ChernData tensor(const Threefold& X, const ChernData& E, const ChernData& F) {
  const CharacterData a = to_character(X, E);
  const CharacterData b = to_character(X, F);
  CharacterData p;
  p.ch0 = a.ch0 * b.ch0;
  p.ch1 = a.ch0 * b.ch1 + b.ch0 * a.ch1;
  p.ch2 = a.ch0 * b.ch2 + b.ch0 * a.ch2 + mul_div_div(X, a.ch1, b.ch1);
  p.ch3 = a.ch0 * b.ch3 + b.ch0 * a.ch3 + pair_div_curve(X, a.ch1, b.ch2) +
          pair_div_curve(X, b.ch1, a.ch2);
  return from_character(X, p);
}

ChernData dual(const Threefold& X, const ChernData& F) {
  validate(X, F);
  return {F.rank, -F.c1, F.c2, -F.c3};
}

ChernData twist(const Threefold& X, const ChernData& F, const DivClass& L) {
  check_length(X, L.size(), "twisting divisor");
  return tensor(X, F, ChernData::line(L));
}

CurveClass discriminant(const Threefold& X, const ChernData& F) {
  validate(X, F);
  return Rat(2 * F.rank) * F.c2 - Rat(F.rank - 1) * mul_div_div(X, F.c1, F.c1);
}

Rat RRTerms::total() const {
  Rat s;
  for (const auto& t : terms) s += t;
  return s;
}

const std::array<std::string_view, 8>& RRTerms::labels() {
  static const std::array<std::string_view, 8> names = {
      "c1(F)^3/6",       "-c1(F)c2(F)/2",   "-c1(X)c2(F)/2",      "c1(X)c1(F)^2/4",
      "c1(X)^2c1(F)/12", "c2(X)c1(F)/12",   "r*c1(X)c2(X)/24",    "c3(F)/2"};
  return names;
}

RRTerms euler_char_terms(const Threefold& X, const ChernData& F) {
  validate(X, F);
  const DivClass& k = X.c1X();
  RRTerms rr;
  rr.terms[0] = triple(X, F.c1, F.c1, F.c1).value / Rat(6);
  rr.terms[1] = -pair_div_curve(X, F.c1, F.c2).value / Rat(2);
  rr.terms[2] = -pair_div_curve(X, k, F.c2).value / Rat(2);
  rr.terms[3] = triple(X, k, F.c1, F.c1).value / Rat(4);
  rr.terms[4] = triple(X, k, k, F.c1).value / Rat(12);
  rr.terms[5] = pair_div_curve(X, F.c1, X.c2X()).value / Rat(12);
  rr.terms[6] = Rat(F.rank) * pair_div_curve(X, k, X.c2X()).value / Rat(24);
  rr.terms[7] = F.c3.value / Rat(2);
  return rr;
}

Rat euler_char(const Threefold& X, const ChernData& F) { return euler_char_terms(X, F).total(); }

Rat slope(const Threefold& X, const ChernData& F, const DivClass& L) {
  validate(X, F);
  const Rat volume = triple(X, L, L, L).value;
  if (volume.is_zero()) throw Error(ErrorKind::DegenerateLine, "L^3 = 0");
  return triple(X, F.c1, L, L).value / (Rat(F.rank) * volume);
}

}  // namespace chern3
