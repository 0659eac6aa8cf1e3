#pragma once

// Chern-class data of coherent sheaves on a numerical threefold.

#include <array>
#include <string_view>

#include "chern3/chow.hpp"

namespace chern3 {

struct ChernData {
  long rank = 1;
  DivClass c1;
  CurveClass c2;
  PointClass c3;

  /// Zero Chern classes of the given rank (the trivial bundle).
  static ChernData trivial(const Threefold& X, long rank = 1);
  /// Line bundle with first Chern class L.
  static ChernData line(const DivClass& L);

  friend bool operator==(const ChernData&, const ChernData&) = default;
};

struct CharacterData {
  Rat ch0;
  DivClass ch1;
  CurveClass ch2;
  PointClass ch3;

  friend bool operator==(const CharacterData&, const CharacterData&) = default;
};

/// Throws DimensionMismatch / InvalidArgument for data that does not fit X.
void validate(const Threefold& X, const ChernData& F);

CharacterData to_character(const Threefold& X, const ChernData& F);
/// Throws NonIntegralRank unless ch0 is a positive integer.
ChernData from_character(const Threefold& X, const CharacterData& ch);

/// Computed through ch(E (x) F) = ch(E) ch(F).
ChernData tensor(const Threefold& X, const ChernData& E, const ChernData& F);
ChernData dual(const Threefold& X, const ChernData& F);
ChernData twist(const Threefold& X, const ChernData& F, const DivClass& L);

/// 2r c2 - (r-1) c1^2.
CurveClass discriminant(const Threefold& X, const ChernData& F);

// The eight Hirzebruch-Riemann-Roch terms, in the order
//   c1^3/6, -c1 c2/2, -c1(X) c2/2, c1(X) c1^2/4,
//   c1(X)^2 c1/12, c2(X) c1/12, r c1(X) c2(X)/24, c3/2.
struct RRTerms {
  std::array<Rat, 8> terms;
  Rat total() const;
  static const std::array<std::string_view, 8>& labels();
};

RRTerms euler_char_terms(const Threefold& X, const ChernData& F);
Rat euler_char(const Threefold& X, const ChernData& F);

/// mu(F, L) = c1(F).L^2 / (rank L^3); throws DegenerateLine when L^3 = 0.
Rat slope(const Threefold& X, const ChernData& F, const DivClass& L);

}  // namespace chern3
