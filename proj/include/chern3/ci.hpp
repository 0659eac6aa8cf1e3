#pragma once

// Complete-intersection threefolds in projective space.

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "chern3/chow.hpp"

namespace chern3 {

/// Power series in H truncated after H^3.
struct TruncSeries {
  std::array<Rat, 4> c{};

  static TruncSeries one() { return {{Rat(1), Rat(0), Rat(0), Rat(0)}}; }
  friend bool operator==(const TruncSeries&, const TruncSeries&) = default;
};

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b);
/// Throws NonUnitSeries when the constant term vanishes.
TruncSeries series_inv(const TruncSeries& a);

/// Smooth complete intersection of hypersurfaces of the given degrees in P^ambient.
struct CIPreset {
  int ambient = 3;
  std::vector<int> degrees;

  /// Validates n >= 3, all degrees >= 1 and n - #degrees == 3.
  static CIPreset make(int ambient, std::vector<int> degrees);
  /// Parses the catalogue syntax "[d1,...,dm] in Pn" ("[] in P3" for P^3).
  static CIPreset parse(std::string_view name);

  /// Canonical "[d1,...,dm] in Pn" spelling.
  std::string name() const;
  /// Same variety with every degree-1 factor dropped.
  CIPreset reduced() const;

  friend bool operator==(const CIPreset&, const CIPreset&) = default;
};

enum class CanonicalType { Fano, CalabiYau, GeneralType };

std::string_view to_string(CanonicalType t);

/// c(T_X) = (1+H)^(n+1) / prod(1 + d_i H), truncated.
TruncSeries tangent_chern(const CIPreset& p);

/// Picard-rank-one model: T = prod d_i, c1X and c2X read off tangent_chern,
/// curve lattice spanned by a line class l with H.l = 1.
Threefold build_ci(const CIPreset& p);

CanonicalType classify(const CIPreset& p);

/// Human-readable notes about the preset (e.g. redundant linear sections).
std::vector<std::string> preset_warnings(const CIPreset& p);

}  // namespace chern3
