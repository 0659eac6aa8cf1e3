#include "chern3/ci.hpp"

#include <charconv>
#include <numeric>

#include "chern3/error.hpp"

namespace chern3 {

TruncSeries series_mul(const TruncSeries& a, const TruncSeries& b) {
  TruncSeries out;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; i + j < 4; ++j) out.c[i + j] += a.c[i] * b.c[j];
  return out;
}

TruncSeries series_inv(const TruncSeries& a) {
  if (a.c[0].is_zero()) throw Error(ErrorKind::NonUnitSeries, "constant term is zero");
  TruncSeries b;
  b.c[0] = Rat(1) / a.c[0];
  for (int n = 1; n < 4; ++n) {
    Rat s;
    for (int i = 1; i <= n; ++i) s += a.c[i] * b.c[n - i];
    b.c[n] = -s / a.c[0];
  }
  return b;
}

CIPreset CIPreset::make(int ambient, std::vector<int> degrees) {
  if (ambient < 3) throw Error(ErrorKind::InvalidPreset, "ambient dimension must be at least 3");
  for (int d : degrees)
    if (d < 1) throw Error(ErrorKind::InvalidPreset, "degrees must be positive");
  if (ambient - static_cast<int>(degrees.size()) != 3)
    throw Error(ErrorKind::InvalidPreset, "P" + std::to_string(ambient) + " needs " +
                                              std::to_string(ambient - 3) +
                                              " equations to cut out a threefold");
  return CIPreset{ambient, std::move(degrees)};
}

CIPreset CIPreset::parse(std::string_view name) {
  auto fail = [&]() -> CIPreset {
    throw Error(ErrorKind::InvalidPreset,
                "expected \"[d1,...,dm] in Pn\", got \"" + std::string(name) + "\"");
  };
  auto skip_ws = [&](std::size_t& i) {
    while (i < name.size() && name[i] == ' ') ++i;
  };
  auto read_int = [&](std::size_t& i, int& out) {
    const auto* first = name.data() + i;
    const auto [ptr, ec] = std::from_chars(first, name.data() + name.size(), out);
    if (ec != std::errc{} || ptr == first) return false;
    i += static_cast<std::size_t>(ptr - first);
    return true;
  };

  std::size_t i = 0;
  skip_ws(i);
  if (i >= name.size() || name[i] != '[') return fail();
  ++i;
  std::vector<int> degrees;
  skip_ws(i);
  if (i < name.size() && name[i] == ']') {
    ++i;
  } else {
    while (true) {
      skip_ws(i);
      int d = 0;
      if (!read_int(i, d)) return fail();
      degrees.push_back(d);
      skip_ws(i);
      if (i < name.size() && name[i] == ',') { ++i; continue; }
      if (i < name.size() && name[i] == ']') { ++i; break; }
      return fail();
    }
  }
  skip_ws(i);
  if (name.substr(i, 2) != "in") return fail();
  i += 2;
  skip_ws(i);
  if (i >= name.size() || (name[i] != 'P' && name[i] != 'p')) return fail();
  ++i;
  int n = 0;
  if (!read_int(i, n)) return fail();
  skip_ws(i);
  if (i != name.size()) return fail();
  return make(n, std::move(degrees));
}

std::string CIPreset::name() const {
  std::string s = "[";
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(degrees[i]);
  }
  return s + "] in P" + std::to_string(ambient);
}

CIPreset CIPreset::reduced() const {
  CIPreset out{3, {}};
  for (int d : degrees)
    if (d != 1) out.degrees.push_back(d);
  out.ambient = 3 + static_cast<int>(out.degrees.size());
  return out;
}

std::string_view to_string(CanonicalType t) {
  switch (t) {
    case CanonicalType::Fano: return "Fano";
    case CanonicalType::CalabiYau: return "CalabiYau";
    case CanonicalType::GeneralType: return "GeneralType";
  }
  return "?";
}

TruncSeries tangent_chern(const CIPreset& p) {
  const TruncSeries one_plus_h{{Rat(1), Rat(1), Rat(0), Rat(0)}};
  TruncSeries num = TruncSeries::one();
  for (int i = 0; i <= p.ambient; ++i) num = series_mul(num, one_plus_h);
  TruncSeries den = TruncSeries::one();
  for (int d : p.degrees) den = series_mul(den, TruncSeries{{Rat(1), Rat(d), Rat(0), Rat(0)}});
  return series_mul(num, series_inv(den));
}

Threefold build_ci(const CIPreset& p) {
  const TruncSeries c = tangent_chern(p);
  const Rat degree(std::accumulate(p.degrees.begin(), p.degrees.end(), 1L,
                                   [](long a, int d) { return a * d; }));
  return Threefold::make({"H"}, {{{degree}}}, DivClass({c.c[1]}), CurveClass({c.c[2] * degree}),
                         std::vector<CurveClass>{CurveClass({Rat(1)})});
}

CanonicalType classify(const CIPreset& p) {
  const int sum = std::accumulate(p.degrees.begin(), p.degrees.end(), 0);
  if (sum < p.ambient + 1) return CanonicalType::Fano;
  if (sum == p.ambient + 1) return CanonicalType::CalabiYau;
  return CanonicalType::GeneralType;
}

std::vector<std::string> preset_warnings(const CIPreset& p) {
  std::vector<std::string> out;
  const CIPreset r = p.reduced();
  if (!(r == p))
    out.push_back("linear equations are redundant; " + p.name() + " is the same threefold as " +
                  r.name());
  return out;
}

}  // namespace chern3
