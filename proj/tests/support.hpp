#pragma once

#include <random>
#include <vector>

#include "chern3/chow.hpp"
#include "chern3/sheaf.hpp"

namespace chern3::testing {

// Models written out directly, independent of the complete-intersection builder.
inline Threefold model(long degree, long c1, long c2_pairing) {
  return Threefold::make({"H"}, {{{Rat(degree)}}}, DivClass({Rat(c1)}), CurveClass({Rat(c2_pairing)}),
                         std::vector<CurveClass>{CurveClass({Rat(1)})});
}
inline Threefold quadric() { return model(2, 3, 8); }
inline Threefold p3() { return model(1, 4, 6); }
inline Threefold ci23() { return model(6, 1, 24); }
inline Threefold quintic() { return model(5, 0, 50); }

inline DivClass div1(long a) { return DivClass({Rat(a)}); }
inline CurveClass curve1(long a) { return CurveClass({Rat(a)}); }

inline ChernData sheaf1(long rank, long c1, long c2, long c3 = 0) {
  return {rank, div1(c1), curve1(c2), {Rat(c3)}};
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

  Rat rat(long bound = 9, long max_den = 6) { return Rat(integer(-bound, bound), integer(1, max_den)); }

  std::vector<Rat> rats(std::size_t n) {
    std::vector<Rat> v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(rat());
    return v;
  }

  // Random symmetric trilinear form on m generators, no curve lattice.
  Threefold threefold(std::size_t m, bool trivial_canonical = false) {
    std::vector<std::vector<std::vector<Rat>>> T(m, std::vector<std::vector<Rat>>(m, std::vector<Rat>(m)));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = i; j < m; ++j)
        for (std::size_t k = j; k < m; ++k) {
          const Rat v(integer(-6, 6));
          for (auto [a, b, c] : {std::array{i, j, k}, {i, k, j}, {j, i, k}, {j, k, i}, {k, i, j}, {k, j, i}})
            T[a][b][c] = v;
        }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < m; ++i) names.push_back("D" + std::to_string(i));
    DivClass c1 = trivial_canonical ? DivClass::zero(m) : DivClass(rats(m));
    return Threefold::make(names, T, std::move(c1), CurveClass(rats(m)));
  }

  ChernData sheaf(const Threefold& X, long rank) {
    return {rank, DivClass(rats(X.rank())), CurveClass(rats(X.rank())), {rat()}};
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

}  // namespace chern3::testing
