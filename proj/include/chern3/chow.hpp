#pragma once

// Numerical intersection theory on a smooth projective threefold.
//
// A threefold is presented by m divisor generators D_0..D_{m-1} and the
// symmetric trilinear form T[i][j][k] = D_i.D_j.D_k. Codimension-2 classes are
// identified with their pairing vectors against the generators, and points
// with their degree.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "chern3/error.hpp"
#include "chern3/rat.hpp"

namespace chern3 {

namespace detail {

template <class Tag>
struct ClassVector {
  std::vector<Rat> v;

  ClassVector() = default;
  explicit ClassVector(std::vector<Rat> values) : v(std::move(values)) {}
  static ClassVector zero(std::size_t m) { return ClassVector(std::vector<Rat>(m)); }

  std::size_t size() const { return v.size(); }
  const Rat& operator[](std::size_t i) const { return v[i]; }
  Rat& operator[](std::size_t i) { return v[i]; }

  bool is_zero() const {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const ClassVector&, const ClassVector&) = default;

  ClassVector& operator+=(const ClassVector& o) {
    if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "class lengths differ");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  ClassVector& operator-=(const ClassVector& o) {
    if (o.size() != size()) throw Error(ErrorKind::DimensionMismatch, "class lengths differ");
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  ClassVector& operator*=(const Rat& s) {
    for (auto& x : v) x *= s;
    return *this;
  }
  friend ClassVector operator+(ClassVector a, const ClassVector& b) { return a += b; }
  friend ClassVector operator-(ClassVector a, const ClassVector& b) { return a -= b; }
  friend ClassVector operator-(ClassVector a) { return a *= Rat(-1); }
  friend ClassVector operator*(const Rat& s, ClassVector a) { return a *= s; }
};

struct DivTag {};
struct CurveTag {};

}  // namespace detail

/// Codimension-1 class: coefficients in the divisor generators.
using DivClass = detail::ClassVector<detail::DivTag>;
/// Codimension-2 class, stored as its intersection numbers with each generator.
using CurveClass = detail::ClassVector<detail::CurveTag>;

/// Codimension-3 class: a degree.
struct PointClass {
  Rat value;

  friend bool operator==(const PointClass&, const PointClass&) = default;
  PointClass& operator+=(const PointClass& o) { value += o.value; return *this; }
  PointClass& operator-=(const PointClass& o) { value -= o.value; return *this; }
  friend PointClass operator+(PointClass a, const PointClass& b) { return a += b; }
  friend PointClass operator-(PointClass a, const PointClass& b) { return a -= b; }
  friend PointClass operator-(const PointClass& a) { return {-a.value}; }
  friend PointClass operator*(const Rat& s, const PointClass& a) { return {s * a.value}; }
};

class Threefold {
 public:
  /// Validates and builds a threefold model. T is indexed T[i][j][k]; it must
  /// already be symmetric (no silent symmetrization). When a curve lattice is
  /// given, c2X must lie in its integral span.
  static Threefold make(std::vector<std::string> generators,
                        const std::vector<std::vector<std::vector<Rat>>>& T, DivClass c1X,
                        CurveClass c2X,
                        std::optional<std::vector<CurveClass>> curve_lattice = std::nullopt);

  std::size_t rank() const { return names_.size(); }
  const std::vector<std::string>& generator_names() const { return names_; }
  const Rat& form(std::size_t i, std::size_t j, std::size_t k) const {
    return form_[(i * rank() + j) * rank() + k];
  }
  const DivClass& c1X() const { return c1X_; }
  const CurveClass& c2X() const { return c2X_; }
  const std::optional<std::vector<CurveClass>>& curve_lattice() const { return lattice_; }

  friend bool operator==(const Threefold&, const Threefold&) = default;

 private:
  Threefold() = default;

  std::vector<std::string> names_;
  std::vector<Rat> form_;  // dense m*m*m
  DivClass c1X_;
  CurveClass c2X_;
  std::optional<std::vector<CurveClass>> lattice_;
};

CurveClass mul_div_div(const Threefold& X, const DivClass& a, const DivClass& b);
PointClass pair_div_curve(const Threefold& X, const DivClass& a, const CurveClass& q);
PointClass triple(const Threefold& X, const DivClass& a, const DivClass& b, const DivClass& c);

/// chi(O_X) = c1(X).c2(X) / 24.
Rat todd_genus(const Threefold& X);

/// Whether q lies in the integral span of X's curve lattice. Without a
/// declared lattice every class is accepted.
bool in_curve_lattice(const Threefold& X, const CurveClass& q);

bool is_integral(const DivClass& d);

/// D.D_i.D_j = 0 for every pair of generators.
bool numerically_trivial(const Threefold& X, const DivClass& d);

/// Throws DimensionMismatch unless the class has X.rank() entries.
void check_length(const Threefold& X, std::size_t n, const char* what);

}  // namespace chern3
