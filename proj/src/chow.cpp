#include "chern3/chow.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "chern3/error.hpp"

namespace chern3 {

namespace {

using IntVec = std::vector<mpz_class>;

// Integral row echelon form; returns (pivot column, row) pairs in column order.
std::vector<std::pair<std::size_t, IntVec>> echelon(std::vector<IntVec> rows, std::size_t m) {
  std::vector<std::pair<std::size_t, IntVec>> pivots;
  std::size_t top = 0;
  for (std::size_t col = 0; col < m && top < rows.size(); ++col) {
    while (true) {
      std::size_t best = rows.size();
      for (std::size_t r = top; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        if (best == rows.size() || abs(rows[r][col]) < abs(rows[best][col])) best = r;
      }
      if (best == rows.size()) break;
      std::swap(rows[top], rows[best]);
      bool done = true;
      for (std::size_t r = top + 1; r < rows.size(); ++r) {
        if (rows[r][col] == 0) continue;
        mpz_class q;
        mpz_fdiv_q(q.get_mpz_t(), rows[r][col].get_mpz_t(), rows[top][col].get_mpz_t());
        for (std::size_t c = col; c < m; ++c) rows[r][c] -= q * rows[top][c];
        if (rows[r][col] != 0) done = false;
      }
      if (done) {
        pivots.emplace_back(col, rows[top]);
        ++top;
        break;
      }
    }
  }
  return pivots;
}

}  // namespace

void check_length(const Threefold& X, std::size_t n, const char* what) {
  if (n != X.rank())
    throw Error(ErrorKind::DimensionMismatch, std::string(what) + " has length " +
                                                  std::to_string(n) + ", threefold has " +
                                                  std::to_string(X.rank()) + " generators");
}

Threefold Threefold::make(std::vector<std::string> generators,
                          const std::vector<std::vector<std::vector<Rat>>>& T, DivClass c1X,
                          CurveClass c2X, std::optional<std::vector<CurveClass>> curve_lattice) {
  const std::size_t m = generators.size();
  if (m == 0) throw Error(ErrorKind::DimensionMismatch, "a threefold needs at least one generator");
  if (T.size() != m) throw Error(ErrorKind::DimensionMismatch, "T has wrong outer size");
  for (const auto& plane : T) {
    if (plane.size() != m) throw Error(ErrorKind::DimensionMismatch, "T has wrong middle size");
    for (const auto& row : plane)
      if (row.size() != m) throw Error(ErrorKind::DimensionMismatch, "T has wrong inner size");
  }

  Threefold X;
  X.names_ = std::move(generators);
  check_length(X, c1X.size(), "c1X");
  check_length(X, c2X.size(), "c2X");

  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) {
        const Rat& t = T[i][j][k];
        if (t != T[j][i][k] || t != T[i][k][j] || t != T[k][j][i] || t != T[j][k][i] ||
            t != T[k][i][j])
          throw Error(ErrorKind::AsymmetricForm,
                      "T[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                          std::to_string(k) + "] differs from a permuted entry");
      }

  X.form_.reserve(m * m * m);
  for (const auto& plane : T)
    for (const auto& row : plane) X.form_.insert(X.form_.end(), row.begin(), row.end());
  X.c1X_ = std::move(c1X);
  X.c2X_ = std::move(c2X);

  if (curve_lattice) {
    for (const auto& g : *curve_lattice) check_length(X, g.size(), "curve lattice generator");
    X.lattice_ = std::move(curve_lattice);
    if (!in_curve_lattice(X, X.c2X_))
      throw Error(ErrorKind::LatticeMismatch, "c2X is not in the declared curve lattice");
  }
  return X;
}

CurveClass mul_div_div(const Threefold& X, const DivClass& a, const DivClass& b) {
  check_length(X, a.size(), "divisor");
  check_length(X, b.size(), "divisor");
  const std::size_t m = X.rank();
  auto out = CurveClass::zero(m);
  for (std::size_t j = 0; j < m; ++j) {
    if (a[j].is_zero()) continue;
    for (std::size_t k = 0; k < m; ++k) {
      if (b[k].is_zero()) continue;
      const Rat ab = a[j] * b[k];
      for (std::size_t i = 0; i < m; ++i) out[i] += ab * X.form(j, k, i);
    }
  }
  return out;
}

PointClass pair_div_curve(const Threefold& X, const DivClass& a, const CurveClass& q) {
  check_length(X, a.size(), "divisor");
  check_length(X, q.size(), "curve class");
  Rat s;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * q[i];
  return {s};
}

PointClass triple(const Threefold& X, const DivClass& a, const DivClass& b, const DivClass& c) {
  check_length(X, a.size(), "divisor");
  check_length(X, b.size(), "divisor");
  check_length(X, c.size(), "divisor");
  const std::size_t m = X.rank();
  Rat s;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k) s += a[i] * b[j] * c[k] * X.form(i, j, k);
  return {s};
}

Rat todd_genus(const Threefold& X) { return pair_div_curve(X, X.c1X(), X.c2X()).value / Rat(24); }

bool in_curve_lattice(const Threefold& X, const CurveClass& q) {
  check_length(X, q.size(), "curve class");
  if (!X.curve_lattice()) return true;
  const auto& gens = *X.curve_lattice();
  const std::size_t m = X.rank();

  // Clear denominators across generators and target together.
  mpz_class scale = 1;
  auto absorb = [&](const CurveClass& c) {
    for (const auto& x : c.v) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.den().get_mpz_t());
  };
  for (const auto& g : gens) absorb(g);
  absorb(q);
  auto to_int = [&](const CurveClass& c) {
    IntVec out(m);
    for (std::size_t i = 0; i < m; ++i) out[i] = c[i].num() * (scale / c[i].den());
    return out;
  };

  std::vector<IntVec> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) rows.push_back(to_int(g));
  IntVec target = to_int(q);

  const auto pivots = echelon(std::move(rows), m);
  std::size_t p = 0;
  for (std::size_t col = 0; col < m; ++col) {
    if (p < pivots.size() && pivots[p].first == col) {
      const IntVec& row = pivots[p].second;
      if (!mpz_divisible_p(target[col].get_mpz_t(), row[col].get_mpz_t())) return false;
      const mpz_class f = target[col] / row[col];
      for (std::size_t c = col; c < m; ++c) target[c] -= f * row[c];
      ++p;
    } else if (target[col] != 0) {
      return false;
    }
  }
  return true;
}

bool is_integral(const DivClass& d) {
  return std::all_of(d.v.begin(), d.v.end(), [](const Rat& x) { return x.is_integer(); });
}

bool numerically_trivial(const Threefold& X, const DivClass& d) {
  check_length(X, d.size(), "divisor");
  const std::size_t m = X.rank();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      Rat s;
      for (std::size_t l = 0; l < m; ++l) s += d[l] * X.form(l, i, j);
      if (!s.is_zero()) return false;
    }
  return true;
}

}  // namespace chern3
