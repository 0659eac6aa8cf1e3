#include "chern3/dzero.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <set>
#include <thread>

#include "chern3/ci.hpp"
#include "chern3/error.hpp"

namespace chern3 {

namespace {

Rat expected_dim_at(const Threefold& X, long k, const Rat& c) {
  return expected_dim(X, ChernData{2, DivClass({Rat(k)}), CurveClass({c}), {}});
}

// floor / ceil division for the lattice range
long floor_div(long a, long b) { return a / b - ((a % b != 0) && ((a < 0) != (b < 0))); }
long ceil_div(long a, long b) { return -floor_div(-a, b); }

long mod(const mpz_class& x, long q) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), static_cast<unsigned long>(q));
  return r.get_si();
}

std::string poly_in_k(const mpz_class& P, const mpz_class& Q) {
  std::string s;
  if (P != 0) {
    if (P == 1) s = "k^2";
    else if (P == -1) s = "-k^2";
    else s = P.get_str() + "k^2";
  }
  if (Q != 0) {
    if (s.empty()) return Q.get_str();
    s += Q > 0 ? " + " + Q.get_str() : " - " + mpz_class(-Q).get_str();
  }
  return s.empty() ? "0" : s;
}

long lattice_step_of(const Threefold& X) {
  const Rat& p = (*X.curve_lattice())[0][0];
  if (!p.is_integer() || p.sign() <= 0 || !p.num().fits_slong_p())
    throw Error(ErrorKind::InvalidArgument,
                "lattice generator must pair to a positive integer with H, got " + p.str());
  return p.num().get_si();
}

void check_range(const IntRange& r, const char* what) {
  if (r.lo > r.hi)
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " range is empty");
}

}  // namespace

std::string_view to_string(DZeroStatus s) {
  switch (s) {
    case DZeroStatus::Solvable: return "solvable";
    case DZeroStatus::Obstructed: return "obstructed";
    case DZeroStatus::IdenticallyZero: return "identically-zero";
    case DZeroStatus::NoCertificate: return "no-witness-no-certificate";
  }
  return "?";
}

AffineCondition dzero_condition(const Threefold& X) {
  if (X.rank() != 1)
    throw Error(ErrorKind::UnsupportedPicardRank,
                "need one divisor generator, got " + std::to_string(X.rank()));
  if (!X.curve_lattice() || X.curve_lattice()->size() != 1)
    throw Error(ErrorKind::MissingCurveLattice, "need a single curve lattice generator");

  AffineCondition cond{Rat(0), Rat(0), Rat(0)};
  if (!numerically_trivial(X, X.c1X())) {
    const Rat& t = X.c1X()[0];
    const Rat& d = X.form(0, 0, 0);
    const Rat s = pair_div_curve(X, X.c1X(), X.c2X()).value;
    // Delta.H = 4c - d k^2 for c1 = kH
    cond = {Rat(2) * t, -t * d / Rat(2), Rat(1) - s / Rat(6)};
  }

  for (const auto& [k, c] : {std::pair{0L, 0L}, {1L, 1L}, {-2L, 3L}, {5L, -7L}})
    if (cond.eval(k, Rat(c)) != expected_dim_at(X, k, Rat(c)))
      throw Error(ErrorKind::ClaimViolation, "affine condition disagrees with expected_dim");
  return cond;
}

IntegerRelation normalize(const AffineCondition& cond) {
  mpz_class L = 1;
  for (const Rat* x : {&cond.a, &cond.b, &cond.e})
    mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), x->den().get_mpz_t());
  IntegerRelation r{cond.a.num() * (L / cond.a.den()), cond.b.num() * (L / cond.b.den()),
                    cond.e.num() * (L / cond.e.den())};
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), r.A.get_mpz_t(), r.B.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), r.E.get_mpz_t());
  if (g == 0) return {0, 0, 0};
  r.A /= g;
  r.B /= g;
  r.E /= g;
  if (r.A < 0 || (r.A == 0 && (r.B < 0 || (r.B == 0 && r.E < 0)))) {
    r.A = -r.A;
    r.B = -r.B;
    r.E = -r.E;
  }
  return r;
}

std::string IntegerRelation::str() const {
  if (A == 0 && B == 0 && E == 0) return "0 = 0";
  std::string lhs = A == 0 ? "0" : (A == 1 ? "c" : A.get_str() + "c");
  const mpz_class P = -B;
  const mpz_class Q = -E;
  mpz_class g;
  mpz_gcd(g.get_mpz_t(), P.get_mpz_t(), Q.get_mpz_t());
  if (P > 0 && Q != 0 && g > 1)
    return lhs + " = " + g.get_str() + "(" + poly_in_k(P / g, Q / g) + ")";
  return lhs + " = " + poly_in_k(P, Q);
}

long max_enumeration() {
  constexpr long kDefault = 1'000'000;
  const char* env = std::getenv("CHERN3_MAX_ENUM");
  if (env == nullptr || *env == '\0') return kDefault;
  char* end = nullptr;
  const long v = std::strtol(env, &end, 10);
  if (*end != '\0' || v <= 0)
    throw Error(ErrorKind::InvalidArgument, "CHERN3_MAX_ENUM must be a positive integer");
  return v;
}

std::vector<std::pair<long, long>> enumerate_zeros(const Threefold& X, IntRange k, IntRange c) {
  check_range(k, "k");
  check_range(c, "c");
  const long step = lattice_step_of(X);
  const long n_lo = ceil_div(c.lo, step);
  const long n_hi = floor_div(c.hi, step);

  auto scan = [&](long k_lo, long k_hi) {
    std::vector<std::pair<long, long>> out;
    for (long kk = k_lo; kk <= k_hi; ++kk)
      for (long n = n_lo; n <= n_hi; ++n)
        if (expected_dim_at(X, kk, Rat(n * step)).is_zero()) out.emplace_back(kk, n * step);
    return out;
  };

  const long workers =
      std::clamp<long>(static_cast<long>(std::thread::hardware_concurrency()), 1, 8);
  const long chunk = (k.count() + workers - 1) / workers;
  std::vector<std::future<std::vector<std::pair<long, long>>>> parts;
  for (long lo = k.lo; lo <= k.hi; lo += chunk)
    parts.push_back(std::async(std::launch::async, scan, lo, std::min(k.hi, lo + chunk - 1)));

  std::vector<std::pair<long, long>> all;
  for (auto& f : parts) {
    auto part = f.get();
    all.insert(all.end(), part.begin(), part.end());
  }
  std::sort(all.begin(), all.end());
  return all;
}

DZeroReport solve_dzero(const DZeroProblem& problem) {
  const Threefold& X = problem.threefold;
  check_range(problem.k, "k");
  check_range(problem.c, "c");

  DZeroReport rep;
  rep.label = problem.label;
  rep.k = problem.k;
  rep.c = problem.c;
  rep.condition = dzero_condition(X);
  rep.relation = normalize(rep.condition);
  const long step = lattice_step_of(X);
  rep.lattice_step = Rat(step);

  const long n_lo = ceil_div(problem.c.lo, step);
  const long n_hi = floor_div(problem.c.hi, step);
  const long lattice_c = std::max(0L, n_hi - n_lo + 1);
  rep.enumerated_points = problem.k.count() * lattice_c;
  if (rep.enumerated_points > max_enumeration())
    throw Error(ErrorKind::EnumerationLimit,
                std::to_string(rep.enumerated_points) + " lattice points exceed the cap of " +
                    std::to_string(max_enumeration()));

  const IntegerRelation& rel = rep.relation;
  // In the lattice coordinate n (c = n * step): A' n + B k^2 + E = 0.
  const mpz_class A = rel.A * step;
  auto rhs_residues = [&](long q) {
    std::set<long> vals;
    for (long r = 0; r < q; ++r) vals.insert(mod(-(rel.B * r * r + rel.E), q));
    return std::vector<long>(vals.begin(), vals.end());
  };
  auto obstruction_at = [&](long q) -> std::optional<Obstruction> {
    mpz_class g;
    mpz_gcd_ui(g.get_mpz_t(), A.get_mpz_t(), static_cast<unsigned long>(q));
    const long gl = g == 0 ? q : g.get_si();
    for (long r = 0; r < q; ++r)
      if (mod(rel.B * r * r + rel.E, gl) == 0) return std::nullopt;
    Obstruction ob;
    ob.modulus = q;
    ob.rhs_residues = rhs_residues(q);
    const std::string lhs = A == 0 ? "0" : A.get_str() + (step == 1 ? "c" : "n");
    const std::string rhs = poly_in_k(-rel.B, -rel.E);
    std::string vals;
    for (long v : ob.rhs_residues) vals += (vals.empty() ? "" : ", ") + std::to_string(v);
    if (gl == q) {
      ob.description = "mod " + std::to_string(q) + ": " + lhs + " vanishes but " + rhs +
                       " only takes the residues {" + vals + "}";
      if (q == 2) ob.description += " (LHS even, RHS odd)";
    } else {
      ob.description = "mod " + std::to_string(q) + ": " + rhs + " is never divisible by " +
                       std::to_string(gl);
    }
    if (step != 1) ob.description += "; c = " + std::to_string(step) + "n";
    return ob;
  };

  if (rel.A == 0 && rel.B == 0 && rel.E == 0) {
    rep.status = DZeroStatus::IdenticallyZero;
  } else if (A != 0) {
    const mpz_class absA = abs(A);
    if (!absA.fits_slong_p() || absA > 10'000'000)
      throw Error(ErrorKind::InvalidArgument, "coefficient of c too large for the congruence scan");
    const long M = absA.get_si();
    for (long q = 2; q <= M && !rep.obstruction; ++q)
      if (M % q == 0) rep.obstruction = obstruction_at(q);
    if (rep.obstruction) {
      rep.status = DZeroStatus::Obstructed;
    } else {
      SolutionClasses cls{M, {}};
      for (long r = 0; r < M; ++r)
        if (mod(rel.B * r * r + rel.E, M) == 0) cls.k_residues.push_back(r);
      rep.classes = std::move(cls);
      rep.status = DZeroStatus::Solvable;
    }
  } else {
    // c drops out: need B k^2 + E = 0.
    const long bound = 1000;
    for (long q = 2; q <= bound && !rep.obstruction; ++q) rep.obstruction = obstruction_at(q);
    if (rep.obstruction) {
      rep.status = DZeroStatus::Obstructed;
    } else if (rel.B != 0 && mpz_divisible_p(rel.E.get_mpz_t(), rel.B.get_mpz_t())) {
      const mpz_class sq = -rel.E / rel.B;
      if (sq >= 0 && mpz_perfect_square_p(sq.get_mpz_t())) {
        const mpz_class root = sqrt(sq);
        rep.classes = SolutionClasses{0, {root.get_si(), -root.get_si()}};
        rep.status = DZeroStatus::Solvable;
      }
    }
  }

  if (rep.status != DZeroStatus::IdenticallyZero && rep.status != DZeroStatus::Obstructed) {
    for (long k = problem.k.lo; k <= problem.k.hi; ++k) {
      const mpz_class R = -(rel.B * k * k + rel.E);
      if (A == 0) {
        if (R == 0)
          for (long n = n_lo; n <= n_hi; ++n) rep.witnesses.emplace_back(k, n * step);
      } else if (mpz_divisible_p(R.get_mpz_t(), A.get_mpz_t())) {
        const mpz_class n = R / A;
        if (n >= n_lo && n <= n_hi) rep.witnesses.emplace_back(k, n.get_si() * step);
      }
    }
    std::sort(rep.witnesses.begin(), rep.witnesses.end());
    if (rep.status == DZeroStatus::NoCertificate && !rep.witnesses.empty())
      rep.status = DZeroStatus::Solvable;
  }

  const auto zeros = enumerate_zeros(X, problem.k, problem.c);
  rep.enumerated_zeros = static_cast<long>(zeros.size());
  if (rep.status == DZeroStatus::IdenticallyZero)
    rep.enumeration_agrees = rep.enumerated_zeros == rep.enumerated_points;
  else
    rep.enumeration_agrees = zeros == rep.witnesses;
  if (!rep.enumeration_agrees)
    throw Error(ErrorKind::ClaimViolation,
                problem.label + ": congruence analysis and exhaustive enumeration disagree");
  return rep;
}

bool PaperClaimsReport::all_ok() const {
  return std::all_of(entries.begin(), entries.end(), [](const ClaimEntry& e) { return e.ok; });
}

PaperClaimsReport check_paper_claims() {
  struct Expectation {
    const char* preset;
    bool solvable;
    std::optional<IntegerRelation> relation;
  };
  const std::vector<Expectation> cases = {
      {"[1] in P4", false, std::nullopt},
      {"[2] in P4", true, IntegerRelation{2, -1, -1}},  // 2c = k^2 + 1
      {"[3] in P4", false, std::nullopt},
      {"[4] in P4", false, std::nullopt},
      {"[2,2] in P5", false, std::nullopt},
      {"[2,3] in P5", true, IntegerRelation{2, -3, -3}},  // 2c = 3(k^2 + 1)
      {"[2,2,2] in P6", false, std::nullopt},
  };

  PaperClaimsReport out;
  for (const auto& ex : cases) {
    ClaimEntry entry;
    entry.preset = ex.preset;
    entry.expect_solvable = ex.solvable;
    entry.expected_relation = ex.relation;
    try {
      const CIPreset p = CIPreset::parse(ex.preset);
      entry.report = solve_dzero({build_ci(p), p.name(), {-50, 50}, {-50, 50}});
      const DZeroReport& r = entry.report;
      if (ex.solvable) {
        entry.ok = r.status == DZeroStatus::Solvable && r.relation == *ex.relation &&
                   !r.witnesses.empty();
        entry.note = entry.ok ? "D = 0 iff " + r.relation.str()
                              : "expected " + ex.relation->str() + ", got " + r.relation.str() +
                                    " (" + std::string(to_string(r.status)) + ")";
      } else {
        entry.ok = r.status == DZeroStatus::Obstructed && r.enumerated_zeros == 0;
        entry.note = entry.ok ? r.obstruction->description
                              : "expected an obstruction, got " + std::string(to_string(r.status));
      }
    } catch (const Error& e) {
      entry.ok = false;
      entry.note = e.what();
    }
    out.entries.push_back(std::move(entry));
  }
  return out;
}

PaperClaimsReport verify_paper_claims() {
  PaperClaimsReport rep = check_paper_claims();
  for (const auto& e : rep.entries)
    if (!e.ok) throw Error(ErrorKind::ClaimViolation, e.preset + ": " + e.note);
  return rep;
}

}  // namespace chern3
