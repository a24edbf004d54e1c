// Acceptance suite: one PASS/FAIL line per criterion, each with a wall-clock
// limit. Exit status is nonzero if any criterion fails or overruns.

#include <arithlat/latticekit.hpp>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "oracles.hpp"

using namespace arithlat;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

// Accumulates the first failure; later checks still run.
class Recorder {
public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok && pass_) {
      pass_ = false;
      first_failure_ = what;
    }
  }
  Outcome finish(const std::string& summary) const {
    std::ostringstream os;
    os << checks_ << " checks; " << (pass_ ? summary : "first failure: " + first_failure_);
    return {pass_, os.str()};
  }

private:
  bool pass_ = true;
  long checks_ = 0;
  std::string first_failure_;
};

std::string tuple_key(long a, long b) { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

bool integral(const RatMatrix& m) {
  for (const auto& e : m.entries())
    if (!is_integer(e)) return false;
  return true;
}

std::map<int, int> cg_direct(int r, int s) {
  std::map<int, int> out;
  for (int i = 0; i <= std::min(r, s); ++i) ++out[r + s - 2 * i];
  return out;
}

template <class F>
ErrorCode refusal(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return static_cast<ErrorCode>(0);
}

// ------------------------------------------------------------------ AC1

Outcome ac1() {
  Recorder rec;
  for (int r = 0; r <= 5; ++r)
    for (int s = 0; s <= 5; ++s) {
      const auto got = decompose(tensor_builder(sym_builder(r), sym_builder(s))).multiplicities;
      rec.expect(got == cg_direct(r, s), "decompose Sym^" + std::to_string(r) + " x Sym^" + std::to_string(s));
      rec.expect(cg_multiplicities(r, s).multiplicities == cg_direct(r, s), "cg_multiplicities");
    }
  return rec.finish("36 tensor products decompose as r+s-2i, i=0..min(r,s)");
}

// ------------------------------------------------------------------ AC2

Outcome ac2() {
  Recorder rec;
  for (const auto& [a, b] : {std::pair{2L, 3L}, {-1L, 3L}, {1L, 1L}, {-1L, -1L}}) {
    const QuaternionAlgebra alg(a, b);
    const RamificationReport ram = ramified_places(alg);
    const bool isotropic = oracle::brute_isotropic(a, b, 30);
    rec.expect(ram.division == !isotropic, tuple_key(a, b) + " division vs zero search");
    rec.expect(is_division(alg) == ram.division, tuple_key(a, b) + " is_division");
    rec.expect(split_at_infinity(alg) == (a > 0 || b > 0), tuple_key(a, b) + " split at infinity");

    int product = hilbert_symbol(a, b, Place::infinity());
    rec.expect(product == hilbert_symbol(b, a, Place::infinity()), tuple_key(a, b) + " symmetry at inf");
    std::vector<Integer> ramified;
    for (const auto& p : prime_divisors(Integer(2 * a * b))) {
      const int h = hilbert_symbol(a, b, Place::at(p));
      rec.expect(h == hilbert_symbol(b, a, Place::at(p)), tuple_key(a, b) + " symmetry at " + p.get_str());
      rec.expect(h == oracle::hilbert_formula(a, b, p), tuple_key(a, b) + " closed form at " + p.get_str());
      if (h == -1) ramified.push_back(p);
      product *= h;
    }
    rec.expect(product == 1, tuple_key(a, b) + " product formula");
    rec.expect(ram.ramified_primes == ramified, tuple_key(a, b) + " ramified primes");
  }
  return rec.finish("division, signature and ramification agree with brute force and closed forms");
}

// ------------------------------------------------------------------ AC3

Outcome ac3() {
  Recorder rec;
  const QuaternionAlgebra alg(2, 3);
  const UnitSet units = enumerate_norm_one(QuaternionOrder(alg), 10);
  const RatMatrix q{{-2, 0, 0}, {0, -3, 0}, {0, 0, 6}};
  std::vector<RatMatrix> witnesses;
  for (const auto& u : units.elements) {
    const RatMatrix m = adjoint_on_trace_zero(u).matrix;
    rec.expect(integral(m), "adjoint of " + unit_key(u) + " integral");
    rec.expect(determinant(m) == 1, "adjoint of " + unit_key(u) + " det 1");
    rec.expect(m.transpose() * q * m == q, "adjoint of " + unit_key(u) + " preserves the norm form");
    witnesses.push_back(m);
  }
  const SaturationResult sat = invariant_lattice_saturation(witnesses, LatticeBasis::standard(3));
  rec.expect(sat.lattice == LatticeBasis::standard(3), "saturation returns Z^3");
  rec.expect(sat.iterations <= 2, "saturation iterations " + std::to_string(sat.iterations));
  const GodementReport g = godement_report(units);
  rec.expect(!g.nontrivial_unipotent, "nontrivial unipotent unit");
  return rec.finish(std::to_string(units.elements.size()) + " units; L = Z^3 after " +
                    std::to_string(sat.iterations) + " iteration(s); no nontrivial unipotent");
}

// ------------------------------------------------------------------ AC4

Outcome ac4() {
  Recorder rec;
  std::ostringstream summary;
  BuildOptions opts;
  opts.height = 3;
  opts.word_length = 2;
  for (int n : {5, 7}) {
    const LatticeData d = build_cocompact_lattice(2, 3, n, opts);
    const std::string tag = "n=" + std::to_string(n) + " ";
    rec.expect(d.witnesses.size() >= 50, tag + "only " + std::to_string(d.witnesses.size()) + " units");
    for (std::size_t k = 0; k < d.witnesses.size(); ++k) {
      rec.expect(determinant(d.witnesses[k]) == 1, tag + "det of " + d.generator_keys[k]);
      const auto w = solve(d.basis, d.rep(d.generators[k]) * d.basis);
      const auto wr = w ? to_rational(*w) : std::nullopt;
      rec.expect(wr && *wr == d.witnesses[k], tag + "rational recomputation of " + d.generator_keys[k]);
    }
    rec.expect(d.saturation_iterations <= 20, tag + "saturation took " + std::to_string(d.saturation_iterations));
    const VerificationReport v = verify_lattice(d);
    for (const auto& c : v.checks) rec.expect(c.pass, tag + c.name + ": " + c.detail);
    summary << tag << d.witnesses.size() << " units, " << d.saturation_iterations << " rounds, denominator "
            << d.lattice.denominator() << "; ";
  }
  return rec.finish(summary.str() + "verify passes");
}

// ------------------------------------------------------------------ AC5

Outcome ac5() {
  Recorder rec;
  for (const auto& [a, b] : {std::pair{2L, 3L}, {-1L, 3L}}) {
    const QuaternionAlgebra alg(a, b);
    const UnitSet units = enumerate_norm_one(QuaternionOrder(alg), 3);
    const NonrationalityCertificate cert = nonrationality_certificate(units);
    const std::string tag = tuple_key(a, b) + " ";
    rec.expect(cert.span_dim == 4, tag + "span dim " + std::to_string(cert.span_dim));
    rec.expect(cert.closed, tag + "span not closed");
    rec.expect(cert.equals_psi_D, tag + "span differs from psi(D)");
    rec.expect(cert.division, tag + "norm form isotropic");
    rec.expect(cert.pass, tag + "certificate");
    for (int n : {2, 4})
      rec.expect(refusal([&] { build_cocompact_lattice(a, b, n); }) == ErrorCode::EvenDimension,
                 tag + "n=" + std::to_string(n) + " not refused with EvenDimension");
    for (int m : {1, 3, 5})
      rec.expect(refusal([&] { rationalize_sym_even(m, units); }) == ErrorCode::OddDegree,
                 tag + "m=" + std::to_string(m) + " not refused with OddDegree");
  }
  return rec.finish("certificates pass; even n and odd m refused");
}

// ------------------------------------------------------------------ AC6

Outcome ac6() {
  Recorder rec;
  const LatticeData d = build_multiplicity_lattice({{4, 2}}, 2, 3);
  rec.expect(d.n == 8 && d.lattice.rank() == 8, "rank " + std::to_string(d.lattice.rank()));
  for (std::size_t k = 0; k < d.witnesses.size(); ++k)
    rec.expect(determinant(d.witnesses[k]) == 1, "det of " + d.generator_keys[k]);
  const VerificationReport v = verify_lattice(d);
  for (const auto& c : v.checks) rec.expect(c.pass, c.name + ": " + c.detail);
  rec.expect(refusal([] { build_multiplicity_lattice({{2, 1}}, 2, 3); }) == ErrorCode::OddMultiplicityOfEven,
             "[(2,1)] not refused");
  std::ostringstream os;
  os << "[(4,2)]: rank 8, " << d.witnesses.size() << " witnesses, denominator " << d.lattice.denominator()
     << "; [(2,1)] refused";
  return rec.finish(os.str());
}

// ------------------------------------------------------------------ AC7

Outcome ac7() {
  Recorder rec;
  for (int n = 1; n <= 8; ++n) {
    const LatticeData d = build_split_lattice(n);
    const std::string tag = "n=" + std::to_string(n) + " ";
    const LatticeBasis zn = LatticeBasis::standard(static_cast<std::size_t>(n));
    for (std::size_t k = 0; k < d.witnesses.size(); ++k) {
      rec.expect(integral(d.witnesses[k]), tag + d.generator_keys[k] + " integral");
      rec.expect(zn.maps_into_self(d.witnesses[k]) && zn.maps_into_self(inverse(d.witnesses[k])),
                 tag + d.generator_keys[k] + " preserves Z^n");
    }
    rec.expect(d.lattice == zn, tag + "lattice is Z^n");
    const RatMatrix t = sym_power(RatMatrix{{1, 1}, {0, 1}}, n - 1).matrix;
    rec.expect(d.witnesses.at(1) == t && is_unipotent(t), tag + "Sym(T) unipotent");
    bool flagged = false;
    for (const auto& l : d.godement.unipotent_labels) flagged = flagged || l == "T";
    rec.expect(flagged, tag + "T not flagged");
    if (n >= 2) rec.expect(d.godement.nontrivial_unipotent && !d.cocompact, tag + "non-cocompact flag");
  }
  return rec.finish("n = 1..8 integral, Z^n invariant, Sym(T) flagged unipotent");
}

// ------------------------------------------------------------------ AC8

Outcome ac8() {
  Recorder rec;
  for (const auto& [a, b] : {std::pair{2L, 3L}, {-1L, 3L}, {5L, 7L}}) {
    const QuaternionOrder order(QuaternionAlgebra(a, b));
    for (long h = 1; h <= 6; ++h) {
      std::vector<oracle::Quad> got;
      for (const auto& u : enumerate_norm_one(order, h).elements)
        got.push_back({u[0].get_num().get_si(), u[1].get_num().get_si(), u[2].get_num().get_si(),
                       u[3].get_num().get_si()});
      rec.expect(got == oracle::naive_units(a, b, h), tuple_key(a, b) + " H=" + std::to_string(h));
    }
  }

  std::mt19937_64 rng(0xAC8);
  auto rand_rows = [&](std::size_t rows) {
    oracle::IntRows m(rows, std::vector<mpz_class>(3));
    for (auto& r : m)
      for (auto& e : r) e = draw_int(rng, -6, 6);
    return m;
  };
  auto to_matrix = [](const oracle::IntRows& m) {
    IntMatrix out(m.size(), 3);
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = 0; j < 3; ++j) out(i, j) = m[i][j];
    return out;
  };
  int instances = 0;
  while (instances < 100) {
    const oracle::IntRows x = rand_rows(3), y = rand_rows(2);
    if (oracle::minor_gcd(x) == 0) continue;
    ++instances;
    oracle::IntRows both = x;
    both.insert(both.end(), y.begin(), y.end());
    const LatticeBasis lx = hnf(to_matrix(x));
    const LatticeBasis sum = lattice_sum(lx, LatticeBasis::from_rows(to_rational(to_matrix(both))));
    const IntMatrix& h = lx.hnf();
    rec.expect(h(0, 0) * h(1, 1) * h(2, 2) == oracle::minor_gcd(x), "hnf index");
    rec.expect(sum == hnf(to_matrix(both)), "lattice_sum of nested lattices");
    for (int t = 0; t < 4; ++t) {
      const oracle::IntRows v = rand_rows(1);
      RatVector rv(v[0].begin(), v[0].end());
      rec.expect(lx.contains(rv) == oracle::in_row_lattice(x, v[0]), "hnf membership");
      rec.expect(sum.contains(rv) == oracle::in_row_lattice(both, v[0]), "lattice_sum membership");
    }
  }
  return rec.finish("units identical for H<=6 on 3 algebras; 100 HNF/sum instances agree with minor oracle");
}

// ------------------------------------------------------------------ AC9

Outcome ac9() {
  Recorder rec;
  std::mt19937_64 rng(0xAC9);
  for (int t = 0; t < 500; ++t) {
    const RatMatrix g = random_unimodular(rng), h = random_unimodular(rng);
    const int m = static_cast<int>(draw_int(rng, 0, 6));
    rec.expect(sym_power(RatMatrix(g * h), m).matrix == sym_power(g, m).matrix * sym_power(h, m).matrix,
               "sym_power functoriality");
  }
  for (int t = 0; t < 500; ++t) {
    const RatMatrix g1 = random_unimodular(rng), g2 = random_unimodular(rng);
    const int r = static_cast<int>(draw_int(rng, 0, 3)), s = static_cast<int>(draw_int(rng, 0, 3));
    const RatMatrix lhs = tensor(sym_power(RatMatrix(g1 * g2), r), sym_power(RatMatrix(g1 * g2), s)).matrix;
    const RatMatrix rhs = tensor(sym_power(g1, r), sym_power(g1, s)).matrix *
                          tensor(sym_power(g2, r), sym_power(g2, s)).matrix;
    rec.expect(lhs == rhs, "tensor functoriality");
  }
  const QuaternionAlgebra alg(2, 3);
  const UnitSet units = sample_group(enumerate_norm_one(QuaternionOrder(alg), 3), 2);
  const long count = static_cast<long>(units.elements.size());
  for (int t = 0; t < 500; ++t) {
    const auto& u = units.elements[static_cast<std::size_t>(draw_int(rng, 0, count - 1))];
    const auto& v = units.elements[static_cast<std::size_t>(draw_int(rng, 0, count - 1))];
    rec.expect(adjoint_on_trace_zero(u * v).matrix ==
                   adjoint_on_trace_zero(u).matrix * adjoint_on_trace_zero(v).matrix,
               "adjoint functoriality");
  }
  const SemidirectElem e = semidirect_identity(3);
  auto elem = [&] {
    RatVector v;
    for (int k = 0; k < 3; ++k) v.push_back(make_rational(draw_int(rng, -9, 9), draw_int(rng, 1, 4)));
    return SemidirectElem{v, sym_power(random_unimodular(rng), 2).matrix};
  };
  for (int t = 0; t < 1000; ++t) {
    const SemidirectElem x = elem(), y = elem(), z = elem();
    rec.expect(semidirect_mul(semidirect_mul(x, y), z) == semidirect_mul(x, semidirect_mul(y, z)), "associativity");
    rec.expect(semidirect_mul(x, e) == x && semidirect_mul(e, x) == x, "identity");
    rec.expect(semidirect_mul(x, semidirect_inv(x)) == e && semidirect_mul(semidirect_inv(x), x) == e, "inverse");
  }
  const QuadField k(3);
  const GaloisContext ctx{3};
  auto scalar = [&] { return QuadExt(make_rational(draw_int(rng, -5, 5), draw_int(rng, 1, 3)), draw_int(rng, -5, 5), k); };
  for (int t = 0; t < 500; ++t) {
    const QuadExt x = scalar(), y = scalar();
    rec.expect((x * y).conjugate() == x.conjugate() * y.conjugate(), "conjugation multiplicative");
    rec.expect((x + y).conjugate() == x.conjugate() + y.conjugate(), "conjugation additive");
    rec.expect(x.conjugate().conjugate() == x, "conjugation involutive");
    const QuadMatrix a{{x, y}, {scalar(), scalar()}}, b{{scalar(), scalar()}, {y, x}};
    rec.expect(ctx.apply(QuadMatrix(a * b)) == ctx.apply(a) * ctx.apply(b), "f_sigma multiplicative");
    rec.expect(ctx.apply(ctx.apply(a)) == a, "f_sigma involutive");
  }
  return rec.finish("functoriality x1500, semidirect axioms x1000, Galois laws x500");
}

struct Criterion {
  const char* id;
  const char* title;
  double limit_s;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const Criterion criteria[] = {
      {"AC1", "Clebsch-Gordan conformance, 0 <= r,s <= 5", 10, ac1},
      {"AC2", "division certification", 30, ac2},
      {"AC3", "odd case n = 3 on (2,3), H = 10", 60, ac3},
      {"AC4", "odd case n in {5,7}", 300, ac4},
      {"AC5", "even case refusals and certificates", 60, ac5},
      {"AC6", "multiplicity spec [(4,2)] and [(2,1)]", 300, ac6},
      {"AC7", "split lattices n <= 8", 10, ac7},
      {"AC8", "oracle equivalence", 60, ac8},
      {"AC9", "algebraic property battery", 60, ac9},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_s;
    const bool pass = out.pass && in_time;
    if (!pass) ++failures;
    std::printf("%s %s  %s  [%.2fs / limit %.0fs, exact]  %s%s\n", c.id, pass ? "PASS" : "FAIL", c.title, secs,
                c.limit_s, out.detail.c_str(), in_time ? "" : "  (time limit exceeded)");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
