#pragma once

// Lattices in R^n x| SL_2(R): invariant Z-lattice saturation, the
// semidirect group law, and the cocompact, split and block constructions.

#include <arithlat/descent.hpp>
#include <arithlat/lattice_basis.hpp>

#include <optional>

namespace arithlat {

struct SemidirectElem {
  RatVector v;
  RatMatrix g;
};

SemidirectElem semidirect_identity(std::size_t n);
// (v, g)(w, h) = (v + g w, g h)
SemidirectElem semidirect_mul(const SemidirectElem& x, const SemidirectElem& y);
// (-g^{-1} v, g^{-1})
SemidirectElem semidirect_inv(const SemidirectElem& x);
bool operator==(const SemidirectElem& x, const SemidirectElem& y);

struct SaturationResult {
  LatticeBasis lattice;
  int iterations = 0;  // rounds run, counting the one that saw no change
  std::vector<Integer> denominator_trace;
};

constexpr int kDefaultMaxIter = 64;

// L <- L + sum_g (g L + g^{-1} L) until L stops changing.
SaturationResult invariant_lattice_saturation(const std::vector<RatMatrix>& witnesses, const LatticeBasis& start,
                                              int max_iter = kDefaultMaxIter);

enum class LatticeKind { Cocompact, Split, Multiplicity };
const char* kind_name(LatticeKind kind);

struct Block {
  int dimension = 0;
  int multiplicity = 0;
};

// "d:m,d:m"
std::vector<Block> parse_blocks(const std::string& spec);

struct BuildOptions {
  long height = 3;
  int word_length = 1;  // >1 closes the enumerated units under products
  int max_iter = kDefaultMaxIter;
  std::uint64_t seed = kDefaultSeed;
};

struct LatticeData {
  LatticeKind kind = LatticeKind::Cocompact;
  std::optional<QuaternionAlgebra> algebra;  // absent for the split lattice
  std::size_t n = 0;
  std::vector<Block> blocks;
  std::int64_t field_d = 0;
  QuadMatrix basis;  // Q-structure in ambient coordinates (identity when split)
  UnitRep rep;       // ambient action; empty when split
  std::vector<QuaternionElem> generators;
  std::vector<std::string> generator_keys;
  std::vector<RatMatrix> witnesses;
  LatticeBasis lattice = LatticeBasis::standard(1);
  int saturation_iterations = 0;
  std::vector<Integer> denominator_trace;
  GodementReport godement;
  std::optional<RamificationReport> ramification;
  bool cocompact = false;
};

LatticeData build_cocompact_lattice(const Rational& a, const Rational& b, int n, const BuildOptions& opts = {});
LatticeData build_split_lattice(int n);
LatticeData build_multiplicity_lattice(const std::vector<Block>& blocks, const Rational& a, const Rational& b,
                                       const BuildOptions& opts = {});

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerificationReport {
  std::vector<Check> checks;
  bool all_pass() const;
};

struct VerifyOptions {
  int word_length = 3;
  std::size_t closure_generators = 4;  // non-central generators fed to the closure
  std::size_t semidirect_generators = 4;
};

VerificationReport verify_lattice(const LatticeData& data, const VerifyOptions& opts = {});

}  // namespace arithlat
