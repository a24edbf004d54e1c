#include <arithlat/latticekit.hpp>

#include <algorithm>
#include <cctype>
#include <sstream>

namespace arithlat {

SemidirectElem semidirect_identity(std::size_t n) { return {RatVector(n), RatMatrix::identity(n)}; }

SemidirectElem semidirect_mul(const SemidirectElem& x, const SemidirectElem& y) {
  const std::size_t n = x.v.size();
  if (y.v.size() != n || x.g.rows() != n || x.g.cols() != n || y.g.rows() != n || y.g.cols() != n)
    fail(ErrorCode::DimensionMismatch, "semidirect product of different dimensions");
  RatVector v = x.g.apply(y.v);
  for (std::size_t k = 0; k < n; ++k) v[k] += x.v[k];
  return {std::move(v), x.g * y.g};
}

SemidirectElem semidirect_inv(const SemidirectElem& x) {
  const std::size_t n = x.v.size();
  if (x.g.rows() != n || x.g.cols() != n) fail(ErrorCode::DimensionMismatch, "malformed semidirect element");
  const RatMatrix gi = inverse(x.g);
  RatVector v = gi.apply(x.v);
  for (auto& e : v) e = -e;
  return {std::move(v), gi};
}

bool operator==(const SemidirectElem& x, const SemidirectElem& y) { return x.v == y.v && x.g == y.g; }

SaturationResult invariant_lattice_saturation(const std::vector<RatMatrix>& witnesses, const LatticeBasis& start,
                                              int max_iter) {
  if (max_iter < 1) fail(ErrorCode::InvalidInput, "max_iter must be positive");
  const std::size_t n = start.rank();
  std::vector<RatMatrix> moves;
  for (const auto& g : witnesses) {
    if (g.rows() != n || g.cols() != n) fail(ErrorCode::DimensionMismatch, "witness does not act on the lattice");
    const Rational det = determinant(g);
    if (det != 1 && det != -1) fail(ErrorCode::NotUnimodular, "witness determinant " + to_string(det));
    moves.push_back(g.transpose());
    moves.push_back(inverse(g).transpose());
  }

  SaturationResult out{start, 0, {start.denominator()}};
  for (int iter = 1; iter <= max_iter; ++iter) {
    const RatMatrix rows = out.lattice.rational_basis();
    std::vector<Rational> entries = rows.entries();
    for (const auto& m : moves) {
      const RatMatrix img = rows * m;
      entries.insert(entries.end(), img.entries().begin(), img.entries().end());
    }
    const std::size_t count = entries.size() / n;
    const LatticeBasis next = LatticeBasis::from_rows(RatMatrix(count, n, std::move(entries)));
    out.denominator_trace.push_back(next.denominator());
    out.iterations = iter;
    if (next == out.lattice) return out;
    out.lattice = next;
  }
  std::ostringstream msg;
  msg << "no invariant lattice after " << max_iter << " rounds; denominators";
  for (const auto& d : out.denominator_trace) msg << " " << d;
  fail(ErrorCode::NoStabilization, msg.str());
}

const char* kind_name(LatticeKind kind) {
  switch (kind) {
    case LatticeKind::Cocompact: return "cocompact";
    case LatticeKind::Split: return "split";
    case LatticeKind::Multiplicity: return "multiplicity";
  }
  return "?";
}

std::vector<Block> parse_blocks(const std::string& spec) {
  auto number = [&](const std::string& item, const std::string& s) {
    if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
      fail(ErrorCode::InvalidInput, "block '" + item + "' is not d:m");
    return std::stoi(s);
  };
  std::vector<Block> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = spec.find(',', pos);
    const std::string item = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    const auto colon = item.find(':');
    if (colon == std::string::npos) fail(ErrorCode::InvalidInput, "block '" + item + "' is not d:m");
    out.push_back({number(item, item.substr(0, colon)), number(item, item.substr(colon + 1))});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  for (const auto& b : out)
    if (b.dimension < 1 || b.multiplicity < 1) fail(ErrorCode::InvalidInput, "block entries must be positive");
  return out;
}

namespace {

struct CheckedAlgebra {
  QuaternionAlgebra algebra;
  RamificationReport ramification;
};

CheckedAlgebra require_cocompact_algebra(const Rational& a, const Rational& b) {
  const QuaternionAlgebra alg(a, b);
  RamificationReport ram = ramified_places(alg);
  if (!ram.division) fail(ErrorCode::NotDivision, "(" + to_string(a) + "," + to_string(b) + ") splits over Q");
  if (!ram.split_at_infinity)
    fail(ErrorCode::NotSplitAtInfinity, "(" + to_string(a) + "," + to_string(b) + ") is definite");
  return {alg, std::move(ram)};
}

UnitSet collect_units(const QuaternionAlgebra& alg, const BuildOptions& opts) {
  UnitSet units = enumerate_norm_one(QuaternionOrder(alg), opts.height);
  if (opts.word_length > 1) units = sample_group(units, opts.word_length);
  return units;
}

void finish(LatticeData& data, int max_iter) {
  const SaturationResult sat =
      invariant_lattice_saturation(data.witnesses, LatticeBasis::standard(data.n), max_iter);
  data.lattice = sat.lattice;
  data.saturation_iterations = sat.iterations;
  data.denominator_trace = sat.denominator_trace;
  data.godement = godement_report(data.witnesses, data.generator_keys);
  data.cocompact = data.ramification && data.ramification->division && !data.godement.nontrivial_unipotent;
}

LatticeData from_structure(LatticeKind kind, const CheckedAlgebra& checked, const QStructure& q) {
  LatticeData data;
  data.kind = kind;
  data.algebra = q.units.empty() ? checked.algebra : q.units.front().algebra();
  data.ramification = checked.ramification;
  data.n = q.dim();
  data.field_d = q.field_d;
  data.basis = q.basis;
  data.rep = q.rep;
  data.generators = q.units;
  data.generator_keys = q.keys;
  data.witnesses = q.witnesses;
  return data;
}

RatMatrix split_generator(char name) {
  return name == 'S' ? RatMatrix{{0, -1}, {1, 0}} : RatMatrix{{1, 1}, {0, 1}};
}

}  // namespace

LatticeData build_cocompact_lattice(const Rational& a, const Rational& b, int n, const BuildOptions& opts) {
  if (n < 1) fail(ErrorCode::InvalidInput, "dimension must be positive");
  const CheckedAlgebra checked = require_cocompact_algebra(a, b);
  if (n % 2 == 0)
    fail(ErrorCode::EvenDimension, "n = " + std::to_string(n) + " is even: Sym^" + std::to_string(n - 1) +
                                       " o psi has no rational form");
  if (n < 3) fail(ErrorCode::InvalidInput, "cocompact construction needs odd n >= 3");
  const UnitSet units = collect_units(checked.algebra, opts);
  LatticeData data = from_structure(LatticeKind::Cocompact, checked, rationalize_sym_even(n - 1, units, opts.seed));
  data.blocks = {{n, 1}};
  finish(data, opts.max_iter);
  return data;
}

LatticeData build_split_lattice(int n) {
  if (n < 1) fail(ErrorCode::InvalidInput, "dimension must be positive");
  LatticeData data;
  data.kind = LatticeKind::Split;
  data.n = static_cast<std::size_t>(n);
  data.blocks = {{n, 1}};
  data.basis = QuadMatrix::identity(data.n);
  for (char name : {'S', 'T'}) {
    data.generator_keys.emplace_back(1, name);
    data.witnesses.push_back(sym_power(split_generator(name), n - 1).matrix);
  }
  finish(data, kDefaultMaxIter);
  return data;
}

LatticeData build_multiplicity_lattice(const std::vector<Block>& blocks, const Rational& a, const Rational& b,
                                       const BuildOptions& opts) {
  if (blocks.empty()) fail(ErrorCode::InvalidInput, "empty block spec");
  for (const auto& blk : blocks) {
    if (blk.dimension < 1 || blk.multiplicity < 1) fail(ErrorCode::InvalidInput, "block entries must be positive");
    if (blk.dimension % 2 == 0 && blk.multiplicity % 2 != 0)
      fail(ErrorCode::OddMultiplicityOfEven, "dimension " + std::to_string(blk.dimension) + " has multiplicity " +
                                                 std::to_string(blk.multiplicity));
  }
  const CheckedAlgebra checked = require_cocompact_algebra(a, b);
  const UnitSet units = collect_units(checked.algebra, opts);

  std::vector<QStructure> parts;
  for (const auto& blk : blocks) {
    const bool odd = blk.dimension % 2 == 1;
    const QStructure q = odd ? rationalize_sym_even(blk.dimension - 1, units, opts.seed)
                             : build_odd_pair_structure(blk.dimension / 2, units, opts.seed);
    const int copies = odd ? blk.multiplicity : blk.multiplicity / 2;
    for (int c = 0; c < copies; ++c) parts.push_back(q);
  }

  QStructure sum = parts.front();
  for (std::size_t k = 1; k < parts.size(); ++k) {
    const QStructure& p = parts[k];
    sum.basis = block_diag(sum.basis, p.basis);
    sum.ambient_dim += p.ambient_dim;
    sum.rep = [l = sum.rep, r = p.rep](const QuaternionElem& u) { return block_diag(l(u), r(u)); };
    for (std::size_t i = 0; i < sum.witnesses.size(); ++i)
      sum.witnesses[i] = block_diag(sum.witnesses[i], p.witnesses[i]);
  }
  LatticeData data = from_structure(LatticeKind::Multiplicity, checked, sum);
  data.blocks = blocks;
  finish(data, opts.max_iter);
  return data;
}

bool VerificationReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return !checks.empty();
}

namespace {

// Recompute the restricted matrix of u from the ambient action.
std::optional<RatMatrix> recompute(const LatticeData& data, const QuaternionElem& u) {
  const auto w = solve(data.basis, data.rep(u) * data.basis);
  if (!w) return std::nullopt;
  return to_rational(*w);
}

bool is_central(const RatMatrix& w) {
  const RatMatrix id = RatMatrix::identity(w.rows());
  return w == id || w == Rational(-1) * id;
}

bool stabilizes(const LatticeBasis& lattice, const RatMatrix& g) {
  return lattice.maps_into_self(g) && lattice.maps_into_self(inverse(g));
}

Check check_recomputation(const LatticeData& data) {
  Check c{"witness_recomputation", true, ""};
  for (std::size_t k = 0; k < data.witnesses.size(); ++k) {
    std::optional<RatMatrix> w;
    if (data.rep) {
      w = recompute(data, data.generators[k]);
    } else {
      w = sym_power(split_generator(data.generator_keys[k].at(0)), static_cast<int>(data.n) - 1).matrix;
    }
    if (!w || *w != data.witnesses[k]) {
      c.pass = false;
      c.detail = "witness of " + data.generator_keys[k] + (w ? " differs" : " is not rational");
      return c;
    }
    const Rational det = determinant(*w);
    if (det != 1 && det != -1) {
      c.pass = false;
      c.detail = "witness of " + data.generator_keys[k] + " has determinant " + to_string(det);
      return c;
    }
  }
  c.detail = std::to_string(data.witnesses.size()) + " rational witnesses recomputed";
  return c;
}

Check check_generator_invariance(const LatticeData& data) {
  Check c{"generator_invariance", true, ""};
  for (std::size_t k = 0; k < data.witnesses.size(); ++k)
    if (!stabilizes(data.lattice, data.witnesses[k])) {
      c.pass = false;
      c.detail = "lattice not stable under " + data.generator_keys[k];
      return c;
    }
  c.detail = "phi(g) L = L for " + std::to_string(data.witnesses.size()) + " generators";
  return c;
}

std::vector<std::size_t> noncentral(const LatticeData& data, std::size_t limit) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < data.witnesses.size() && out.size() < limit; ++k)
    if (!is_central(data.witnesses[k])) out.push_back(k);
  return out;
}

Check check_closure(const LatticeData& data, const VerifyOptions& opts) {
  Check c{"closure_invariance", true, ""};
  std::size_t count = 0;
  const auto picks = noncentral(data, opts.closure_generators);
  if (data.rep) {
    std::vector<QuaternionElem> gens;
    for (auto k : picks) gens.push_back(data.generators[k]);
    if (gens.empty()) gens.push_back(data.generators.front());
    const UnitSet closure = sample_group(UnitSet{QuaternionOrder(*data.algebra), 0, gens}, opts.word_length);
    for (const auto& u : closure.elements) {
      const auto w = recompute(data, u);
      ++count;
      if (!w || !stabilizes(data.lattice, *w)) {
        c.pass = false;
        c.detail = "closure element " + unit_key(u) + (w ? " moves the lattice" : " has an irrational witness");
        return c;
      }
    }
  } else {
    std::vector<RatMatrix> letters;
    for (auto k : picks) {
      letters.push_back(data.witnesses[k]);
      letters.push_back(inverse(data.witnesses[k]));
    }
    std::vector<RatMatrix> frontier{RatMatrix::identity(data.n)};
    for (int len = 1; len <= opts.word_length; ++len) {
      std::vector<RatMatrix> next;
      for (const auto& w : frontier)
        for (const auto& l : letters) {
          next.push_back(w * l);
          ++count;
          if (!stabilizes(data.lattice, next.back())) {
            c.pass = false;
            c.detail = "a word of length " + std::to_string(len) + " moves the lattice";
            return c;
          }
        }
      frontier = std::move(next);
    }
  }
  c.detail = std::to_string(count) + " closure elements stabilize L";
  return c;
}

Check check_homomorphism(const LatticeData& data) {
  Check c{"homomorphism", true, ""};
  const auto picks = noncentral(data, 6);
  std::size_t count = 0;
  for (auto i : picks)
    for (auto j : picks) {
      std::optional<RatMatrix> w;
      if (data.rep) {
        w = recompute(data, data.generators[i] * data.generators[j]);
      } else {
        const RatMatrix prod = split_generator(data.generator_keys[i].at(0)) *
                               split_generator(data.generator_keys[j].at(0));
        w = sym_power(prod, static_cast<int>(data.n) - 1).matrix;
      }
      ++count;
      if (!w || *w != data.witnesses[i] * data.witnesses[j]) {
        c.pass = false;
        c.detail = "phi(" + data.generator_keys[i] + " * " + data.generator_keys[j] + ") != product";
        return c;
      }
    }
  c.detail = std::to_string(count) + " products checked";
  return c;
}

Check check_semidirect(const LatticeData& data, const VerifyOptions& opts) {
  Check c{"semidirect_closure", true, ""};
  const RatMatrix rows = data.lattice.rational_basis();
  std::vector<std::size_t> picks = noncentral(data, opts.semidirect_generators);
  std::vector<SemidirectElem> elems;
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    elems.push_back({rows.row(i), RatMatrix::identity(data.n)});
    for (auto k : picks) elems.push_back({rows.row(i), data.witnesses[k]});
  }
  std::size_t count = 0;
  for (const auto& x : elems) {
    const SemidirectElem xi = semidirect_inv(x);
    if (!data.lattice.contains(xi.v) || !stabilizes(data.lattice, xi.g)) {
      c.pass = false;
      c.detail = "an inverse leaves L x phi(Gamma)";
      return c;
    }
    for (const auto& y : elems) {
      const SemidirectElem z = semidirect_mul(x, y);
      ++count;
      if (!data.lattice.contains(z.v) || z.g != x.g * y.g || !stabilizes(data.lattice, z.g)) {
        c.pass = false;
        c.detail = "a product leaves L x phi(Gamma)";
        return c;
      }
    }
  }
  c.detail = std::to_string(count) + " products stay in L x phi(Gamma)";
  return c;
}

Check check_godement(const LatticeData& data) {
  const GodementReport rep = godement_report(data.witnesses, data.generator_keys);
  if (data.kind == LatticeKind::Split) {
    bool t_flagged = false;
    for (const auto& l : rep.unipotent_labels) t_flagged = t_flagged || l == "T";
    return {"godement", t_flagged,
            t_flagged ? "Sym(T) is unipotent: non-cocompact" : "Sym(T) was not flagged unipotent"};
  }
  return {"godement", !rep.nontrivial_unipotent,
          rep.nontrivial_unipotent ? "nontrivial unipotent witness found"
                                   : "no nontrivial unipotent among " + std::to_string(rep.checked) + " witnesses"};
}

Check check_division(const LatticeData& data) {
  if (!data.algebra) return {"division", true, "split lattice; no division requirement"};
  const RamificationReport ram = ramified_places(*data.algebra);
  return {"division", ram.division && ram.split_at_infinity,
          ram.division ? "division algebra, split at infinity" : "algebra splits over Q"};
}

}  // namespace

VerificationReport verify_lattice(const LatticeData& data, const VerifyOptions& opts) {
  VerificationReport out;
  out.checks.push_back(check_recomputation(data));
  out.checks.push_back(check_generator_invariance(data));
  out.checks.push_back(check_closure(data, opts));
  out.checks.push_back(check_homomorphism(data));
  out.checks.push_back(check_semidirect(data, opts));
  out.checks.push_back(check_godement(data));
  out.checks.push_back(check_division(data));
  return out;
}

}  // namespace arithlat
