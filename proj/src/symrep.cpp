#include <arithlat/symrep.hpp>

namespace arithlat {

std::size_t Provenance::dimension() const {
  switch (kind) {
    case Kind::Sym: return static_cast<std::size_t>(degree) + 1;
    case Kind::Adjoint: return 3;
    case Kind::Tensor: return parts.at(0).dimension() * parts.at(1).dimension();
    case Kind::Sum: return parts.at(0).dimension() + parts.at(1).dimension();
    case Kind::Restricted: return parts.at(0).dimension();
  }
  return 0;
}

std::string Provenance::describe() const {
  switch (kind) {
    case Kind::Sym: return "Sym(" + std::to_string(degree) + ")";
    case Kind::Adjoint: return "Adjoint";
    case Kind::Tensor: return "Tensor(" + parts.at(0).describe() + "," + parts.at(1).describe() + ")";
    case Kind::Sum: return "Sum(" + parts.at(0).describe() + "," + parts.at(1).describe() + ")";
    case Kind::Restricted: return "Restricted(" + parts.at(0).describe() + ")";
  }
  return "?";
}

RepImage<Rational> adjoint_on_trace_zero(const QuaternionElem& u) {
  if (reduced_norm(u) != 1) fail(ErrorCode::NotNormOne, "adjoint action needs Nrd(u) = 1, got u = " + unit_key(u));
  const QuaternionElem inv = quat_conj(u);
  RatMatrix m(3, 3);
  for (int col = 0; col < 3; ++col) {
    const QuaternionElem image = u * QuaternionElem::basis(u.algebra(), col + 1) * inv;
    for (std::size_t row = 0; row < 3; ++row) m(row, static_cast<std::size_t>(col)) = image[row + 1];
  }
  return {std::move(m), Provenance::adjoint()};
}

CGReport cg_multiplicities(int r, int s) {
  if (r < 0 || s < 0) fail(ErrorCode::InvalidInput, "negative degree");
  CGReport out{r, s, {}};
  for (int i = 0; i <= std::min(r, s); ++i) out.multiplicities[r + s - 2 * i] = 1;
  return out;
}

RepBuilder sym_builder(int m) {
  if (m < 0) fail(ErrorCode::InvalidInput, "negative symmetric power");
  return [m](const RatMatrix& g) { return sym_power(g, m).matrix; };
}

RepBuilder tensor_builder(RepBuilder left, RepBuilder right) {
  return [l = std::move(left), r = std::move(right)](const RatMatrix& g) { return kron(l(g), r(g)); };
}

RepBuilder sum_builder(RepBuilder left, RepBuilder right) {
  return [l = std::move(left), r = std::move(right)](const RatMatrix& g) { return block_diag(l(g), r(g)); };
}

long draw_int(std::mt19937_64& rng, long lo, long hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<long>(rng() % span);
}

RatMatrix random_unimodular(std::mt19937_64& rng, int steps) {
  RatMatrix g = RatMatrix::identity(2);
  for (int k = 0; k < steps; ++k) {
    long c = draw_int(rng, -3, 3);
    if (c == 0) c = 1;
    const RatMatrix e = (k % 2 == 0) ? RatMatrix{{1, c}, {0, 1}} : RatMatrix{{1, 0}, {c, 1}};
    g = g * e;
  }
  return g;
}

namespace {

const RatMatrix& torus_probe() {
  static const RatMatrix t{{2, 0}, {0, Rational(1, 2)}};
  return t;
}

const RatMatrix& upper_unipotent() {
  static const RatMatrix u{{1, 1}, {0, 1}};
  return u;
}

RatMatrix lower_unipotent(long c) { return RatMatrix{{1, 0}, {c, 1}}; }

Rational two_power(int w) {
  Integer p = 1;
  p <<= static_cast<unsigned>(std::abs(w));
  return w >= 0 ? Rational(p) : Rational(Integer(1), p);
}

RatMatrix checked_image(const RepBuilder& builder, const RatMatrix& g, std::size_t dim) {
  RatMatrix m = builder(g);
  if (m.rows() != dim || m.cols() != dim) fail(ErrorCode::NonFunctorial, "builder changes dimension");
  return m;
}

void spot_check(const RepBuilder& builder, std::size_t dim) {
  if (checked_image(builder, RatMatrix::identity(2), dim) != RatMatrix::identity(dim))
    fail(ErrorCode::NonFunctorial, "builder(I) is not the identity");
  std::mt19937_64 rng(0x5eed);
  for (int k = 0; k < 3; ++k) {
    const RatMatrix g = random_unimodular(rng, 3);
    const RatMatrix h = k == 0 ? torus_probe() : random_unimodular(rng, 3);
    if (checked_image(builder, g * h, dim) != checked_image(builder, g, dim) * checked_image(builder, h, dim))
      fail(ErrorCode::NonFunctorial, "builder(gh) != builder(g) builder(h)");
  }
}

struct WeightData {
  std::size_t dim = 0;
  RatMatrix u;                      // builder(upper unipotent)
  std::map<int, RatMatrix> spaces;  // weight -> eigenspace basis (columns)
};

WeightData weight_spaces(const RepBuilder& builder) {
  WeightData data;
  data.dim = builder(RatMatrix::identity(2)).rows();
  if (data.dim == 0) fail(ErrorCode::InvalidInput, "zero-dimensional representation");
  spot_check(builder, data.dim);
  const RatMatrix d = builder(torus_probe());
  data.u = builder(upper_unipotent());
  const int top = static_cast<int>(data.dim) - 1;
  std::size_t total = 0;
  for (int w = -top; w <= top; ++w) {
    RatMatrix shifted = d - two_power(w) * RatMatrix::identity(data.dim);
    RatMatrix e = kernel(shifted);
    if (e.cols() == 0) continue;
    total += e.cols();
    data.spaces.emplace(w, std::move(e));
  }
  if (total != data.dim) fail(ErrorCode::NonFunctorial, "torus probe is not diagonalizable with weights 2^w");
  return data;
}

// Columns: highest-weight vectors of weight w.
RatMatrix highest_weight_vectors(const WeightData& data, int w) {
  const auto it = data.spaces.find(w);
  if (it == data.spaces.end()) return RatMatrix(data.dim, 0);
  const RatMatrix& e = it->second;
  const RatMatrix k = kernel((data.u - RatMatrix::identity(data.dim)) * e);
  return e * k;
}

RatVector pick_highest_weight(const WeightData& data, int w, int copy) {
  if (w < 0) fail(ErrorCode::WeightAbsent, "negative highest weight");
  const RatMatrix hw = highest_weight_vectors(data, w);
  if (copy < 0 || static_cast<std::size_t>(copy) >= hw.cols())
    fail(ErrorCode::WeightAbsent, "weight " + std::to_string(w) + " has " + std::to_string(hw.cols()) +
                                      " copies, asked for index " + std::to_string(copy));
  return hw.col(static_cast<std::size_t>(copy));
}

bool invariant_under(const RepBuilder& builder, const RatMatrix& span, int samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  for (int k = 0; k < samples; ++k) {
    const RatMatrix g = random_unimodular(rng, 4);
    if (!spans_contain(span, builder(g) * span)) return false;
  }
  return true;
}

}  // namespace

CGReport decompose(const RepBuilder& builder) {
  const WeightData data = weight_spaces(builder);
  CGReport out{-1, -1, {}};
  std::size_t covered = 0;
  for (const auto& [w, space] : data.spaces) {
    if (w < 0) continue;
    const std::size_t mult = highest_weight_vectors(data, w).cols();
    if (mult == 0) continue;
    out.multiplicities[w] = static_cast<int>(mult);
    covered += mult * static_cast<std::size_t>(w + 1);
  }
  if (covered != data.dim) fail(ErrorCode::NonFunctorial, "highest weights do not account for the dimension");
  return out;
}

RatMatrix extract_summand(const RepBuilder& builder, int w, int copy) {
  const WeightData data = weight_spaces(builder);
  const RatVector v = pick_highest_weight(data, w, copy);
  const std::size_t target = static_cast<std::size_t>(w) + 1;

  RatMatrix span = RatMatrix::column(v);
  // Images under [[1,0],[c,1]] for distinct c are independent in exact
  // arithmetic; extra probes only guard the rank check.
  for (long c = 1; span.cols() < target && c <= static_cast<long>(4 * target + 8); ++c) {
    const RatMatrix next = hstack(span, RatMatrix::column(builder(lower_unipotent(c)).apply(v)));
    if (rank(next) == next.cols()) span = next;
  }
  if (span.cols() < target) fail(ErrorCode::DependentSpan, "lower-unipotent images do not span the summand");
  if (!invariant_under(builder, span, 20, 0xC0FFEE))
    fail(ErrorCode::DependentSpan, "extracted span is not invariant");
  return span;
}

RatMatrix summand_embedding(const RepBuilder& builder, int w, int copy) {
  const WeightData data = weight_spaces(builder);
  const RatVector v = pick_highest_weight(data, w, copy);
  const std::size_t n = static_cast<std::size_t>(w) + 1;

  RatMatrix b(data.dim, n);
  RatMatrix a(n, n);
  for (std::size_t c = 0; c < n; ++c) {
    const RatMatrix l = lower_unipotent(static_cast<long>(c));
    const RatVector img = builder(l).apply(v);
    const RatMatrix s = sym_power(l, w).matrix;
    for (std::size_t i = 0; i < data.dim; ++i) b(i, c) = img[i];
    for (std::size_t i = 0; i < n; ++i) a(i, c) = s(i, 0);
  }
  const RatMatrix p = b * inverse(a);

  std::mt19937_64 rng(0xE4B);
  std::vector<RatMatrix> probes{torus_probe(), upper_unipotent()};
  for (int k = 0; k < 6; ++k) probes.push_back(random_unimodular(rng, 4));
  for (const auto& g : probes)
    if (builder(g) * p != p * sym_power(g, w).matrix)
      fail(ErrorCode::DependentSpan, "embedding of Sym^" + std::to_string(w) + " is not equivariant");
  return p;
}

}  // namespace arithlat
