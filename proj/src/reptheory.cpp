#include "qhopf/reptheory.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include <Eigen/Eigenvalues>

#include "qhopf/errors.hpp"
#include "qhopf/qha.hpp"
#include "qhopf/tensor_ops.hpp"

namespace qhopf {

namespace {

using Vec = std::vector<CycNumber>;
constexpr double kNumericTol = 1e-7;

Vec basis_vec(std::uint32_t d, std::uint32_t i) {
  Vec v(d);
  v[i] = CycNumber(1L);
  return v;
}

Vec axpy(const Vec& x, const CycNumber& s, const Vec& y) {
  Vec out = x;
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (!y[i].is_zero()) out[i].add_product(s, y[i]);
  }
  return out;
}

Vec scaled(Vec v, const CycNumber& s) {
  for (auto& x : v) {
    if (!x.is_zero()) x *= s;
  }
  return v;
}

bool is_zero_vec(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](const CycNumber& x) { return x.is_zero(); });
}

std::optional<Vec> recognize_vector(const Eigen::VectorXcd& v) {
  Vec out(static_cast<std::size_t>(v.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    auto r = recognize(v(i));
    if (!r) return std::nullopt;
    out[static_cast<std::size_t>(i)] = *r;
  }
  return out;
}

CycNumber regular_trace(const QuasiHopfAlgebra& h, const Vec& x) { return left_mult_matrix(h, x).trace(); }

// Distinct eigenvalues (clustered numerically) of a complex matrix.
std::vector<std::complex<double>> distinct_eigenvalues(const Eigen::MatrixXcd& m, double tol) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  std::vector<std::complex<double>> out;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    const auto lam = es.eigenvalues()(i);
    bool seen = false;
    for (const auto& o : out) seen = seen || std::abs(o - lam) < tol;
    if (!seen) out.push_back(lam);
  }
  return out;
}

struct CentralSplit {
  std::vector<Vec> idempotents;
};

std::optional<CentralSplit> split_center(const QuasiHopfAlgebra& h, const std::vector<Vec>& center,
                                         std::uint64_t seed) {
  const std::uint32_t d = h.dim;
  const std::size_t c = center.size();
  Eigen::MatrixXcd zc(d, static_cast<Eigen::Index>(c));
  for (std::size_t k = 0; k < c; ++k) {
    for (std::uint32_t r = 0; r < d; ++r) zc(r, static_cast<Eigen::Index>(k)) = center[k][r].to_complex();
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> dist(-4, 4);
  Vec z(d);
  for (std::size_t k = 0; k < c; ++k) z = axpy(z, CycNumber(dist(rng) + (seed == 0 ? static_cast<long>(k) : 0)), center[k]);
  // multiplication by z on the center, in center coordinates
  Eigen::MatrixXcd zz(d, static_cast<Eigen::Index>(c));
  for (std::size_t k = 0; k < c; ++k) {
    const Vec p = multiply(h, z, center[k]);
    for (std::uint32_t r = 0; r < d; ++r) zz(r, static_cast<Eigen::Index>(k)) = p[r].to_complex();
  }
  const auto qr = zc.colPivHouseholderQr();
  const Eigen::MatrixXcd m = qr.solve(zz);
  Eigen::VectorXcd unit(d);
  const Vec one = h.unit.to_vector();
  for (std::uint32_t r = 0; r < d; ++r) unit(r) = one[r].to_complex();
  const Eigen::VectorXcd unit_c = qr.solve(unit);

  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(m, false);
  const Eigen::VectorXcd lam = es.eigenvalues();
  for (Eigen::Index i = 0; i < lam.size(); ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(lam(i) - lam(j)) < 1e-6) return std::nullopt;
    }
  }
  CentralSplit out;
  const auto n = static_cast<Eigen::Index>(c);
  for (Eigen::Index i = 0; i < n; ++i) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
      if (j == i) continue;
      p = p * (m - lam(j) * Eigen::MatrixXcd::Identity(n, n)) / (lam(i) - lam(j));
    }
    const Eigen::VectorXcd e = zc * (p * unit_c);
    auto ev = recognize_vector(e);
    if (!ev) return std::nullopt;
    out.idempotents.push_back(std::move(*ev));
  }
  // exact verification
  Vec sum(d);
  for (std::size_t i = 0; i < out.idempotents.size(); ++i) {
    const Vec& e = out.idempotents[i];
    if (multiply(h, e, e) != e || is_zero_vec(e)) return std::nullopt;
    if (!is_central(h, SparseTensor::from_vector(e))) return std::nullopt;
    for (std::size_t j = 0; j < i; ++j) {
      if (!is_zero_vec(multiply(h, e, out.idempotents[j]))) return std::nullopt;
    }
    sum = axpy(sum, CycNumber(1L), e);
  }
  if (sum != one) return std::nullopt;
  return out;
}

std::uint32_t block_dimension(const QuasiHopfAlgebra& h, const Vec& e) {
  const CycNumber t = regular_trace(h, e);
  if (!t.is_rational() || t.rational_value().get_den() != 1 || sgn(t.rational_value()) <= 0) {
    throw NonIntegerDimension("regular trace of a central idempotent is " + to_string(t));
  }
  const long v = t.rational_value().get_num().get_si();
  const auto n = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
  if (n * n != v) throw NonIntegerDimension("block of regular trace " + std::to_string(v) + " is not a square");
  return static_cast<std::uint32_t>(n);
}

// Primitive orthogonal idempotents summing to e (the diagonal matrix units of the block).
std::optional<std::vector<Vec>> diagonal_units(const QuasiHopfAlgebra& h, const Vec& e, std::uint32_t n,
                                               const Vec& a) {
  const std::uint32_t d = h.dim;
  const Vec one = h.unit.to_vector();
  const double shift = 997.25;
  Vec shifted = axpy(a, CycNumber(Rational(3989, 4)), one);
  shifted = axpy(shifted, CycNumber(Rational(-3989, 4)), e);
  const Eigen::MatrixXcd lm = to_complex(left_mult_matrix(h, shifted));
  std::vector<std::complex<double>> eig;
  for (const auto& lam : distinct_eigenvalues(lm, 1e-6)) {
    if (std::abs(lam - shift) > 1e-6) eig.push_back(lam);
  }
  if (eig.size() != n) return std::nullopt;
  std::vector<CycNumber> exact;
  for (const auto& lam : eig) {
    auto r = recognize(lam);
    if (!r) return std::nullopt;
    exact.push_back(*r);
  }
  std::sort(exact.begin(), exact.end(), display_less);
  std::vector<Vec> units;
  Vec sum(d);
  for (std::size_t i = 0; i < n; ++i) {
    Vec f = e;
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const Vec factor = scaled(axpy(a, -exact[j], e), (exact[i] - exact[j]).inverse());
      f = multiply(h, f, factor);
    }
    if (multiply(h, f, f) != f) return std::nullopt;
    if (regular_trace(h, f) != CycNumber(static_cast<long>(n))) return std::nullopt;
    for (const auto& g : units) {
      if (!is_zero_vec(multiply(h, f, g))) return std::nullopt;
    }
    sum = axpy(sum, CycNumber(1L), f);
    units.push_back(std::move(f));
  }
  if (sum != e) return std::nullopt;
  return units;
}

std::optional<std::vector<Vec>> matrix_units(const QuasiHopfAlgebra& h, const Vec& e, std::uint32_t n) {
  const std::uint32_t d = h.dim;
  if (n == 1) return std::vector<Vec>{e};
  std::vector<Vec> candidates;
  for (std::uint32_t j = 0; j < d; ++j) candidates.push_back(multiply(h, basis_vec(d, j), e));
  for (std::uint32_t j = 0; j < d; ++j) {
    for (std::uint32_t k = j + 1; k < d; ++k) {
      candidates.push_back(multiply(h, axpy(basis_vec(d, j), CycNumber(2L), basis_vec(d, k)), e));
    }
  }
  for (const auto& a : candidates) {
    if (is_zero_vec(a)) continue;
    auto diag = diagonal_units(h, e, n, a);
    if (!diag) continue;
    const auto& D = *diag;
    std::vector<Vec> first_row(n), first_col(n);
    first_row[0] = first_col[0] = D[0];
    bool ok = true;
    for (std::uint32_t b = 1; b < n && ok; ++b) {
      ok = false;
      for (std::uint32_t j = 0; j < d; ++j) {
        Vec y = multiply(h, multiply(h, D[0], basis_vec(d, j)), D[b]);
        if (!is_zero_vec(y)) {
          first_row[b] = std::move(y);
          ok = true;
          break;
        }
      }
      if (!ok) break;
      ok = false;
      for (std::uint32_t j = 0; j < d; ++j) {
        Vec y = multiply(h, multiply(h, D[b], basis_vec(d, j)), D[0]);
        if (is_zero_vec(y)) continue;
        const Vec t = multiply(h, first_row[b], y);
        // t = κ E_11
        std::size_t pos = 0;
        while (pos < d && D[0][pos].is_zero()) ++pos;
        const CycNumber kappa = t[pos] / D[0][pos];
        if (kappa.is_zero() || t != scaled(D[0], kappa)) continue;
        first_col[b] = scaled(y, kappa.inverse());
        ok = true;
        break;
      }
    }
    if (!ok) continue;
    std::vector<Vec> units(static_cast<std::size_t>(n) * n);
    for (std::uint32_t a2 = 0; a2 < n; ++a2) {
      for (std::uint32_t b = 0; b < n; ++b) units[a2 * n + b] = multiply(h, first_col[a2], first_row[b]);
    }
    bool relations = true;
    for (std::uint32_t p = 0; p < n && relations; ++p) {
      for (std::uint32_t q = 0; q < n && relations; ++q) {
        for (std::uint32_t r = 0; r < n && relations; ++r) {
          for (std::uint32_t s = 0; s < n && relations; ++s) {
            const Vec prod = multiply(h, units[p * n + q], units[r * n + s]);
            relations = q == r ? prod == units[p * n + s] : is_zero_vec(prod);
          }
        }
      }
    }
    if (relations) return units;
  }
  return std::nullopt;
}

int compare_values(const CycNumber& a, const CycNumber& b) {
  const auto za = a.to_complex(), zb = b.to_complex();
  if (std::abs(za.real() - zb.real()) > 1e-9) return za.real() > zb.real() ? -1 : 1;
  if (std::abs(za.imag() - zb.imag()) > 1e-9) return za.imag() > zb.imag() ? -1 : 1;
  return 0;
}

bool character_less(const SimpleCharacter& a, const SimpleCharacter& b) {
  if (a.dim != b.dim) return a.dim < b.dim;
  for (std::size_t i = 0; i < a.character.size(); ++i) {
    const int c = compare_values(a.character[i], b.character[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

}  // namespace

Matrix Representation::act(const std::vector<CycNumber>& x) const {
  Matrix m(dim_v, dim_v);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_zero()) m.add_scaled(x[i], action[i]);
  }
  return m;
}

CharacterVector character(const Representation& rho) {
  CharacterVector chi;
  chi.reserve(rho.action.size());
  for (const auto& m : rho.action) chi.push_back(m.trace());
  return chi;
}

bool is_valid_representation(const Representation& rho) {
  const QuasiHopfAlgebra& h = *rho.algebra;
  if (rho.action.size() != h.dim) return false;
  if (!rho.act(h.unit.to_vector()).is_identity()) return false;
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      Matrix expected(rho.dim_v, rho.dim_v);
      for (const auto& [k, s] : h.product(i, j)) expected.add_scaled(s, rho.action[k]);
      if (rho.action[i] * rho.action[j] != expected) return false;
    }
  }
  return true;
}

Representation regular_representation(const QuasiHopfAlgebra& h) {
  Representation rho{&h, h.dim, {}};
  for (std::uint32_t i = 0; i < h.dim; ++i) rho.action.push_back(left_mult_matrix(h, basis_vec(h.dim, i)));
  return rho;
}

std::vector<std::vector<CycNumber>> center_basis(const QuasiHopfAlgebra& h) {
  const std::uint32_t d = h.dim;
  Matrix constraints(static_cast<std::size_t>(d) * d, d);
  for (std::uint32_t i = 0; i < d; ++i) {
    const Vec b = basis_vec(d, i);
    const Matrix diff = right_mult_matrix(h, b) - left_mult_matrix(h, b);
    for (std::uint32_t r = 0; r < d; ++r) {
      for (std::uint32_t c = 0; c < d; ++c) constraints(static_cast<std::size_t>(i) * d + r, c) = diff(r, c);
    }
  }
  return nullspace(constraints);
}

std::shared_ptr<const BlockBasis> compute_block_basis(const QuasiHopfAlgebra& h) {
  const std::uint32_t d = h.dim;
  const auto center = center_basis(h);
  std::optional<CentralSplit> split;
  for (std::uint64_t attempt = 0; attempt < 9 && !split; ++attempt) split = split_center(h, center, attempt);
  if (!split) throw SplitFailure("could not split the center of " + h.name + " into recognizable idempotents");

  struct Block {
    Vec idempotent;
    std::uint32_t n;
    SimpleCharacter chi;
  };
  std::vector<Block> blocks;
  for (auto& e : split->idempotents) {
    const std::uint32_t n = block_dimension(h, e);
    SimpleCharacter chi{CharacterVector(d), n};
    const CycNumber inv_n = CycNumber(Rational(1, n));
    for (std::uint32_t j = 0; j < d; ++j) chi.character[j] = regular_trace(h, multiply(h, basis_vec(d, j), e)) * inv_n;
    blocks.push_back({std::move(e), n, std::move(chi)});
  }
  std::stable_sort(blocks.begin(), blocks.end(),
                   [](const Block& a, const Block& b) { return character_less(a.chi, b.chi); });

  auto bb = std::make_shared<BlockBasis>();
  bb->dim = d;
  bb->from_blocks = Matrix(d, d);
  std::uint32_t offset = 0;
  for (const auto& b : blocks) {
    auto units = matrix_units(h, b.idempotent, b.n);
    if (!units) throw SplitFailure("could not find matrix units for a block of dimension " + std::to_string(b.n));
    bb->block_dims.push_back(b.n);
    bb->offsets.push_back(offset);
    for (std::size_t u = 0; u < units->size(); ++u) bb->from_blocks.set_column(offset + u, (*units)[u]);
    offset += b.n * b.n;
  }
  if (offset != d) throw SplitFailure("block dimensions do not add up to dim H");
  try {
    bb->to_blocks = inverse(bb->from_blocks);
  } catch (const SingularMatrix&) {
    throw SplitFailure("matrix units are not a basis");
  }
  return bb;
}

std::shared_ptr<const BlockBasis> ensure_block_basis(const QuasiHopfAlgebra& h) {
  return h.blocks ? h.blocks : compute_block_basis(h);
}

void attach_block_basis(QuasiHopfAlgebra& h) {
  try {
    h.blocks = compute_block_basis(h);
  } catch (const SplitFailure&) {
    h.blocks.reset();
  }
}

std::vector<SimpleCharacter> simple_characters(const QuasiHopfAlgebra& h) {
  const auto bb = ensure_block_basis(h);
  std::vector<SimpleCharacter> out;
  for (std::uint32_t i = 0; i < bb->block_count(); ++i) {
    const std::uint32_t n = bb->block_dims[i];
    SimpleCharacter s{CharacterVector(h.dim), n};
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      for (std::uint32_t a = 0; a < n; ++a) s.character[j] += bb->to_blocks(bb->offsets[i] + a * n + a, j);
    }
    out.push_back(std::move(s));
  }
  return out;
}

Representation simple_representation(const QuasiHopfAlgebra& h, std::uint32_t block) {
  const auto bb = ensure_block_basis(h);
  Representation rho{&h, bb->block_dims.at(block), {}};
  for (std::uint32_t j = 0; j < h.dim; ++j) rho.action.push_back(bb->block_of_basis(block, j));
  return rho;
}

Representation tensor_power_action(const QuasiHopfAlgebra& h, const Representation& rho, std::uint32_t n) {
  const std::uint32_t d = h.dim;
  const double size = std::pow(static_cast<double>(rho.dim_v), 2.0 * n);
  if (size * d > static_cast<double>(entry_budget())) {
    throw BudgetExceeded("tensor power action of size " + std::to_string(size) + " exceeds budget");
  }
  Representation cur{&h, 1, {}};
  for (std::uint32_t j = 0; j < d; ++j) {
    Matrix m(1, 1);
    m(0, 0) = h.counit[j];
    cur.action.push_back(m);
  }
  if (n == 0) return cur;
  if (n == 1) return rho;
  cur = rho;
  for (std::uint32_t k = 2; k <= n; ++k) {
    Representation next{&h, cur.dim_v * rho.dim_v, {}};
    for (std::uint32_t j = 0; j < d; ++j) {
      Matrix m(next.dim_v, next.dim_v);
      for (const auto& [f, c] : h.coproduct[j].entries()) {
        m.add_scaled(c, kron(rho.action[f / d], cur.action[f % d]));
      }
      next.action.push_back(std::move(m));
    }
    cur = std::move(next);
  }
  return cur;
}

Matrix invariant_subspace(const QuasiHopfAlgebra& h, const Representation& rho, const SparseTensor& integral) {
  const Matrix p = rho.act(integral.to_vector());
  if (p * p != p) throw ProjectorNotIdempotent("the integral does not act as a projector");
  (void)h;
  return column_basis(p);
}

CycNumber rotation_indicator(const QuasiHopfAlgebra& h, const Representation& rho, std::uint32_t n, std::uint32_t r) {
  if (!is_ordinary_hopf(h)) throw NotOrdinaryHopf("rotation indicators need trivial associator and alpha = beta = 1");
  const Representation rn = tensor_power_action(h, rho, n);
  const Matrix basis = invariant_subspace(h, rn, normalized_integral(h));
  const std::uint32_t m = rn.dim_v;
  const std::uint32_t v = rho.dim_v;
  // rotation on index tuples: (i1, ..., in) -> (i2, ..., in, i1)
  std::vector<std::uint32_t> rot(m);
  const std::uint32_t top = m / v;
  for (std::uint32_t x = 0; x < m; ++x) rot[x] = (x % top) * v + x / top;
  Matrix image(m, basis.cols());
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    for (std::uint32_t x = 0; x < m; ++x) {
      std::uint32_t y = x;
      for (std::uint32_t k = 0; k < r; ++k) y = rot[y];
      image(y, c) = basis(x, c);
    }
  }
  CycNumber trace;
  for (std::size_t c = 0; c < basis.cols(); ++c) {
    const auto coords = solve(basis, image.column(c));
    if (!coords) throw IdentityViolation("rotation does not preserve the invariant subspace");
    trace += (*coords)[c];
  }
  return trace;
}

CharacterVector dual_character(const QuasiHopfAlgebra& h, const CharacterVector& chi) {
  CharacterVector out(h.dim);
  for (std::uint32_t j = 0; j < h.dim; ++j) {
    for (std::uint32_t k = 0; k < h.dim; ++k) {
      if (!h.antipode(k, j).is_zero()) out[j].add_product(h.antipode(k, j), chi[k]);
    }
  }
  return out;
}

CycNumber evaluate_character(const CharacterVector& chi, const SparseTensor& x) {
  CycNumber v;
  for (const auto& [i, c] : x.entries()) v.add_product(chi[i], c);
  return v;
}

}  // namespace qhopf
