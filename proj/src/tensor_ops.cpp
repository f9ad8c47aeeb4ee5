#include "qhopf/tensor_ops.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

void check_shape(const QuasiHopfAlgebra& h, const SparseTensor& t) {
  if (t.dim() != h.dim) throw DimensionMismatch("tensor is not over this algebra");
}

std::vector<std::uint32_t> digits(std::uint64_t f, std::uint32_t legs, std::uint32_t d) {
  std::vector<std::uint32_t> idx(legs);
  for (std::uint32_t l = legs; l-- > 0;) {
    idx[l] = static_cast<std::uint32_t>(f % d);
    f /= d;
  }
  return idx;
}

SparseTensor sparse_product(const QuasiHopfAlgebra& h, const SparseTensor& a, const SparseTensor& b) {
  const std::uint32_t k = a.legs();
  const std::uint32_t d = h.dim;
  TensorAccumulator acc(k, d);
  if (k == 0) {
    acc.add(0, a.scalar_value() * b.scalar_value());
    return acc.finish();
  }
  std::vector<std::vector<std::uint32_t>> bdig;
  bdig.reserve(b.nnz());
  for (const auto& e : b.entries()) bdig.push_back(digits(e.first, k, d));

  std::vector<const SparseVec*> lists(k);
  std::vector<std::size_t> pos(k);
  std::vector<CycNumber> partial(k + 1);
  std::vector<std::uint64_t> flat(k + 1);
  for (const auto& [fa, ca] : a.entries()) {
    const auto ad = digits(fa, k, d);
    for (std::size_t eb = 0; eb < b.nnz(); ++eb) {
      bool empty = false;
      for (std::uint32_t l = 0; l < k && !empty; ++l) {
        lists[l] = &h.product(ad[l], bdig[eb][l]);
        empty = lists[l]->empty();
      }
      if (empty) continue;
      partial[0] = ca * b.entries()[eb].second;
      flat[0] = 0;
      // odometer over the cartesian product of leg expansions
      std::uint32_t depth = 0;
      pos[0] = 0;
      while (true) {
        if (pos[depth] == lists[depth]->size()) {
          if (depth == 0) break;
          --depth;
          ++pos[depth];
          continue;
        }
        const auto& [idx, c] = (*lists[depth])[pos[depth]];
        partial[depth + 1] = partial[depth] * c;
        flat[depth + 1] = flat[depth] * d + idx;
        if (depth + 1 == k) {
          acc.add(flat[k], partial[k]);
          ++pos[depth];
        } else {
          ++depth;
          pos[depth] = 0;
        }
      }
    }
  }
  return acc.finish();
}

struct UnitTables {
  std::vector<std::uint32_t> block, row, col;
  std::vector<std::uint32_t> row_offset;  // first row id of each block
  std::uint32_t row_count = 0;
};

UnitTables unit_tables(const BlockBasis& bb) {
  UnitTables t;
  t.block.resize(bb.dim);
  t.row.resize(bb.dim);
  t.col.resize(bb.dim);
  for (std::uint32_t i = 0; i < bb.block_count(); ++i) {
    const std::uint32_t n = bb.block_dims[i];
    t.row_offset.push_back(t.row_count);
    t.row_count += n;
    for (std::uint32_t a = 0; a < n; ++a) {
      for (std::uint32_t b = 0; b < n; ++b) {
        const std::uint32_t u = bb.offsets[i] + a * n + b;
        t.block[u] = i;
        t.row[u] = a;
        t.col[u] = b;
      }
    }
  }
  return t;
}

SparseTensor to_block_coords(const BlockBasis& bb, SparseTensor t) {
  for (std::uint32_t l = 0; l < t.legs(); ++l) t = apply_leg_map(t, l, bb.to_blocks);
  return t;
}

SparseTensor from_block_coords(const BlockBasis& bb, SparseTensor t) {
  for (std::uint32_t l = 0; l < t.legs(); ++l) t = apply_leg_map(t, l, bb.from_blocks);
  return t;
}

SparseTensor block_product(const QuasiHopfAlgebra& h, const SparseTensor& a, const SparseTensor& b) {
  const BlockBasis& bb = *h.blocks;
  const std::uint32_t k = a.legs();
  const std::uint32_t d = h.dim;
  const UnitTables ut = unit_tables(bb);
  const SparseTensor ab = to_block_coords(bb, a);
  const SparseTensor bbk = to_block_coords(bb, b);

  // group right factor entries by their row key (block, row) per leg
  std::unordered_map<std::uint64_t, std::vector<std::pair<std::vector<std::uint32_t>, const CycNumber*>>> by_row;
  for (const auto& [f, c] : bbk.entries()) {
    auto dg = digits(f, k, d);
    std::uint64_t key = 0;
    for (std::uint32_t l = 0; l < k; ++l) key = key * ut.row_count + ut.row_offset[ut.block[dg[l]]] + ut.row[dg[l]];
    by_row[key].emplace_back(std::move(dg), &c);
  }
  TensorAccumulator acc(k, d);
  for (const auto& [f, c] : ab.entries()) {
    const auto dg = digits(f, k, d);
    std::uint64_t key = 0;
    for (std::uint32_t l = 0; l < k; ++l) key = key * ut.row_count + ut.row_offset[ut.block[dg[l]]] + ut.col[dg[l]];
    auto it = by_row.find(key);
    if (it == by_row.end()) continue;
    for (const auto& [rd, rc] : it->second) {
      std::uint64_t out = 0;
      for (std::uint32_t l = 0; l < k; ++l) {
        const std::uint32_t i = ut.block[dg[l]];
        out = out * d + bb.offsets[i] + ut.row[dg[l]] * bb.block_dims[i] + ut.col[rd[l]];
      }
      acc.add_product(out, c, *rc);
    }
  }
  return from_block_coords(bb, acc.finish());
}

double average_expansion(const QuasiHopfAlgebra& h) {
  std::size_t total = 0, nonempty = 0;
  for (const auto& v : h.mult) {
    if (!v.empty()) {
      total += v.size();
      ++nonempty;
    }
  }
  return nonempty == 0 ? 1.0 : static_cast<double>(total) / static_cast<double>(nonempty);
}

// Inverse via the minimal polynomial of left multiplication restricted to powers of a.
SparseTensor power_series_inverse(const QuasiHopfAlgebra& h, const SparseTensor& a) {
  const std::uint32_t k = a.legs();
  const SparseTensor one = unit_tensor(h, k);
  // echelon rows: (pivot flat index, reduced vector, combination of powers)
  struct Row {
    std::uint64_t pivot;
    SparseTensor vec;
    std::vector<CycNumber> combo;
  };
  std::vector<Row> rows;
  SparseTensor power = one;
  for (std::uint32_t m = 0;; ++m) {
    SparseTensor v = power;
    std::vector<CycNumber> combo(m + 1);
    combo[m] = CycNumber(1L);
    for (const auto& r : rows) {
      const CycNumber c = v.at(r.pivot);
      if (c.is_zero()) continue;
      v -= r.vec * c;
      for (std::size_t i = 0; i < r.combo.size(); ++i) combo[i] -= c * r.combo[i];
    }
    if (v.is_zero()) {
      // sum_i combo[i] a^i = 0
      if (combo[0].is_zero()) throw SingularMatrix("element is not invertible");
      SparseTensor inv(k, h.dim);
      SparseTensor p = one;
      const CycNumber scale = -combo[0].inverse();
      for (std::uint32_t i = 1; i <= m; ++i) {
        if (!combo[i].is_zero()) inv += p * (combo[i] * scale);
        if (i < m) p = algebra_product(h, p, a);
      }
      return inv;
    }
    const std::uint64_t pivot = v.entries().front().first;
    const CycNumber inv_lead = v.entries().front().second.inverse();
    v *= inv_lead;
    for (auto& c : combo) c *= inv_lead;
    // keep rows fully reduced against the new pivot
    for (auto& r : rows) {
      const CycNumber c = r.vec.at(pivot);
      if (c.is_zero()) continue;
      r.vec -= v * c;
      r.combo.resize(m + 1);
      for (std::size_t i = 0; i <= m; ++i) r.combo[i] -= c * combo[i];
    }
    rows.push_back({pivot, v, combo});
    for (auto& r : rows) r.combo.resize(m + 2);
    power = algebra_product(h, power, a);
  }
}

SparseTensor block_inverse(const QuasiHopfAlgebra& h, const SparseTensor& a) {
  const BlockBasis& bb = *h.blocks;
  const std::uint32_t k = a.legs();
  const std::uint32_t d = h.dim;
  const UnitTables ut = unit_tables(bb);
  const SparseTensor t = to_block_coords(bb, a);
  const std::uint32_t nb = static_cast<std::uint32_t>(bb.block_count());
  // block tuples
  std::map<std::vector<std::uint32_t>, std::vector<SparseTensor::Entry>> by_tuple;
  for (const auto& e : t.entries()) {
    const auto dg = digits(e.first, k, d);
    std::vector<std::uint32_t> tuple(k);
    for (std::uint32_t l = 0; l < k; ++l) tuple[l] = ut.block[dg[l]];
    by_tuple[tuple].push_back(e);
  }
  TensorAccumulator acc(k, d);
  std::vector<std::uint32_t> tuple(k, 0);
  while (true) {
    std::uint32_t size = 1;
    for (auto i : tuple) size *= bb.block_dims[i];
    Matrix m(size, size);
    auto it = by_tuple.find(tuple);
    if (it == by_tuple.end()) throw SingularMatrix("element vanishes on a block");
    for (const auto& [f, c] : it->second) {
      const auto dg = digits(f, k, d);
      std::uint32_t r = 0, col = 0;
      for (std::uint32_t l = 0; l < k; ++l) {
        const std::uint32_t n = bb.block_dims[tuple[l]];
        r = r * n + ut.row[dg[l]];
        col = col * n + ut.col[dg[l]];
      }
      m(r, col) = c;
    }
    const Matrix mi = inverse(m);
    for (std::uint32_t r = 0; r < size; ++r) {
      for (std::uint32_t c = 0; c < size; ++c) {
        if (mi(r, c).is_zero()) continue;
        std::uint32_t rr = r, cc = c;
        std::vector<std::uint32_t> rows(k), cols(k);
        for (std::uint32_t l = k; l-- > 0;) {
          const std::uint32_t n = bb.block_dims[tuple[l]];
          rows[l] = rr % n;
          cols[l] = cc % n;
          rr /= n;
          cc /= n;
        }
        std::uint64_t f = 0;
        for (std::uint32_t l = 0; l < k; ++l) {
          const std::uint32_t n = bb.block_dims[tuple[l]];
          f = f * d + bb.offsets[tuple[l]] + rows[l] * n + cols[l];
        }
        acc.add(f, mi(r, c));
      }
    }
    bool done = true;
    for (std::uint32_t l = k; l-- > 0;) {
      if (++tuple[l] < nb) {
        done = false;
        break;
      }
      tuple[l] = 0;
    }
    if (done) break;
  }
  return from_block_coords(bb, acc.finish());
}

}  // namespace

SparseTensor unit_tensor(const QuasiHopfAlgebra& h, std::uint32_t legs) {
  SparseTensor out = SparseTensor::scalar(h.dim, CycNumber(1L));
  for (std::uint32_t i = 0; i < legs; ++i) out = outer(out, h.unit);
  return out;
}

SparseTensor algebra_product(const QuasiHopfAlgebra& h, const SparseTensor& a, const SparseTensor& b,
                             ProductKernel kernel) {
  check_shape(h, a);
  check_shape(h, b);
  if (a.legs() != b.legs()) throw DimensionMismatch("algebra_product: leg counts differ");
  if (a.is_zero() || b.is_zero()) return SparseTensor(a.legs(), h.dim);
  if (kernel == ProductKernel::Block && !h.blocks) throw DimensionMismatch("block kernel needs a block basis");
  if (kernel == ProductKernel::Auto) {
    kernel = ProductKernel::Sparse;
    if (h.blocks && a.legs() > 0) {
      const double k = a.legs();
      const double sparse_cost =
          static_cast<double>(a.nnz()) * static_cast<double>(b.nnz()) * std::pow(average_expansion(h), k);
      double cubes = 0;
      for (auto n : h.blocks->block_dims) cubes += static_cast<double>(n) * n * n;
      const double space = std::pow(static_cast<double>(h.dim), k);
      const double block_cost = 3.0 * k * h.dim * space + std::pow(cubes, k);
      if (block_cost < sparse_cost) kernel = ProductKernel::Block;
    }
  }
  return kernel == ProductKernel::Block ? block_product(h, a, b) : sparse_product(h, a, b);
}

SparseTensor algebra_inverse(const QuasiHopfAlgebra& h, const SparseTensor& a) {
  check_shape(h, a);
  if (a.is_zero()) throw SingularMatrix("zero is not invertible");
  if (a.legs() == 0) return SparseTensor::scalar(h.dim, a.scalar_value().inverse());
  SparseTensor inv = h.blocks ? block_inverse(h, a) : power_series_inverse(h, a);
  const SparseTensor one = unit_tensor(h, a.legs());
  if (algebra_product(h, a, inv) != one || algebra_product(h, inv, a) != one) {
    throw SingularMatrix("computed inverse failed verification");
  }
  return inv;
}

SparseTensor multiply_all_legs(const QuasiHopfAlgebra& h, const SparseTensor& t) {
  check_shape(h, t);
  const std::uint32_t k = t.legs();
  const std::uint32_t d = h.dim;
  if (k <= 1) return t;
  // prefix products reused across consecutive entries sharing leading legs
  std::vector<std::vector<CycNumber>> prefix(k);
  std::vector<std::uint32_t> last;
  std::vector<CycNumber> total(d);
  for (const auto& [f, c] : t.entries()) {
    const auto dg = digits(f, k, d);
    std::uint32_t start = 0;
    if (!last.empty()) {
      while (start < k - 1 && dg[start] == last[start]) ++start;
    }
    for (std::uint32_t l = start; l < k - 1; ++l) {
      if (l == 0) {
        prefix[0].assign(d, CycNumber());
        prefix[0][dg[0]] = CycNumber(1L);
        continue;
      }
      std::vector<CycNumber> next(d);
      for (std::uint32_t i = 0; i < d; ++i) {
        if (prefix[l - 1][i].is_zero()) continue;
        for (const auto& [j, s] : h.product(i, dg[l])) next[j].add_product(prefix[l - 1][i], s);
      }
      prefix[l] = std::move(next);
    }
    const auto& p = prefix[k - 2];
    for (std::uint32_t i = 0; i < d; ++i) {
      if (p[i].is_zero()) continue;
      const CycNumber pc = p[i] * c;
      for (const auto& [j, s] : h.product(i, dg[k - 1])) total[j].add_product(pc, s);
    }
    last = dg;
  }
  return SparseTensor::from_vector(total);
}

SparseTensor apply_coproduct_leg(const QuasiHopfAlgebra& h, const SparseTensor& t, std::uint32_t leg) {
  check_shape(h, t);
  if (leg >= t.legs()) throw DimensionMismatch("apply_coproduct_leg: leg out of range");
  const std::uint32_t d = h.dim;
  const std::uint64_t stride = index_space(d, t.legs() - 1 - leg);
  index_space(d, t.legs() + 1);
  TensorAccumulator acc(t.legs() + 1, d);
  for (const auto& [f, c] : t.entries()) {
    const std::uint64_t j = (f / stride) % d;
    const std::uint64_t hi = f / (stride * d);
    const std::uint64_t lo = f % stride;
    for (const auto& [pair, s] : h.coproduct[j].entries()) {
      acc.add_product((hi * d * d + pair) * stride + lo, c, s);
    }
  }
  return acc.finish();
}

SparseTensor apply_counit_leg(const QuasiHopfAlgebra& h, const SparseTensor& t, std::uint32_t leg) {
  check_shape(h, t);
  return contract_leg(t, leg, h.counit);
}

SparseTensor apply_antipode_leg(const QuasiHopfAlgebra& h, const SparseTensor& t, std::uint32_t leg, bool inverse) {
  check_shape(h, t);
  return apply_leg_map(t, leg, inverse ? h.antipode_inverse : h.antipode);
}

SparseTensor delta_n(const QuasiHopfAlgebra& h, const SparseTensor& a, std::uint32_t n) {
  check_shape(h, a);
  if (a.legs() != 1) throw DimensionMismatch("delta_n expects a 1-leg tensor");
  if (n == 0) return apply_counit_leg(h, a, 0);
  SparseTensor t = a;
  for (std::uint32_t k = 1; k < n; ++k) t = apply_coproduct_leg(h, t, k - 1);
  return t;
}

Matrix left_mult_matrix(const QuasiHopfAlgebra& h, const std::vector<CycNumber>& x) {
  const std::uint32_t d = h.dim;
  Matrix m(d, d);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      for (const auto& [k, s] : h.product(i, j)) m(k, j).add_product(x[i], s);
    }
  }
  return m;
}

Matrix right_mult_matrix(const QuasiHopfAlgebra& h, const std::vector<CycNumber>& x) {
  const std::uint32_t d = h.dim;
  Matrix m(d, d);
  for (std::uint32_t i = 0; i < d; ++i) {
    if (x[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < d; ++j) {
      for (const auto& [k, s] : h.product(j, i)) m(k, j).add_product(x[i], s);
    }
  }
  return m;
}

std::vector<CycNumber> multiply(const QuasiHopfAlgebra& h, const std::vector<CycNumber>& a,
                                const std::vector<CycNumber>& b) {
  std::vector<CycNumber> out(h.dim);
  for (std::uint32_t i = 0; i < h.dim; ++i) {
    if (a[i].is_zero()) continue;
    for (std::uint32_t j = 0; j < h.dim; ++j) {
      if (b[j].is_zero()) continue;
      const CycNumber c = a[i] * b[j];
      for (const auto& [k, s] : h.product(i, j)) out[k].add_product(c, s);
    }
  }
  return out;
}

}  // namespace qhopf
