#include "qhopf/tensor.hpp"

#include <algorithm>
#include <atomic>

#include "qhopf/errors.hpp"

namespace qhopf {

namespace {

std::atomic<std::size_t> g_entry_budget{5000000};

void check_budget(std::size_t n) {
  if (n > g_entry_budget.load()) {
    throw BudgetExceeded("tensor entry count " + std::to_string(n) + " exceeds budget " +
                         std::to_string(g_entry_budget.load()));
  }
}

constexpr std::uint64_t kDenseLimit = 1ULL << 22;

}  // namespace

void set_entry_budget(std::size_t budget) { g_entry_budget = budget; }
std::size_t entry_budget() { return g_entry_budget.load(); }

std::uint64_t index_space(std::uint32_t dim, std::uint32_t legs) {
  std::uint64_t n = 1;
  for (std::uint32_t i = 0; i < legs; ++i) {
    if (n > (1ULL << 62) / std::max<std::uint32_t>(dim, 1)) {
      throw BudgetExceeded("index space of " + std::to_string(legs) + " legs overflows");
    }
    n *= dim;
  }
  return n;
}

SparseTensor SparseTensor::from_entries(std::uint32_t legs, std::uint32_t dim, std::vector<Entry> entries) {
  SparseTensor t(legs, dim);
  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  for (auto& e : entries) {
    if (!t.entries_.empty() && t.entries_.back().first == e.first) {
      t.entries_.back().second += e.second;
    } else {
      if (!t.entries_.empty() && t.entries_.back().second.is_zero()) t.entries_.pop_back();
      t.entries_.push_back(std::move(e));
    }
  }
  if (!t.entries_.empty() && t.entries_.back().second.is_zero()) t.entries_.pop_back();
  check_budget(t.entries_.size());
  return t;
}

SparseTensor SparseTensor::from_vector(const std::vector<CycNumber>& v) {
  SparseTensor t(1, static_cast<std::uint32_t>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) t.entries_.emplace_back(i, v[i]);
  }
  return t;
}

SparseTensor SparseTensor::from_sparse(std::uint32_t dim, const SparseVec& v) {
  std::vector<Entry> e;
  e.reserve(v.size());
  for (const auto& [i, c] : v) e.emplace_back(i, c);
  return from_entries(1, dim, std::move(e));
}

SparseTensor SparseTensor::basis(std::uint32_t dim, std::uint32_t i) {
  SparseTensor t(1, dim);
  t.entries_.emplace_back(i, CycNumber(1L));
  return t;
}

SparseTensor SparseTensor::scalar(std::uint32_t dim, const CycNumber& s) {
  SparseTensor t(0, dim);
  if (!s.is_zero()) t.entries_.emplace_back(0, s);
  return t;
}

std::uint64_t SparseTensor::flat(const std::vector<std::uint32_t>& idx) const {
  if (idx.size() != legs_) throw DimensionMismatch("index arity does not match tensor legs");
  std::uint64_t f = 0;
  for (auto i : idx) f = f * dim_ + i;
  return f;
}

std::vector<std::uint32_t> SparseTensor::unflat(std::uint64_t flat) const {
  std::vector<std::uint32_t> idx(legs_);
  for (std::uint32_t l = legs_; l-- > 0;) {
    idx[l] = static_cast<std::uint32_t>(flat % dim_);
    flat /= dim_;
  }
  return idx;
}

std::uint32_t SparseTensor::digit(std::uint64_t flat, std::uint32_t leg) const {
  for (std::uint32_t l = legs_ - 1; l > leg; --l) flat /= dim_;
  return static_cast<std::uint32_t>(flat % dim_);
}

CycNumber SparseTensor::at(std::uint64_t flat) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), flat,
                             [](const Entry& e, std::uint64_t f) { return e.first < f; });
  if (it != entries_.end() && it->first == flat) return it->second;
  return {};
}

CycNumber SparseTensor::scalar_value() const {
  if (legs_ != 0) throw DimensionMismatch("scalar_value on a tensor with legs");
  return entries_.empty() ? CycNumber() : entries_.front().second;
}

std::vector<CycNumber> SparseTensor::to_vector() const {
  if (legs_ != 1) throw DimensionMismatch("to_vector needs a 1-leg tensor");
  std::vector<CycNumber> v(dim_);
  for (const auto& [i, c] : entries_) v[i] = c;
  return v;
}

SparseTensor SparseTensor::operator-() const {
  SparseTensor t = *this;
  for (auto& e : t.entries_) e.second = -e.second;
  return t;
}

SparseTensor& SparseTensor::operator+=(const SparseTensor& rhs) {
  if (legs_ != rhs.legs_ || dim_ != rhs.dim_) throw DimensionMismatch("tensor sum shape mismatch");
  std::vector<Entry> merged;
  merged.reserve(entries_.size() + rhs.entries_.size());
  auto a = entries_.begin();
  auto b = rhs.entries_.begin();
  while (a != entries_.end() || b != rhs.entries_.end()) {
    if (b == rhs.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      merged.push_back(std::move(*a++));
    } else if (a == entries_.end() || b->first < a->first) {
      merged.push_back(*b++);
    } else {
      CycNumber s = a->second + b->second;
      if (!s.is_zero()) merged.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(merged);
  check_budget(entries_.size());
  return *this;
}

SparseTensor& SparseTensor::operator-=(const SparseTensor& rhs) { return *this += -rhs; }

SparseTensor& SparseTensor::operator*=(const CycNumber& s) {
  if (s.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& e : entries_) e.second *= s;
  return *this;
}

bool operator==(const SparseTensor& a, const SparseTensor& b) {
  if (a.legs_ != b.legs_ || a.dim_ != b.dim_ || a.entries_.size() != b.entries_.size()) return false;
  for (std::size_t i = 0; i < a.entries_.size(); ++i) {
    if (a.entries_[i].first != b.entries_[i].first || a.entries_[i].second != b.entries_[i].second) return false;
  }
  return true;
}

TensorAccumulator::TensorAccumulator(std::uint32_t legs, std::uint32_t dim) : legs_(legs), dim_(dim) {
  const std::uint64_t space = index_space(dim, legs);
  dense_ = space <= kDenseLimit;
  if (dense_) dense_slot_.assign(space, -1);
}

CycNumber& TensorAccumulator::slot(std::uint64_t flat) {
  if (dense_) {
    auto& s = dense_slot_[flat];
    if (s < 0) {
      s = static_cast<std::int32_t>(values_.size());
      values_.emplace_back(flat, CycNumber());
      check_budget(values_.size());
    }
    return values_[static_cast<std::size_t>(s)].second;
  }
  auto [it, inserted] = sparse_slot_.try_emplace(flat, static_cast<std::uint32_t>(values_.size()));
  if (inserted) {
    values_.emplace_back(flat, CycNumber());
    check_budget(values_.size());
  }
  return values_[it->second].second;
}

void TensorAccumulator::add(std::uint64_t flat, const CycNumber& c) {
  if (c.is_zero()) return;
  slot(flat) += c;
}

void TensorAccumulator::add_product(std::uint64_t flat, const CycNumber& a, const CycNumber& b) {
  slot(flat).add_product(a, b);
}

SparseTensor TensorAccumulator::finish() {
  std::vector<SparseTensor::Entry> out;
  out.reserve(values_.size());
  for (auto& e : values_) {
    if (!e.second.is_zero()) out.push_back(std::move(e));
  }
  values_.clear();
  dense_slot_.clear();
  sparse_slot_.clear();
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  return SparseTensor::from_entries(legs_, dim_, std::move(out));
}

SparseTensor outer(const SparseTensor& a, const SparseTensor& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("outer product of tensors over different spaces");
  const std::uint64_t shift = index_space(b.dim(), b.legs());
  index_space(a.dim(), a.legs() + b.legs());
  check_budget(a.nnz() * b.nnz());
  std::vector<SparseTensor::Entry> out;
  out.reserve(a.nnz() * b.nnz());
  for (const auto& [fa, ca] : a.entries()) {
    for (const auto& [fb, cb] : b.entries()) out.emplace_back(fa * shift + fb, ca * cb);
  }
  return SparseTensor::from_entries(a.legs() + b.legs(), a.dim(), std::move(out));
}

SparseTensor embed_factor(const SparseTensor& t, std::uint32_t target_legs, std::uint32_t position,
                          const SparseTensor& unit) {
  if (position + t.legs() > target_legs) throw DimensionMismatch("embed_factor: factor does not fit");
  if (unit.legs() != 1 || unit.dim() != t.dim()) throw DimensionMismatch("embed_factor: bad unit");
  SparseTensor out = SparseTensor::scalar(t.dim(), CycNumber(1L));
  for (std::uint32_t i = 0; i < position; ++i) out = outer(out, unit);
  out = outer(out, t);
  for (std::uint32_t i = position + t.legs(); i < target_legs; ++i) out = outer(out, unit);
  return out;
}

SparseTensor apply_leg_map(const SparseTensor& t, std::uint32_t leg, const Matrix& map) {
  if (leg >= t.legs()) throw DimensionMismatch("apply_leg_map: leg out of range");
  const std::uint32_t d = t.dim();
  const std::uint64_t stride = index_space(d, t.legs() - 1 - leg);
  TensorAccumulator acc(t.legs(), d);
  for (const auto& [f, c] : t.entries()) {
    const std::uint32_t j = static_cast<std::uint32_t>((f / stride) % d);
    const std::uint64_t base = f - static_cast<std::uint64_t>(j) * stride;
    for (std::uint32_t i = 0; i < map.rows(); ++i) {
      if (!map(i, j).is_zero()) acc.add_product(base + i * stride, c, map(i, j));
    }
  }
  return acc.finish();
}

SparseTensor contract_leg(const SparseTensor& t, std::uint32_t leg, const std::vector<CycNumber>& functional) {
  if (leg >= t.legs()) throw DimensionMismatch("contract_leg: leg out of range");
  const std::uint32_t d = t.dim();
  const std::uint64_t stride = index_space(d, t.legs() - 1 - leg);
  TensorAccumulator acc(t.legs() - 1, d);
  for (const auto& [f, c] : t.entries()) {
    const std::uint32_t j = static_cast<std::uint32_t>((f / stride) % d);
    if (functional[j].is_zero()) continue;
    const std::uint64_t hi = f / (stride * d);
    const std::uint64_t lo = f % stride;
    acc.add_product(hi * stride + lo, c, functional[j]);
  }
  return acc.finish();
}

SparseTensor permute_legs(const SparseTensor& t, const std::vector<std::uint32_t>& perm) {
  if (perm.size() != t.legs()) throw DimensionMismatch("permute_legs: permutation has wrong length");
  std::vector<SparseTensor::Entry> out;
  out.reserve(t.nnz());
  for (const auto& [f, c] : t.entries()) {
    const auto idx = t.unflat(f);
    std::uint64_t g = 0;
    for (auto p : perm) g = g * t.dim() + idx[p];
    out.emplace_back(g, c);
  }
  return SparseTensor::from_entries(t.legs(), t.dim(), std::move(out));
}

}  // namespace qhopf
