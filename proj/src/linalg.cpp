#include "nary/linalg.hpp"

#include <algorithm>

namespace nary {

void svec_add_scaled(SVec& dst, const SVec& src, const Scalar& factor) {
  if (factor.is_zero()) return;
  for (const auto& [c, v] : src) {
    auto it = dst.find(c);
    if (it == dst.end()) {
      dst.emplace(c, v * factor);
    } else {
      it->second += v * factor;
      if (it->second.is_zero()) dst.erase(it);
    }
  }
}

SVec svec_scaled(const SVec& v, const Scalar& factor) {
  SVec out;
  if (factor.is_zero()) return out;
  for (const auto& [c, val] : v) out.emplace(c, val * factor);
  return out;
}

bool svec_eq(const SVec& a, const SVec& b) { return a == b; }

SVec to_sparse(const std::vector<Scalar>& dense) {
  SVec out;
  for (Coord i = 0; i < static_cast<Coord>(dense.size()); ++i)
    if (!dense[i].is_zero()) out.emplace(i, dense[i]);
  return out;
}

std::vector<Scalar> to_dense(const SVec& v, Coord dim) {
  std::vector<Scalar> out(static_cast<std::size_t>(dim));
  for (const auto& [c, val] : v) out.at(static_cast<std::size_t>(c)) = val;
  return out;
}

bool EchelonSpan::insert(SVec v) {
  while (!v.empty()) {
    Coord lead = v.begin()->first;
    auto it = rows_.find(lead);
    if (it == rows_.end()) {
      Scalar inv = v.begin()->second.inverse();
      SVec row;
      for (auto& [c, val] : v) row.emplace(c, val * inv);
      rows_.emplace(lead, std::move(row));
      return true;
    }
    Scalar f = -v.begin()->second;
    svec_add_scaled(v, it->second, f);
  }
  return false;
}

SVec EchelonSpan::reduce(SVec v) const {
  // Eliminate the smallest pivot column present in v; each step zeroes that
  // column and can only introduce columns to its right, so this terminates.
  while (true) {
    auto hit = rows_.end();
    Coord best = 0;
    for (const auto& [c, val] : v) {
      auto it = rows_.find(c);
      if (it != rows_.end()) {
        hit = it;
        best = c;
        break;
      }
    }
    if (hit == rows_.end()) return v;
    Scalar f = -v.at(best);
    svec_add_scaled(v, hit->second, f);
  }
}

std::vector<Coord> EchelonSpan::free_columns() const {
  std::vector<Coord> out;
  auto it = rows_.begin();
  for (Coord c = 0; c < ambient_; ++c) {
    while (it != rows_.end() && it->first < c) ++it;
    if (it != rows_.end() && it->first == c) continue;
    out.push_back(c);
  }
  return out;
}

SparseMatrix SparseMatrix::identity(Coord n) {
  SparseMatrix m(n, n);
  for (Coord i = 0; i < n; ++i) m.set(i, i, Scalar(1));
  return m;
}

void SparseMatrix::set(Coord r, Coord c, Scalar v) {
  if (v.is_zero()) {
    auto it = data_.find(r);
    if (it != data_.end()) {
      it->second.erase(c);
      if (it->second.empty()) data_.erase(it);
    }
    return;
  }
  data_[r][c] = std::move(v);
}

void SparseMatrix::add(Coord r, Coord c, const Scalar& v) {
  if (v.is_zero()) return;
  auto& row = data_[r];
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) {
      row.erase(it);
      if (row.empty()) data_.erase(r);
    }
  }
}

Scalar SparseMatrix::get(Coord r, Coord c) const {
  auto it = data_.find(r);
  if (it == data_.end()) return Scalar();
  auto jt = it->second.find(c);
  return jt == it->second.end() ? Scalar() : jt->second;
}

const SVec& SparseMatrix::row(Coord r) const {
  static const SVec empty;
  auto it = data_.find(r);
  return it == data_.end() ? empty : it->second;
}

std::uint64_t SparseMatrix::nonzero_count() const {
  std::uint64_t n = 0;
  for (const auto& [r, row] : data_) n += row.size();
  return n;
}

SparseMatrix SparseMatrix::multiply(const SparseMatrix& other) const {
  if (cols() != other.rows()) throw MathError("matrix shape mismatch in multiply");
  SparseMatrix out(rows(), other.cols());
  for (const auto& [r, row] : data_) {
    SVec acc;
    for (const auto& [k, v] : row) {
      auto it = other.data_.find(k);
      if (it != other.data_.end()) svec_add_scaled(acc, it->second, v);
    }
    if (!acc.empty()) out.data_.emplace(r, std::move(acc));
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols(), rows());
  for (const auto& [r, row] : data_)
    for (const auto& [c, v] : row) out.data_[c][r] = v;
  return out;
}

SVec SparseMatrix::apply(const SVec& v) const {
  SVec out;
  for (const auto& [r, row] : data_) {
    Scalar acc;
    for (const auto& [c, val] : row) {
      auto it = v.find(c);
      if (it != v.end()) acc += val * it->second;
    }
    if (!acc.is_zero()) out.emplace(r, std::move(acc));
  }
  return out;
}

int rank(const SparseMatrix& m) {
  EchelonSpan span(m.cols());
  for (const auto& [r, row] : m.row_data()) span.insert(row);
  return span.rank();
}

bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& basis) {
  EchelonSpan span(static_cast<Coord>(v.size()));
  for (const auto& b : basis) {
    if (b.size() != v.size()) throw MathError("in_span: vector length mismatch");
    span.insert(to_sparse(b));
  }
  return span.contains(to_sparse(v));
}

std::vector<std::vector<Scalar>> quotient_basis(Coord ambient_dim,
                                                const std::vector<std::vector<Scalar>>& subspace) {
  EchelonSpan span(ambient_dim);
  for (const auto& b : subspace) {
    if (static_cast<Coord>(b.size()) != ambient_dim)
      throw MathError("quotient_basis: vector length mismatch");
    span.insert(to_sparse(b));
  }
  std::vector<std::vector<Scalar>> reps;
  for (Coord c : span.free_columns()) {
    std::vector<Scalar> e(static_cast<std::size_t>(ambient_dim));
    e[static_cast<std::size_t>(c)] = Scalar(1);
    reps.push_back(std::move(e));
  }
  return reps;
}

LinearSolver::LinearSolver(std::vector<SVec> basis, Coord ambient_dim)
    : ambient_(ambient_dim), count_(basis.size()), span_(ambient_dim + static_cast<Coord>(basis.size())) {
  // Augment each basis vector with a unit tail coordinate; the tail of the
  // reduced residual then records the (negated) combination.
  for (std::size_t i = 0; i < basis.size(); ++i) {
    SVec v = std::move(basis[i]);
    v.emplace(ambient_ + static_cast<Coord>(i), Scalar(1));
    span_.insert(std::move(v));
  }
}

std::optional<std::vector<Scalar>> LinearSolver::express(const SVec& v) const {
  SVec residual = span_.reduce(v);
  std::vector<Scalar> coeffs(count_);
  for (const auto& [c, val] : residual) {
    if (c < ambient_) return std::nullopt;
    coeffs[static_cast<std::size_t>(c - ambient_)] = -val;
  }
  return coeffs;
}

}  // namespace nary
