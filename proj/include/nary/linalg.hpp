#ifndef NARY_LINALG_HPP
#define NARY_LINALG_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "nary/scalar.hpp"

namespace nary {

using Coord = std::int64_t;

/// Sparse coordinate vector; invariant: no stored zero entries.
using SVec = std::map<Coord, Scalar>;

void svec_add_scaled(SVec& dst, const SVec& src, const Scalar& factor);
SVec svec_scaled(const SVec& v, const Scalar& factor);
bool svec_eq(const SVec& a, const SVec& b);

SVec to_sparse(const std::vector<Scalar>& dense);
std::vector<Scalar> to_dense(const SVec& v, Coord dim);

/// Row space in echelon form over exact scalars.  Each stored row has a
/// distinct leading (pivot) column with coefficient 1 and no support on any
/// smaller pivot column.  Pivot selection is the first nonzero entry in
/// column order, so pivots and quotient representatives are deterministic.
class EchelonSpan {
 public:
  explicit EchelonSpan(Coord ambient_dim = 0) : ambient_(ambient_dim) {}

  /// Inserts v into the span; returns true iff the rank grew.
  bool insert(SVec v);

  /// Residual of v after eliminating every pivot column; empty iff v lies in
  /// the span.  The residual is supported on free columns only.
  SVec reduce(SVec v) const;

  bool contains(const SVec& v) const { return reduce(v).empty(); }

  int rank() const { return static_cast<int>(rows_.size()); }
  Coord ambient_dim() const { return ambient_; }

  /// pivot column -> row (sorted by pivot column).
  const std::map<Coord, SVec>& rows() const { return rows_; }

  /// Columns without a pivot, in increasing order.
  std::vector<Coord> free_columns() const;

 private:
  Coord ambient_;
  std::map<Coord, SVec> rows_;
};

/// Sparse exact matrix; rows hold maps col -> Scalar with no zero entries.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(Coord rows, Coord cols) : nrows_(rows), ncols_(cols) {}

  static SparseMatrix identity(Coord n);

  Coord rows() const { return nrows_; }
  Coord cols() const { return ncols_; }

  void set(Coord r, Coord c, Scalar v);
  void add(Coord r, Coord c, const Scalar& v);
  Scalar get(Coord r, Coord c) const;

  const SVec& row(Coord r) const;
  const std::map<Coord, SVec>& row_data() const { return data_; }

  std::uint64_t nonzero_count() const;
  bool is_zero() const { return data_.empty(); }

  SparseMatrix multiply(const SparseMatrix& other) const;
  SparseMatrix transpose() const;

  /// Matrix * column-vector.
  SVec apply(const SVec& v) const;

  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
    return a.nrows_ == b.nrows_ && a.ncols_ == b.ncols_ && a.data_ == b.data_;
  }

 private:
  Coord nrows_ = 0, ncols_ = 0;
  std::map<Coord, SVec> data_;  // row -> (col -> value)
};

/// Rank over the scalar field by exact elimination; deterministic.
int rank(const SparseMatrix& m);

/// True iff v is a linear combination of the basis vectors.
/// Throws MathError when the vector lengths disagree.
bool in_span(const std::vector<Scalar>& v, const std::vector<std::vector<Scalar>>& basis);

/// Representatives of a basis of the quotient space: the standard-basis
/// vectors whose indices are not pivot columns of the subspace.
std::vector<std::vector<Scalar>> quotient_basis(Coord ambient_dim,
                                                const std::vector<std::vector<Scalar>>& subspace);

/// Expresses vectors in terms of a fixed spanning list; used to produce
/// structure constants of subalgebras.
class LinearSolver {
 public:
  LinearSolver(std::vector<SVec> basis, Coord ambient_dim);

  /// Coefficients c with v = sum c_i basis_i, or nullopt when v is outside
  /// the span.  For a dependent spanning list the representation is the
  /// deterministic one produced by elimination order.
  std::optional<std::vector<Scalar>> express(const SVec& v) const;

  int rank() const { return span_.rank(); }

 private:
  Coord ambient_;
  std::size_t count_;
  EchelonSpan span_;
};

}  // namespace nary

#endif
