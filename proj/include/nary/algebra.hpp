#ifndef NARY_ALGEBRA_HPP
#define NARY_ALGEBRA_HPP

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nary/linalg.hpp"
#include "nary/scalar.hpp"

namespace nary {

enum class Field { Q, QOmega };

/// Element of an algebra in basis coordinates; no stored zero coefficients.
using BasisVec = std::map<int, Scalar>;

/// Size guards.  The coordinate budget bounds any single word-space
/// enumeration; the associativity guard bounds dim^(2n-1) tuple scans.
/// NARY_SIZE_GUARD=<int> overrides the coordinate budget (the tuple guard
/// scales with it as 20x).
std::int64_t coordinate_budget();
std::int64_t assoc_tuple_budget();

/// Finite-dimensional n-ary algebra given by structure constants.
/// Absent tuples denote the zero product.  Immutable after construction.
class NAryAlgebra {
 public:
  NAryAlgebra(std::string name, int arity, Field field, std::vector<std::string> basis_labels,
              std::map<std::vector<int>, BasisVec> structure,
              std::vector<int> generators = {});

  const std::string& name() const { return name_; }
  int arity() const { return arity_; }
  int dim() const { return dim_; }
  Field field() const { return field_; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(static_cast<std::size_t>(i)); }
  const std::vector<int>& generators() const { return generators_; }
  const std::map<std::vector<int>, BasisVec>& structure() const { return structure_; }

  int label_index(const std::string& lbl) const;  // -1 when unknown

  /// Product of basis elements; nullptr means zero.
  const BasisVec* basis_product(std::span<const int> tuple) const;

  /// n-linear extension of the structure constants to arbitrary elements.
  BasisVec multiply(const std::vector<BasisVec>& args) const;

 private:
  std::string name_;
  int arity_;
  int dim_;
  Field field_;
  std::vector<std::string> labels_;
  std::map<std::vector<int>, BasisVec> structure_;
  std::vector<int> generators_;
};

struct AssocWitness {
  std::vector<int> tuple;  // 2n-1 basis indices
  int pos_i = 0, pos_j = 0;  // inner-product positions, 1-based
};

struct AssocReport {
  bool pass = false;
  std::optional<AssocWitness> violation;  // lexicographically first
};

/// Exhaustive check of full associativity over all basis (2n-1)-tuples and
/// all inner positions 1..n.  Deterministic first witness on failure.
AssocReport check_associativity(const NAryAlgebra& a);

/// n-ary algebra with the iterated product of an associative binary algebra.
/// Throws MathError when the input is not binary associative.
NAryAlgebra nary_from_binary(const NAryAlgebra& binary, int n);

/// Ternary algebra of the odd-degree wedge monomials of Lambda(R^N);
/// dim = 2^(N-1), generators = the N degree-1 monomials.
NAryAlgebra exterior_odd(int n_generators);

/// Monomials x^d, d = 1 mod (n-1), d < t, inside Q[x]/(x^t) with the n-fold
/// truncated multiplication.  Supplies even-arity instances.
NAryAlgebra truncated_poly_nary(int arity, int truncation);

/// Full matrix algebra M_k(Q) as a binary algebra (basis E_ij).
NAryAlgebra matrix_algebra(int k);

/// Ternary predicate abc = j*bca = j^2*cab over all basis triples.
/// Throws MathError unless j^3 = 1.
bool is_j_commutative(const NAryAlgebra& a, const Scalar& j);

}  // namespace nary

#endif
