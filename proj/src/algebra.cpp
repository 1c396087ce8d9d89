#include "nary/algebra.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace nary {

namespace {

std::int64_t env_guard_value() {
  if (const char* s = std::getenv("NARY_SIZE_GUARD")) {
    char* end = nullptr;
    long long v = std::strtoll(s, &end, 10);
    if (end && *end == '\0' && v > 0) return v;
  }
  return 0;
}

}  // namespace

std::int64_t coordinate_budget() {
  std::int64_t v = env_guard_value();
  return v > 0 ? v : 5'000'000;
}

std::int64_t assoc_tuple_budget() { return 20 * coordinate_budget(); }

NAryAlgebra::NAryAlgebra(std::string name, int arity, Field field,
                         std::vector<std::string> basis_labels,
                         std::map<std::vector<int>, BasisVec> structure,
                         std::vector<int> generators)
    : name_(std::move(name)),
      arity_(arity),
      dim_(static_cast<int>(basis_labels.size())),
      field_(field),
      labels_(std::move(basis_labels)),
      structure_(std::move(structure)),
      generators_(std::move(generators)) {
  if (arity_ < 2) throw MathError("algebra arity must be >= 2");
  if (dim_ < 1) throw MathError("algebra dimension must be >= 1");
  std::set<std::string> seen(labels_.begin(), labels_.end());
  if (static_cast<int>(seen.size()) != dim_)
    throw MathError("basis labels must be pairwise distinct");
  for (auto it = structure_.begin(); it != structure_.end();) {
    const auto& [tuple, value] = *it;
    if (static_cast<int>(tuple.size()) != arity_)
      throw MathError("structure constant tuple arity mismatch");
    for (int idx : tuple)
      if (idx < 0 || idx >= dim_) throw MathError("structure constant index out of range");
    for (const auto& [idx, coeff] : value) {
      if (idx < 0 || idx >= dim_) throw MathError("structure constant value index out of range");
      if (coeff.is_zero()) throw MathError("structure constant stores a zero coefficient");
      if (field_ == Field::Q && !coeff.is_rational())
        throw MathError("omega coefficient in an algebra over Q");
    }
    if (value.empty()) {
      it = structure_.erase(it);
    } else {
      ++it;
    }
  }
  if (generators_.empty()) {
    generators_.resize(static_cast<std::size_t>(dim_));
    for (int i = 0; i < dim_; ++i) generators_[static_cast<std::size_t>(i)] = i;
  } else {
    std::set<int> gset;
    for (int g : generators_) {
      if (g < 0 || g >= dim_) throw MathError("generator index out of range");
      gset.insert(g);
    }
    generators_.assign(gset.begin(), gset.end());
  }
}

int NAryAlgebra::label_index(const std::string& lbl) const {
  for (int i = 0; i < dim_; ++i)
    if (labels_[static_cast<std::size_t>(i)] == lbl) return i;
  return -1;
}

const BasisVec* NAryAlgebra::basis_product(std::span<const int> tuple) const {
  auto it = structure_.find(std::vector<int>(tuple.begin(), tuple.end()));
  return it == structure_.end() ? nullptr : &it->second;
}

BasisVec NAryAlgebra::multiply(const std::vector<BasisVec>& args) const {
  if (static_cast<int>(args.size()) != arity_)
    throw MathError("multiply expects exactly " + std::to_string(arity_) + " arguments");
  BasisVec out;
  std::vector<int> tuple(static_cast<std::size_t>(arity_));
  std::vector<BasisVec::const_iterator> its;
  // Iterate the support product of all argument vectors.
  for (const auto& a : args) {
    if (a.empty()) return out;
    its.push_back(a.begin());
  }
  while (true) {
    Scalar coeff(1);
    for (int s = 0; s < arity_; ++s) {
      tuple[static_cast<std::size_t>(s)] = its[static_cast<std::size_t>(s)]->first;
      coeff *= its[static_cast<std::size_t>(s)]->second;
    }
    if (const BasisVec* prod = basis_product(tuple)) {
      for (const auto& [idx, v] : *prod) {
        auto it = out.find(idx);
        if (it == out.end()) {
          out.emplace(idx, v * coeff);
        } else {
          it->second += v * coeff;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
    int slot = arity_ - 1;
    while (slot >= 0) {
      auto& it = its[static_cast<std::size_t>(slot)];
      if (++it != args[static_cast<std::size_t>(slot)].end()) break;
      it = args[static_cast<std::size_t>(slot)].begin();
      --slot;
    }
    if (slot < 0) break;
  }
  return out;
}

namespace {

/// Composition with the inner product at 1-based position pos over a
/// (2n-1)-tuple of basis indices.
BasisVec composition_at(const NAryAlgebra& a, std::span<const int> tuple, int pos) {
  int n = a.arity();
  BasisVec inner;
  if (const BasisVec* p = a.basis_product(tuple.subspan(static_cast<std::size_t>(pos - 1),
                                                        static_cast<std::size_t>(n)))) {
    inner = *p;
  } else {
    return {};
  }
  BasisVec out;
  std::vector<int> outer(static_cast<std::size_t>(n));
  for (int s = 0; s < pos - 1; ++s) outer[static_cast<std::size_t>(s)] = tuple[static_cast<std::size_t>(s)];
  for (int s = pos; s < n; ++s)
    outer[static_cast<std::size_t>(s)] = tuple[static_cast<std::size_t>(s + n - 1)];
  for (const auto& [idx, coeff] : inner) {
    outer[static_cast<std::size_t>(pos - 1)] = idx;
    if (const BasisVec* p = a.basis_product(outer)) {
      for (const auto& [oidx, v] : *p) {
        auto it = out.find(oidx);
        if (it == out.end()) {
          out.emplace(oidx, v * coeff);
        } else {
          it->second += v * coeff;
          if (it->second.is_zero()) out.erase(it);
        }
      }
    }
  }
  return out;
}

}  // namespace

AssocReport check_associativity(const NAryAlgebra& a) {
  int n = a.arity();
  int len = 2 * n - 1;
  double tuples = 1;
  for (int i = 0; i < len; ++i) tuples *= a.dim();
  if (tuples > static_cast<double>(assoc_tuple_budget()))
    throw MathError("associativity check exceeds the size guard: dim^(2n-1) = " +
                    std::to_string(tuples));

  std::vector<int> tuple(static_cast<std::size_t>(len), 0);
  std::vector<BasisVec> comp(static_cast<std::size_t>(n));
  while (true) {
    for (int i = 1; i <= n; ++i) comp[static_cast<std::size_t>(i - 1)] = composition_at(a, tuple, i);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        if (comp[static_cast<std::size_t>(i - 1)] != comp[static_cast<std::size_t>(j - 1)])
          return {false, AssocWitness{tuple, i, j}};
    int slot = len - 1;
    while (slot >= 0 && tuple[static_cast<std::size_t>(slot)] == a.dim() - 1) {
      tuple[static_cast<std::size_t>(slot)] = 0;
      --slot;
    }
    if (slot < 0) break;
    ++tuple[static_cast<std::size_t>(slot)];
  }
  return {true, std::nullopt};
}

NAryAlgebra nary_from_binary(const NAryAlgebra& binary, int n) {
  if (binary.arity() != 2) throw MathError("nary_from_binary expects a binary algebra");
  if (n < 2) throw MathError("nary_from_binary arity must be >= 2");
  AssocReport rep = check_associativity(binary);
  if (!rep.pass) throw MathError("nary_from_binary: input algebra is not associative");

  std::map<std::vector<int>, BasisVec> structure;
  std::vector<int> tuple(static_cast<std::size_t>(n), 0);
  while (true) {
    // Right-nested product a1 (a2 (... an)).
    BasisVec cur;
    cur.emplace(tuple[static_cast<std::size_t>(n - 1)], Scalar(1));
    for (int s = n - 2; s >= 0; --s) {
      BasisVec left;
      left.emplace(tuple[static_cast<std::size_t>(s)], Scalar(1));
      cur = binary.multiply({left, cur});
      if (cur.empty()) break;
    }
    if (!cur.empty()) structure.emplace(tuple, std::move(cur));
    int slot = n - 1;
    while (slot >= 0 && tuple[static_cast<std::size_t>(slot)] == binary.dim() - 1) {
      tuple[static_cast<std::size_t>(slot)] = 0;
      --slot;
    }
    if (slot < 0) break;
    ++tuple[static_cast<std::size_t>(slot)];
  }
  return NAryAlgebra(binary.name() + "_" + std::to_string(n) + "ary", n, binary.field(),
                     binary.labels(), std::move(structure), binary.generators());
}

namespace {

/// Wedge of sorted index sets; returns sign and the merged set, or 0.
std::optional<std::pair<int, std::vector<int>>> wedge_merge(const std::vector<std::vector<int>>& parts) {
  std::vector<int> seq;
  for (const auto& p : parts) seq.insert(seq.end(), p.begin(), p.end());
  int inversions = 0;
  for (std::size_t i = 0; i < seq.size(); ++i)
    for (std::size_t j = i + 1; j < seq.size(); ++j) {
      if (seq[i] == seq[j]) return std::nullopt;
      if (seq[i] > seq[j]) ++inversions;
    }
  std::vector<int> merged = seq;
  std::sort(merged.begin(), merged.end());
  return std::make_pair(inversions % 2 == 0 ? 1 : -1, merged);
}

std::string monomial_label(const std::vector<int>& subset) {
  if (subset.empty()) return "1";
  std::string s = "e";
  for (int i : subset) s += std::to_string(i);
  return s;
}

std::vector<std::vector<int>> subsets_with_parity(int n, int parity) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) % 2 != parity) continue;
    std::vector<int> subset;
    for (int i = 0; i < n; ++i)
      if (mask & (1 << i)) subset.push_back(i + 1);
    out.push_back(std::move(subset));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

}  // namespace

NAryAlgebra exterior_odd(int n_generators) {
  if (n_generators < 1) throw MathError("exterior_odd needs at least one generator");
  if (n_generators > 20) throw MathError("exterior_odd size guard");
  auto basis = subsets_with_parity(n_generators, 1);
  std::map<std::vector<int>, int> index_of;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    index_of[basis[i]] = static_cast<int>(i);
    labels.push_back(monomial_label(basis[i]));
  }
  std::map<std::vector<int>, BasisVec> structure;
  int dim = static_cast<int>(basis.size());
  std::vector<int> tuple(3, 0);
  while (true) {
    auto merged = wedge_merge({basis[static_cast<std::size_t>(tuple[0])],
                               basis[static_cast<std::size_t>(tuple[1])],
                               basis[static_cast<std::size_t>(tuple[2])]});
    if (merged) {
      auto it = index_of.find(merged->second);
      if (it != index_of.end()) {
        BasisVec v;
        v.emplace(it->second, Scalar(merged->first));
        structure.emplace(tuple, std::move(v));
      }
    }
    int slot = 2;
    while (slot >= 0 && tuple[static_cast<std::size_t>(slot)] == dim - 1) {
      tuple[static_cast<std::size_t>(slot)] = 0;
      --slot;
    }
    if (slot < 0) break;
    ++tuple[static_cast<std::size_t>(slot)];
  }
  std::vector<int> generators;
  for (int i = 0; i < n_generators; ++i) generators.push_back(i);
  return NAryAlgebra("exterior_odd" + std::to_string(n_generators), 3, Field::Q,
                     std::move(labels), std::move(structure), std::move(generators));
}

NAryAlgebra truncated_poly_nary(int arity, int truncation) {
  if (arity < 2) throw MathError("truncated_poly_nary arity must be >= 2");
  if (truncation < arity) throw MathError("truncated_poly_nary needs t >= n");
  std::vector<int> degrees;
  for (int d = 1; d < truncation; ++d)
    if ((d - 1) % (arity - 1) == 0) degrees.push_back(d);
  std::map<int, int> index_of;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    index_of[degrees[i]] = static_cast<int>(i);
    labels.push_back(degrees[i] == 1 ? "x" : "x" + std::to_string(degrees[i]));
  }
  int dim = static_cast<int>(degrees.size());
  std::map<std::vector<int>, BasisVec> structure;
  std::vector<int> tuple(static_cast<std::size_t>(arity), 0);
  while (true) {
    long long total = 0;
    for (int s = 0; s < arity; ++s) total += degrees[static_cast<std::size_t>(tuple[static_cast<std::size_t>(s)])];
    if (total < truncation) {
      auto it = index_of.find(static_cast<int>(total));
      if (it != index_of.end()) {
        BasisVec v;
        v.emplace(it->second, Scalar(1));
        structure.emplace(tuple, std::move(v));
      }
    }
    int slot = arity - 1;
    while (slot >= 0 && tuple[static_cast<std::size_t>(slot)] == dim - 1) {
      tuple[static_cast<std::size_t>(slot)] = 0;
      --slot;
    }
    if (slot < 0) break;
    ++tuple[static_cast<std::size_t>(slot)];
  }
  return NAryAlgebra("truncpoly_n" + std::to_string(arity) + "_t" + std::to_string(truncation),
                     arity, Field::Q, std::move(labels), std::move(structure));
}

NAryAlgebra matrix_algebra(int k) {
  if (k < 1 || k > 16) throw MathError("matrix_algebra size out of range");
  std::vector<std::string> labels;
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= k; ++c) labels.push_back("E" + std::to_string(r) + std::to_string(c));
  std::map<std::vector<int>, BasisVec> structure;
  for (int a = 0; a < k * k; ++a)
    for (int b = 0; b < k * k; ++b) {
      int ar = a / k, ac = a % k, br = b / k, bc = b % k;
      if (ac != br) continue;
      BasisVec v;
      v.emplace(ar * k + bc, Scalar(1));
      structure.emplace(std::vector<int>{a, b}, std::move(v));
    }
  return NAryAlgebra("M" + std::to_string(k), 2, Field::Q, std::move(labels), std::move(structure));
}

bool is_j_commutative(const NAryAlgebra& a, const Scalar& j) {
  if (a.arity() != 3) throw MathError("is_j_commutative expects a ternary algebra");
  if (j * j * j != Scalar(1)) throw MathError("j must be a cube root of unity");
  Scalar j2 = j * j;
  int dim = a.dim();
  for (int x = 0; x < dim; ++x)
    for (int y = 0; y < dim; ++y)
      for (int z = 0; z < dim; ++z) {
        std::vector<int> abc{x, y, z}, bca{y, z, x}, cab{z, x, y};
        const BasisVec* p_abc = a.basis_product(abc);
        const BasisVec* p_bca = a.basis_product(bca);
        const BasisVec* p_cab = a.basis_product(cab);
        BasisVec lhs = p_abc ? *p_abc : BasisVec{};
        BasisVec want_bca, want_cab;
        if (p_bca)
          for (const auto& [idx, v] : *p_bca) {
            Scalar s = v * j;
            if (!s.is_zero()) want_bca.emplace(idx, s);
          }
        if (p_cab)
          for (const auto& [idx, v] : *p_cab) {
            Scalar s = v * j2;
            if (!s.is_zero()) want_cab.emplace(idx, s);
          }
        if (lhs != want_bca || lhs != want_cab) return false;
      }
  return true;
}

}  // namespace nary
