#pragma once

#include <Eigen/Core>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/exact_linalg.hpp"
#include "colorlie/scalar.hpp"

namespace colorlie {

/// Values of the commutation factor on the homogeneous generators:
/// s(i,j) = eps(deg e_i, deg e_j), +1 for a commutator, -1 for an
/// anticommutator. Indices are 0-based.
class CommutationMatrix {
 public:
  CommutationMatrix() = default;
  /// Throws std::invalid_argument if `signs` is not square.
  explicit CommutationMatrix(Eigen::MatrixXi signs);

  int size() const { return static_cast<int>(signs_.rows()); }
  int operator()(int i, int j) const { return signs_(i, j); }
  const Eigen::MatrixXi& signs() const { return signs_; }

  friend bool operator==(const CommutationMatrix& a, const CommutationMatrix& b) {
    return a.signs_.rows() == b.signs_.rows() && a.signs_ == b.signs_;
  }

 private:
  Eigen::MatrixXi signs_;
};

struct ValidationIssue {
  std::string kind;  // "commutation", "diagonal", "grading", "degrees", "jacobi"
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  void append(const ValidationReport& other) {
    issues.insert(issues.end(), other.issues.begin(), other.issues.end());
  }
};

/// OK iff every entry is +-1 and s(i,j) s(j,i) = 1. Reports 1-based pairs.
ValidationReport validate_commutation(const CommutationMatrix& cm);

/// True iff no two rows coincide.
bool is_injective(const CommutationMatrix& cm);

/// Optional Z_2^m degrees for the generators.
struct GradingAssignment {
  int bits = 0;
  std::vector<std::vector<int>> degrees;  // one 0/1 vector of length `bits` per generator
};

/// Solves over Z_2 for a bilinear form B with s(i,j) = (-1)^(deg_i B deg_j).
/// Returns B (bits x bits, entries 0/1) or nullopt when none exists.
std::optional<Eigen::MatrixXi> find_bilinear_form(const GradingAssignment& grading, const CommutationMatrix& cm);

enum class ComponentClass { abelian, lie_algebra, lie_superalgebra, not_applicable };
std::string to_string(ComponentClass c);

template <ExactScalar S>
class ColorLieAlgebra {
 public:
  /// Keys are 0-based (i, j) with i <= j; values are c_ij^k for k = 0..n-1.
  using BracketTable = std::map<std::pair<int, int>, ExactVector<S>>;

  ColorLieAlgebra() = default;

  /// Throws std::invalid_argument on malformed structure data (index out of
  /// range, i > j, wrong coefficient length). Mathematical axioms are not
  /// enforced here; see validate().
  ColorLieAlgebra(CommutationMatrix cm, BracketTable brackets, std::optional<GradingAssignment> grading = {})
      : cm_(std::move(cm)), grading_(std::move(grading)) {
    const int n = cm_.size();
    for (auto& [key, coeffs] : brackets) {
      const auto [i, j] = key;
      if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("bracket index out of range");
      if (i > j) throw std::invalid_argument("bracket keys must satisfy i <= j");
      if (coeffs.size() != n) throw std::invalid_argument("bracket coefficient vector has wrong length");
      if (!is_zero(coeffs)) brackets_.emplace(key, coeffs);
    }
    if (grading_) {
      if (static_cast<int>(grading_->degrees.size()) != n)
        throw std::invalid_argument("grading must list one degree per generator");
      for (const auto& d : grading_->degrees)
        if (static_cast<int>(d.size()) != grading_->bits)
          throw std::invalid_argument("grading degree has wrong bit length");
    }
  }

  int dimension() const { return cm_.size(); }
  const CommutationMatrix& commutation() const { return cm_; }
  const BracketTable& brackets() const { return brackets_; }
  const std::optional<GradingAssignment>& grading() const { return grading_; }
  bool is_abelian() const { return brackets_.empty(); }

  /// Stored c_ij^. for i <= j (zero vector when absent).
  ExactVector<S> stored(int i, int j) const {
    const auto it = brackets_.find({i, j});
    return it == brackets_.end() ? zero_vector<S>(dimension()) : it->second;
  }

  friend bool operator==(const ColorLieAlgebra& a, const ColorLieAlgebra& b) {
    if (!(a.cm_ == b.cm_) || a.brackets_.size() != b.brackets_.size()) return false;
    for (const auto& [key, v] : a.brackets_) {
      const auto it = b.brackets_.find(key);
      if (it == b.brackets_.end() || !(it->second == v)) return false;
    }
    return true;
  }

 private:
  CommutationMatrix cm_;
  BracketTable brackets_;
  std::optional<GradingAssignment> grading_;
};

/// <e_i, e_j> using graded skew-symmetry for i > j. 0-based; throws
/// std::out_of_range on bad indices.
template <ExactScalar S>
ExactVector<S> full_bracket(const ColorLieAlgebra<S>& g, int i, int j) {
  const int n = g.dimension();
  if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("generator index out of range");
  if (i <= j) return g.stored(i, j);
  ExactVector<S> v = g.stored(j, i);
  const S factor(-g.commutation()(i, j));
  for (Index k = 0; k < v.size(); ++k) v(k) = v(k) * factor;
  return v;
}

/// Bilinear extension of the bracket to coordinate vectors.
template <ExactScalar S>
ExactVector<S> bracket(const ColorLieAlgebra<S>& g, const ExactVector<S>& x, const ExactVector<S>& y) {
  const int n = g.dimension();
  ExactVector<S> out = zero_vector<S>(n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      const ExactVector<S> b = full_bracket(g, i, j);
      if (is_zero(b)) continue;
      const S w = x(i) * y(j);
      for (int k = 0; k < n; ++k)
        if (!b(k).is_zero()) out(k) = out(k) + w * b(k);
    }
  }
  return out;
}

template <ExactScalar S>
ExactVector<S> unit_vector(int n, int i) {
  ExactVector<S> v = zero_vector<S>(n);
  v(i) = S(1);
  return v;
}

template <ExactScalar S>
struct JacobiDefect {
  int i, j, k;  // 0-based, i <= j <= k
  ExactVector<S> defect;
};

/// Evaluates eps(c,a)<a,<b,c>> + eps(b,c)<c,<a,b>> + eps(a,b)<b,<c,a>> on
/// every basis triple i <= j <= k and returns the nonzero ones.
template <ExactScalar S>
std::vector<JacobiDefect<S>> jacobi_defect(const ColorLieAlgebra<S>& g) {
  const int n = g.dimension();
  const CommutationMatrix& s = g.commutation();
  std::vector<JacobiDefect<S>> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      for (int k = j; k < n; ++k) {
        const ExactVector<S> a = unit_vector<S>(n, i), b = unit_vector<S>(n, j), c = unit_vector<S>(n, k);
        const ExactVector<S> t1 = bracket(g, a, full_bracket(g, j, k));
        const ExactVector<S> t2 = bracket(g, c, full_bracket(g, i, j));
        const ExactVector<S> t3 = bracket(g, b, full_bracket(g, k, i));
        ExactVector<S> sum = zero_vector<S>(n);
        for (int m = 0; m < n; ++m)
          sum(m) = S(s(k, i)) * t1(m) + S(s(j, k)) * t2(m) + S(s(i, j)) * t3(m);
        if (!is_zero(sum)) out.push_back({i, j, k, std::move(sum)});
      }
    }
  }
  return out;
}

/// Pairs (i,j) -> k with c_ij^k != 0 but s(k,.) != s(i,.) s(j,.).
struct GradingViolation {
  int i, j, k;  // 0-based
};

template <ExactScalar S>
std::vector<GradingViolation> grading_violations(const ColorLieAlgebra<S>& g) {
  const int n = g.dimension();
  const CommutationMatrix& s = g.commutation();
  std::vector<GradingViolation> out;
  for (const auto& [key, coeffs] : g.brackets()) {
    const auto [i, j] = key;
    for (int k = 0; k < n; ++k) {
      if (coeffs(k).is_zero()) continue;
      for (int l = 0; l < n; ++l) {
        if (s(k, l) != s(i, l) * s(j, l)) {
          out.push_back({i, j, k});
          break;
        }
      }
    }
  }
  return out;
}

/// Full axiom check: commutation matrix, diagonal brackets, grading
/// compatibility, optional Z_2^m degrees, generalized Jacobi identity.
template <ExactScalar S>
ValidationReport validate(const ColorLieAlgebra<S>& g) {
  ValidationReport report = validate_commutation(g.commutation());
  const CommutationMatrix& s = g.commutation();
  for (const auto& [key, coeffs] : g.brackets()) {
    if (key.first == key.second && s(key.first, key.first) == 1) {
      report.issues.push_back({"diagonal", "bracket <e" + std::to_string(key.first + 1) + ",e" +
                                               std::to_string(key.first + 1) +
                                               "> must vanish since s(i,i) = +1"});
    }
  }
  for (const auto& v : grading_violations(g)) {
    report.issues.push_back({"grading", "c_{" + std::to_string(v.i + 1) + std::to_string(v.j + 1) + "}^" +
                                            std::to_string(v.k + 1) +
                                            " is nonzero but e" + std::to_string(v.k + 1) +
                                            " has the wrong commutation signs"});
  }
  if (g.grading() && !find_bilinear_form(*g.grading(), s)) {
    report.issues.push_back({"degrees", "no bilinear form on Z_2^m reproduces the commutation matrix"});
  }
  if (!validate_commutation(s).ok()) return report;
  for (const auto& d : jacobi_defect(g)) {
    std::string vec;
    for (Index m = 0; m < d.defect.size(); ++m) vec += (m ? "," : "") + d.defect(m).to_string();
    report.issues.push_back({"jacobi", "Jacobi identity fails on (e" + std::to_string(d.i + 1) + ",e" +
                                           std::to_string(d.j + 1) + ",e" + std::to_string(d.k + 1) +
                                           "): defect (" + vec + ")"});
  }
  return report;
}

template <ExactScalar S>
struct DerivedAlgebra {
  Index dimension = 0;
  std::vector<ExactVector<S>> basis;
};

/// [g,g] as the span of all brackets of basis elements.
template <ExactScalar S>
DerivedAlgebra<S> derived_algebra(const ColorLieAlgebra<S>& g) {
  const int n = g.dimension();
  std::vector<ExactVector<S>> brackets;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) brackets.push_back(full_bracket(g, i, j));
  DerivedAlgebra<S> out;
  out.basis = image_basis<S>(columns_matrix<S>(brackets, n));
  out.dimension = static_cast<Index>(out.basis.size());
  return out;
}

template <ExactScalar S>
ColorLieAlgebra<S> associated_abelian(const ColorLieAlgebra<S>& g) {
  return ColorLieAlgebra<S>(g.commutation(), {}, g.grading());
}

/// Classification of algebras with at most two distinct homogeneous
/// components (by their Z_2^m degree). Throws std::invalid_argument without
/// a grading assignment.
template <ExactScalar S>
ComponentClass two_component_reduction(const ColorLieAlgebra<S>& g) {
  if (!g.grading()) throw std::invalid_argument("two_component_reduction needs a grading assignment");
  const auto& degrees = g.grading()->degrees;
  std::vector<std::vector<int>> components;
  std::vector<int> representative;
  for (int i = 0; i < g.dimension(); ++i) {
    bool seen = false;
    for (const auto& c : components) seen = seen || c == degrees[static_cast<std::size_t>(i)];
    if (!seen) {
      components.push_back(degrees[static_cast<std::size_t>(i)]);
      representative.push_back(i);
    }
  }
  if (components.size() > 2) return ComponentClass::not_applicable;
  if (g.is_abelian()) return ComponentClass::abelian;
  const auto is_zero_degree = [](const std::vector<int>& d) {
    for (int b : d)
      if (b) return false;
    return true;
  };
  const CommutationMatrix& s = g.commutation();
  if (components.size() == 1) {
    // <g_i, g_i> lies in g_{2i} = g_0, which is g itself only for i = 0.
    return is_zero_degree(components[0]) ? ComponentClass::lie_algebra : ComponentClass::abelian;
  }
  for (std::size_t c = 0; c < 2; ++c) {
    if (!is_zero_degree(components[c])) continue;
    const int other = representative[1 - c];
    return s(other, other) == 1 ? ComponentClass::lie_algebra : ComponentClass::lie_superalgebra;
  }
  // i, j != 0: <g_i,g_j> lies in g_{i+j} = 0 and <g_i,g_i> in g_0 = 0.
  return ComponentClass::abelian;
}

/// Rational specialization t -> value of every structure constant.
ColorLieAlgebra<Rational> specialize(const ColorLieAlgebra<RationalFunction>& g, const Rational& value);
/// Q -> Q(t) embedding.
ColorLieAlgebra<RationalFunction> promote(const ColorLieAlgebra<Rational>& g);

}  // namespace colorlie
