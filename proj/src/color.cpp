#include "colorlie/color.hpp"

#include <bitset>

namespace colorlie {

CommutationMatrix::CommutationMatrix(Eigen::MatrixXi signs) : signs_(std::move(signs)) {
  if (signs_.rows() != signs_.cols()) throw std::invalid_argument("commutation matrix must be square");
}

ValidationReport validate_commutation(const CommutationMatrix& cm) {
  ValidationReport report;
  const int n = cm.size();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const int a = cm(i, j), b = cm(j, i);
      const bool signs_ok = (a == 1 || a == -1) && (b == 1 || b == -1);
      if (!signs_ok || a * b != 1) {
        report.issues.push_back({"commutation", "commutation matrix violates s(i,j)s(j,i) = 1 at (" +
                                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"});
      }
    }
  }
  return report;
}

bool is_injective(const CommutationMatrix& cm) {
  for (int i = 0; i < cm.size(); ++i)
    for (int j = i + 1; j < cm.size(); ++j)
      if (cm.signs().row(i) == cm.signs().row(j)) return false;
  return true;
}

std::optional<Eigen::MatrixXi> find_bilinear_form(const GradingAssignment& grading, const CommutationMatrix& cm) {
  const int m = grading.bits;
  const int n = cm.size();
  const int unknowns = m * m;
  // Augmented rows over Z_2; one equation per ordered generator pair.
  std::vector<std::vector<int>> rows;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      std::vector<int> row(static_cast<std::size_t>(unknowns) + 1, 0);
      const auto& di = grading.degrees[static_cast<std::size_t>(i)];
      const auto& dj = grading.degrees[static_cast<std::size_t>(j)];
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) row[static_cast<std::size_t>(a * m + b)] = (di[a] & dj[b]) & 1;
      row.back() = cm(i, j) == -1 ? 1 : 0;
      rows.push_back(std::move(row));
    }
  }
  std::vector<int> pivot_of_row;
  std::size_t r = 0;
  for (int c = 0; c < unknowns && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][static_cast<std::size_t>(c)] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][static_cast<std::size_t>(c)] == 0) continue;
      for (std::size_t k = 0; k < rows[i].size(); ++k) rows[i][k] ^= rows[r][k];
    }
    pivot_of_row.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows.size(); ++i)
    if (rows[i].back()) return std::nullopt;
  Eigen::MatrixXi form = Eigen::MatrixXi::Zero(m, m);
  for (std::size_t i = 0; i < r; ++i) {
    const int c = pivot_of_row[i];
    form(c / m, c % m) = rows[i].back();
  }
  return form;
}

std::string to_string(ComponentClass c) {
  switch (c) {
    case ComponentClass::abelian: return "abelian";
    case ComponentClass::lie_algebra: return "lie_algebra";
    case ComponentClass::lie_superalgebra: return "lie_superalgebra";
    case ComponentClass::not_applicable: return "not_applicable";
  }
  return "unknown";
}

ColorLieAlgebra<Rational> specialize(const ColorLieAlgebra<RationalFunction>& g, const Rational& value) {
  ColorLieAlgebra<Rational>::BracketTable table;
  for (const auto& [key, coeffs] : g.brackets()) {
    ExactVector<Rational> v(coeffs.size());
    for (Index k = 0; k < coeffs.size(); ++k) v(k) = coeffs(k).evaluate(value);
    table.emplace(key, std::move(v));
  }
  return ColorLieAlgebra<Rational>(g.commutation(), std::move(table), g.grading());
}

ColorLieAlgebra<RationalFunction> promote(const ColorLieAlgebra<Rational>& g) {
  ColorLieAlgebra<RationalFunction>::BracketTable table;
  for (const auto& [key, coeffs] : g.brackets()) {
    ExactVector<RationalFunction> v(coeffs.size());
    for (Index k = 0; k < coeffs.size(); ++k) v(k) = RationalFunction(coeffs(k));
    table.emplace(key, std::move(v));
  }
  return ColorLieAlgebra<RationalFunction>(g.commutation(), std::move(table), g.grading());
}

}  // namespace colorlie
