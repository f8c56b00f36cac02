#include "colorlie/koszul.hpp"

#include <stdexcept>

namespace colorlie {

SignAlgebra::SignAlgebra(std::vector<bool> square_zero, std::vector<std::vector<bool>> commuting)
    : square_zero_(std::move(square_zero)), commuting_(std::move(commuting)) {
  const std::size_t n = square_zero_.size();
  if (commuting_.size() != n) throw std::invalid_argument("commuting table must be n x n");
  for (const auto& row : commuting_)
    if (row.size() != n) throw std::invalid_argument("commuting table must be n x n");
}

int SignAlgebra::square_zero_count() const {
  int q = 0;
  for (bool b : square_zero_) q += b ? 1 : 0;
  return q;
}

bool operator==(const SignAlgebra& a, const SignAlgebra& b) {
  if (a.generators() != b.generators()) return false;
  for (int i = 0; i < a.generators(); ++i) {
    if (a.square_zero(i) != b.square_zero(i)) return false;
    for (int j = i + 1; j < a.generators(); ++j)
      if (a.commute(i, j) != b.commute(i, j)) return false;
  }
  return true;
}

std::string SignAlgebra::describe() const {
  std::string j = "J={", q = "Q={";
  bool first = true;
  for (int i = 0; i < generators(); ++i) {
    if (!square_zero(i)) continue;
    j += (first ? "" : ",") + std::to_string(i + 1);
    first = false;
  }
  first = true;
  for (int i = 0; i < generators(); ++i) {
    for (int k = i + 1; k < generators(); ++k) {
      if (!commute(i, k)) continue;
      q += std::string(first ? "" : ",") + "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
      first = false;
    }
  }
  return j + "} " + q + "}";
}

SignAlgebra quadratic_dual(const SignAlgebra& a) {
  const int n = a.generators();
  std::vector<bool> sq(static_cast<std::size_t>(n));
  std::vector<std::vector<bool>> comm(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    sq[static_cast<std::size_t>(i)] = !a.square_zero(i);
    for (int j = i + 1; j < n; ++j) comm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = !a.commute(i, j);
  }
  return SignAlgebra(std::move(sq), std::move(comm));
}

SignAlgebra abelian_enveloping(const CommutationMatrix& cm) {
  const int n = cm.size();
  std::vector<bool> sq(static_cast<std::size_t>(n));
  std::vector<std::vector<bool>> comm(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int i = 0; i < n; ++i) {
    sq[static_cast<std::size_t>(i)] = cm(i, i) == -1;
    for (int j = i + 1; j < n; ++j) comm[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = cm(i, j) == 1;
  }
  return SignAlgebra(std::move(sq), std::move(comm));
}

std::vector<DualMonomial> monomial_basis(const SignAlgebra& a, int degree) {
  const int n = a.generators();
  std::vector<DualMonomial> out;
  if (degree < 0) return out;
  DualMonomial current(static_cast<std::size_t>(n), 0);
  // Exponents of earlier generators are chosen largest first, which yields
  // MonomialOrder directly.
  const auto fill = [&](auto&& self, int i, int remaining) -> void {
    if (i == n - 1 || n == 0) {
      if (n == 0) {
        if (remaining == 0) out.push_back(current);
        return;
      }
      if (a.square_zero(i) && remaining > 1) return;
      current[static_cast<std::size_t>(i)] = remaining;
      out.push_back(current);
      return;
    }
    const int cap = a.square_zero(i) ? std::min(1, remaining) : remaining;
    for (int e = cap; e >= 0; --e) {
      current[static_cast<std::size_t>(i)] = e;
      self(self, i + 1, remaining - e);
    }
    current[static_cast<std::size_t>(i)] = 0;
  };
  fill(fill, 0, degree);
  return out;
}

std::optional<std::pair<int, DualMonomial>> multiply_monomials(const SignAlgebra& a, const DualMonomial& x,
                                                               const DualMonomial& y) {
  const int n = a.generators();
  DualMonomial out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = x[static_cast<std::size_t>(i)] + y[static_cast<std::size_t>(i)];
    if (a.square_zero(i) && out[static_cast<std::size_t>(i)] > 1) return std::nullopt;
  }
  // Each f_j of y moves left past the f_i^{x_i} with i > j.
  int parity = 0;
  for (int j = 0; j < n; ++j) {
    if (y[static_cast<std::size_t>(j)] % 2 == 0) continue;
    for (int i = j + 1; i < n; ++i)
      if (!a.commute(i, j) && x[static_cast<std::size_t>(i)] % 2 == 1) parity ^= 1;
  }
  return std::make_pair(parity ? -1 : 1, std::move(out));
}

std::string monomial_to_string(const DualMonomial& m, const std::string& letter) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    out += letter + std::to_string(i + 1);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

RationalSeries hilbert_series(const SignAlgebra& a) {
  const int j = a.square_zero_count();
  return RationalSeries(pow(one_plus_z(), j), pow(one_minus_z_pow(1), a.generators() - j));
}

}  // namespace colorlie
