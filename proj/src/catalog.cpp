#include "colorlie/catalog.hpp"

#include <stdexcept>

namespace colorlie::catalog {

namespace {

CommutationMatrix signs3(int s11, int s22, int s33, int s12, int s13, int s23) {
  Eigen::MatrixXi m(3, 3);
  m << s11, s12, s13, s12, s22, s23, s13, s23, s33;
  return CommutationMatrix(m);
}

std::vector<CatalogEntry> make_entries() {
  const CommutationMatrix even_pair = signs3(1, 1, 1, 1, 1, -1);
  const CommutationMatrix heis = signs3(1, 1, 1, -1, -1, -1);
  const CommutationMatrix odd3 = signs3(1, 1, -1, 1, 1, -1);
  const CommutationMatrix odd23 = signs3(1, -1, -1, 1, 1, 1);
  const CommutationMatrix mixed = signs3(1, -1, -1, -1, -1, 1);
  return {
      {1, 16, even_pair, {{0, 1, 1, true}, {0, 2, 2}},
       "[e1,e2] = mu e2, mu != 0\n[e1,e3] = e3\n{e2,e3} = 0",
       "1+z, mu != -1; 1+z+z^2+z^3, mu = -1"},
      {2, 17, even_pair, {{0, 1, 1}}, "[e1,e2] = e2\n[e1,e3] = 0\n{e2,e3} = 0", "1+2z+z^2"},
      {3, 1, heis, {{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}, "{e1,e2} = e3\n{e1,e3} = e2\n{e2,e3} = e1", "1+z^3"},
      {4, 2, heis, {{0, 1, 2}, {0, 2, 1}}, "{e1,e2} = e3\n{e1,e3} = e2\n{e2,e3} = 0", "1+z+z^2+z^3"},
      {5, 3, heis, {{0, 1, 2}}, "{e1,e2} = e3\n{e1,e3} = 0\n{e2,e3} = 0", "1+2z+2z^2+z^3"},
      {6, 19, odd3, {{0, 1, 1, true}, {0, 2, 2}},
       "[e1,e2] = mu e2, mu != 0\n[e1,e3] = e3\n{e2,e3} = 0\ne3^2 = 0",
       "1+z+z^(k+1)+z^(k+2), mu = -1/k, k >= 1; 1+z otherwise"},
      {7, 20, odd3, {{2, 2, 0}}, "[e1,e2] = 0\n[e1,e3] = 0\n{e2,e3} = 0\n2 e3^2 = e1", "1+2z+z^2"},
      {8, 21, odd3, {{0, 1, 1}}, "[e1,e2] = e2\n[e1,e3] = 0\n{e2,e3} = 0\ne3^2 = 0", "(1+z)/(1-z)"},
      {9, 22, odd3, {{0, 2, 2}}, "[e1,e2] = 0\n[e1,e3] = e3\n{e2,e3} = 0\ne3^2 = 0", "1+2z+2z^2+z^3"},
      {10, 24, odd23, {{0, 1, 1, true}, {0, 2, 2}},
       "[e1,e2] = mu e2, mu != 0\n[e1,e3] = e3\n[e2,e3] = 0\ne2^2 = e3^2 = 0",
       "mu = p/q, r = |p|+q, s > 0: 1+z, p = 2s; (1+z)/(1-z^r), p = -2s; 1+z+z^r(1+z)/(1-z^(2r)), p = 2s+1; "
       "(1+z)/(1-z^(2r)), p = -2s-1; 1+z otherwise"},
      {11, 25, odd23, {{2, 2, 0}}, "[e1,e2] = 0\n[e1,e3] = 0\n[e2,e3] = 0\ne2^2 = 0, 2 e3^2 = e1",
       "(1+z)/(1-z)"},
      {12, 26, odd23, {{0, 1, 1}}, "[e1,e2] = e2\n[e1,e3] = 0\n[e2,e3] = 0\ne2^2 = e3^2 = 0", "(1+z)/(1-z)"},
      {13, 5, mixed, {{0, 1, 2}, {0, 2, 1}}, "{e1,e2} = e3\n{e1,e3} = e2\n[e2,e3] = 0\ne2^2 = e3^2 = 0",
       "1/(1-z)"},
      {14, 6, mixed, {{1, 2, 0}}, "{e1,e2} = 0\n{e1,e3} = 0\n[e2,e3] = e1\ne2^2 = e3^2 = 0", "(1+z)/(1-z)"},
      {15, 7, mixed, {{0, 1, 2}}, "{e1,e2} = e3\n{e1,e3} = 0\n[e2,e3] = 0\ne2^2 = e3^2 = 0", "(1+z)/(1-z)"},
  };
}

Polynomial poly(std::initializer_list<int> coeffs) {
  std::vector<Rational> c;
  for (int x : coeffs) c.emplace_back(x);
  return Polynomial(std::move(c));
}

RationalSeries fixed_series(int id) {
  const RationalSeries free_line(one_plus_z(), one_minus_z_pow(1));
  switch (id) {
    case 2:
    case 7: return RationalSeries(poly({1, 2, 1}));
    case 3: return RationalSeries(poly({1, 0, 0, 1}));
    case 4: return RationalSeries(poly({1, 1, 1, 1}));
    case 5:
    case 9: return RationalSeries(poly({1, 2, 2, 1}));
    case 13: return RationalSeries(Polynomial(1), one_minus_z_pow(1));
    default: return free_line;
  }
}

}  // namespace

bool CatalogEntry::parameterized() const {
  for (const BracketTerm& b : brackets)
    if (b.parametric) return true;
  return false;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = make_entries();
  return all;
}

const CatalogEntry& entry(int id) {
  if (id < 1 || id > entry_count) throw std::out_of_range("catalog id must be in 1..15, got " + std::to_string(id));
  return entries()[static_cast<std::size_t>(id - 1)];
}

Graph graph(const CommutationMatrix& cm) {
  Graph g;
  for (int i = 0; i < cm.size(); ++i) {
    if (cm(i, i) == -1) g.loops.push_back(i);
    for (int j = i + 1; j < cm.size(); ++j)
      if (cm(i, j) == -1) g.edges.emplace_back(i, j);
  }
  return g;
}

ColorLieAlgebra<Rational> load(int id, std::optional<Rational> mu) {
  const CatalogEntry& e = entry(id);
  if (e.parameterized()) {
    if (!mu) throw std::invalid_argument("entry " + std::to_string(id) + " needs a parameter mu");
    if (mu->is_zero()) throw std::invalid_argument("entry " + std::to_string(id) + " requires mu != 0");
    return build<Rational>(e, *mu);
  }
  if (mu) throw std::invalid_argument("entry " + std::to_string(id) + " takes no parameter");
  return build<Rational>(e, Rational(1));
}

ColorLieAlgebra<RationalFunction> load_generic(int id) {
  return build<RationalFunction>(entry(id), RationalFunction::parameter());
}

Rational reconcile(const Rational& printed_mu) { return printed_mu.inverse(); }

const char* const reconciliation_note =
    "bracket parameter mu = 1/(printed mu): the printed differential d f2 = mu^-1 f1 f2 is the dual of [e1,e2] = mu e2";

RationalSeries expected_series(int id, std::optional<Rational> printed_mu) {
  const CatalogEntry& e = entry(id);
  if (!e.parameterized()) {
    if (printed_mu) throw std::invalid_argument("entry " + std::to_string(id) + " takes no parameter");
    return fixed_series(id);
  }
  const RationalSeries line(one_plus_z());
  if (!printed_mu) return line;
  const Rational& mu = *printed_mu;
  if (mu.is_zero()) throw std::invalid_argument("entry " + std::to_string(id) + " requires mu != 0");

  if (id == 1) {
    if (mu == Rational(-1)) return RationalSeries(poly({1, 1, 1, 1}));
    return line;
  }
  if (id == 6) {
    const Rational k = (-mu).inverse();
    if (k.is_integer() && k.sign() > 0) {
      const int ki = static_cast<int>(k.numerator().get_si());
      return RationalSeries(one_plus_z() + z_pow(ki + 1) * one_plus_z());
    }
    return line;
  }
  // Entry 10, mu = p/q in lowest terms with q > 0, r = |p| + q.
  const mpz_class p = mu.numerator();
  const int r = static_cast<int>(mpz_class(abs(p)).get_si() + mu.denominator().get_si());
  const bool even = mpz_even_p(p.get_mpz_t()) != 0;
  if (even) {
    if (p > 0) return line;
    return RationalSeries(one_plus_z(), one_minus_z_pow(r));
  }
  // Odd p is covered only for |p| = 2s+1 with s > 0; p = +-1 falls under "otherwise".
  if (abs(p) == 1) return line;
  if (p > 0) return RationalSeries(one_plus_z() * one_minus_z_pow(2 * r) + z_pow(r) * one_plus_z(), one_minus_z_pow(2 * r));
  return RationalSeries(one_plus_z(), one_minus_z_pow(2 * r));
}

std::vector<std::int64_t> expected_betti(int id, std::optional<Rational> printed_mu, int max_degree) {
  return expected_series(id, std::move(printed_mu)).expand(max_degree);
}

std::vector<AbelianEntry> abelian_family() {
  std::vector<AbelianEntry> out;
  for (int mask = 0; mask < 8; ++mask) {
    int d[3];
    int q = 0;
    std::string label = "abelian(";
    for (int i = 0; i < 3; ++i) {
      d[i] = (mask >> (2 - i)) & 1 ? -1 : 1;
      q += d[i] < 0 ? 1 : 0;
      label += d[i] < 0 ? '-' : '+';
    }
    const auto off = [&](int i, int j) { return d[i] == 1 && d[j] == 1 ? -1 : 1; };
    out.push_back({signs3(d[0], d[1], d[2], off(0, 1), off(0, 2), off(1, 2)), q, label + ")"});
  }
  return out;
}

ColorLieAlgebra<Rational> heisenberg() { return load(5); }

}  // namespace colorlie::catalog
