#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "colorlie/color.hpp"

namespace colorlie {

/// Noncommutative monomial: 0-based generator indices, left to right.
using Word = std::vector<int>;

/// Degree-lexicographic order with v_1 > v_2 > ... > v_n: longer words are
/// larger; equal lengths compare at the first differing letter, where a
/// smaller index is the larger letter.
struct DegLexLess {
  bool operator()(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t p = 0; p < a.size(); ++p)
      if (a[p] != b[p]) return a[p] > b[p];
    return false;
  }
};

template <ExactScalar S>
using NCPolynomial = std::map<Word, S, DegLexLess>;

template <ExactScalar S>
void add_term(NCPolynomial<S>& p, const Word& w, const S& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = p.emplace(w, c);
  if (!inserted) {
    it->second = it->second + c;
    if (it->second.is_zero()) p.erase(it);
  }
}

template <ExactScalar S>
NCPolynomial<S> operator-(NCPolynomial<S> a, const NCPolynomial<S>& b) {
  for (const auto& [w, c] : b) add_term(a, w, -c);
  return a;
}

/// u * p * v for words u, v.
template <ExactScalar S>
NCPolynomial<S> sandwich(const Word& u, const NCPolynomial<S>& p, const Word& v) {
  NCPolynomial<S> out;
  for (const auto& [w, c] : p) {
    Word x = u;
    x.insert(x.end(), w.begin(), w.end());
    x.insert(x.end(), v.begin(), v.end());
    add_term(out, x, c);
  }
  return out;
}

std::string word_to_string(const Word& w, const std::string& letter = "v");

template <ExactScalar S>
std::string to_string(const NCPolynomial<S>& p, const std::string& letter = "v") {
  if (p.empty()) return "0";
  std::string out;
  for (auto it = p.rbegin(); it != p.rend(); ++it) {
    const std::string c = it->second.to_string();
    const std::string w = word_to_string(it->first, letter);
    std::string term;
    if (it->first.empty()) {
      term = c;
    } else if (c == "1") {
      term = w;
    } else if (c == "-1") {
      term = "-" + w;
    } else {
      const bool compound = c.find_first_of("+-", 1) != std::string::npos;
      term = (compound ? "(" + c + ")" : c) + "*" + w;
    }
    if (!out.empty() && term.front() != '-') out += "+";
    out += term;
  }
  return out;
}

/// Relation quadratic part + linear part, leading coefficient 1.
template <ExactScalar S>
struct QuadLinRelation {
  NCPolynomial<S> quadratic;  // words of length 2
  std::map<int, S> linear;    // generator -> coefficient
  Word leading;

  /// Builds from a polynomial of degree exactly 2 with no constant term;
  /// normalizes the leading coefficient to 1. Throws std::invalid_argument
  /// for cubic (or higher), constant, or purely linear input.
  static QuadLinRelation from_polynomial(const NCPolynomial<S>& p) {
    if (p.empty()) throw std::invalid_argument("zero relation");
    const Word& top = p.rbegin()->first;
    if (top.size() != 2) throw std::invalid_argument("relations must be quadratic-linear with a degree-2 leading word");
    const S inv = S(1) / p.rbegin()->second;
    QuadLinRelation r;
    r.leading = top;
    for (const auto& [w, c] : p) {
      if (w.empty()) throw std::invalid_argument("relations must not have a constant term");
      if (w.size() == 2) add_term(r.quadratic, w, c * inv);
      if (w.size() == 1) r.linear.emplace(w[0], c * inv);
    }
    return r;
  }

  NCPolynomial<S> polynomial() const {
    NCPolynomial<S> p = quadratic;
    for (const auto& [k, c] : linear) add_term(p, Word{k}, c);
    return p;
  }

  /// The rewrite target: leading word == tail modulo the relation.
  NCPolynomial<S> tail() const {
    NCPolynomial<S> t;
    for (const auto& [w, c] : polynomial())
      if (w != leading) add_term(t, w, -c);
    return t;
  }
};

template <ExactScalar S>
struct QuadLinPresentation {
  int generators = 0;
  std::vector<QuadLinRelation<S>> relations;
};

/// Defining relations of U(g): v_i v_j - s(i,j) v_j v_i - sum_k c_ij^k v_k
/// for i < j, and v_i^2 - (1/2) sum_k c_ii^k v_k when s(i,i) = -1.
/// Throws std::invalid_argument for a diagonal bracket with s(i,i) = +1.
template <ExactScalar S>
QuadLinPresentation<S> uea_relations(const ColorLieAlgebra<S>& g) {
  const int n = g.dimension();
  const CommutationMatrix& s = g.commutation();
  QuadLinPresentation<S> out;
  out.generators = n;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const ExactVector<S> c = g.stored(i, j);
      NCPolynomial<S> p;
      if (i == j) {
        if (s(i, i) == 1) {
          if (!is_zero(c)) throw std::invalid_argument("diagonal bracket requires s(i,i) = -1");
          continue;
        }
        add_term(p, Word{i, i}, S(1));
        for (int k = 0; k < n; ++k) add_term(p, Word{k}, -(c(k) / S(2)));
      } else {
        add_term(p, Word{i, j}, S(1));
        add_term(p, Word{j, i}, S(-s(i, j)));
        for (int k = 0; k < n; ++k) add_term(p, Word{k}, -c(k));
      }
      out.relations.push_back(QuadLinRelation<S>::from_polynomial(p));
    }
  }
  return out;
}

namespace detail {
/// Position of the first occurrence of a leading word inside w, or -1.
template <ExactScalar S>
std::pair<int, const QuadLinRelation<S>*> find_reducible(
    const Word& w, const std::map<Word, const QuadLinRelation<S>*>& by_leading) {
  for (std::size_t p = 0; p + 1 < w.size(); ++p) {
    const auto it = by_leading.find(Word{w[p], w[p + 1]});
    if (it != by_leading.end()) return {static_cast<int>(p), it->second};
  }
  return {-1, nullptr};
}
}  // namespace detail

/// Rewrites x until no monomial contains a leading word. Each step replaces
/// the greatest reducible monomial by deg-lex smaller ones, so it terminates.
/// Throws std::invalid_argument if two relations share a leading word.
template <ExactScalar S>
NCPolynomial<S> reduce(NCPolynomial<S> x, const QuadLinPresentation<S>& rels) {
  std::map<Word, const QuadLinRelation<S>*> by_leading;
  for (const auto& r : rels.relations)
    if (!by_leading.emplace(r.leading, &r).second) throw std::invalid_argument("duplicate leading word");
  for (;;) {
    bool changed = false;
    for (auto it = x.rbegin(); it != x.rend(); ++it) {
      const auto [pos, rel] = detail::find_reducible<S>(it->first, by_leading);
      if (pos < 0) continue;
      const Word w = it->first;
      const S c = it->second;
      const Word u(w.begin(), w.begin() + pos);
      const Word v(w.begin() + pos + 2, w.end());
      x.erase(w);
      NCPolynomial<S> t = sandwich(u, rel->tail(), v);
      for (const auto& [tw, tc] : t) add_term(x, tw, c * tc);
      changed = true;
      break;
    }
    if (!changed) return x;
  }
}

template <ExactScalar S>
NCPolynomial<S> reduce(const Word& w, const QuadLinPresentation<S>& rels) {
  NCPolynomial<S> x;
  add_term(x, w, S(1));
  return reduce(std::move(x), rels);
}

template <ExactScalar S>
struct FailedOverlap {
  Word overlap;                // a b d, where ab and bd are leading words
  NCPolynomial<S> remainder;   // nonzero normal form of the s-polynomial
};

template <ExactScalar S>
struct GroebnerReport {
  bool is_groebner = true;
  std::vector<FailedOverlap<S>> failures;
};

/// Diamond-lemma check: for every overlap t_i v_p = v_q t_j of leading words,
/// the s-polynomial r_i v_p - v_q r_j must reduce to zero.
template <ExactScalar S>
GroebnerReport<S> groebner_check(const QuadLinPresentation<S>& rels) {
  GroebnerReport<S> report;
  for (const auto& ri : rels.relations) {
    for (const auto& rj : rels.relations) {
      if (ri.leading[1] != rj.leading[0]) continue;
      const int p = rj.leading[1];
      const int q = ri.leading[0];
      const NCPolynomial<S> spoly = sandwich(Word{}, ri.polynomial(), Word{p}) - sandwich(Word{q}, rj.polynomial(), Word{});
      NCPolynomial<S> rem = reduce(spoly, rels);
      if (!rem.empty()) {
        report.is_groebner = false;
        report.failures.push_back({Word{q, ri.leading[1], p}, std::move(rem)});
      }
    }
  }
  return report;
}

/// All words of length `degree` with no leading word as a factor, in
/// decreasing deg-lex order.
template <ExactScalar S>
std::vector<Word> normal_words(const QuadLinPresentation<S>& rels, int degree) {
  std::vector<std::vector<bool>> forbidden(static_cast<std::size_t>(rels.generators),
                                           std::vector<bool>(static_cast<std::size_t>(rels.generators), false));
  for (const auto& r : rels.relations)
    forbidden[static_cast<std::size_t>(r.leading[0])][static_cast<std::size_t>(r.leading[1])] = true;
  std::vector<Word> out;
  Word current;
  const auto extend = [&](auto&& self) -> void {
    if (static_cast<int>(current.size()) == degree) {
      out.push_back(current);
      return;
    }
    for (int letter = 0; letter < rels.generators; ++letter) {
      if (!current.empty() &&
          forbidden[static_cast<std::size_t>(current.back())][static_cast<std::size_t>(letter)])
        continue;
      current.push_back(letter);
      self(self);
      current.pop_back();
    }
  };
  extend(extend);
  return out;
}

}  // namespace colorlie
