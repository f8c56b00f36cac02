#include "colorlie/algebra_file.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "colorlie/catalog.hpp"
#include "colorlie/scalar.hpp"

namespace colorlie {

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void fail(int line, const std::string& message) {
  throw ParseError("line " + std::to_string(line) + ": " + message);
}

/// A bracketed list "[a, b, ...]" split at top-level commas.
std::vector<std::string_view> split_list(std::string_view s, int line) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']') fail(line, "expected a list in [ ]");
  s = s.substr(1, s.size() - 2);
  std::vector<std::string_view> out;
  if (trim(s).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (depth < 0) fail(line, "unbalanced brackets");
    if (c == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, i - start)));
      start = i + 1;
    }
  }
  if (depth != 0) fail(line, "unbalanced brackets");
  out.push_back(trim(s.substr(start)));
  for (auto item : out)
    if (item.empty()) fail(line, "empty list item");
  return out;
}

int parse_int(std::string_view s, int line, const char* what) {
  s = trim(s);
  int value = 0;
  std::size_t used = 0;
  try {
    value = std::stoi(std::string(s), &used);
  } catch (const std::exception&) {
    fail(line, std::string("expected an integer ") + what + ", got '" + std::string(s) + "'");
  }
  if (used != s.size()) fail(line, std::string("expected an integer ") + what + ", got '" + std::string(s) + "'");
  return value;
}

std::vector<std::vector<int>> parse_int_matrix(std::string_view s, int line, const char* what) {
  std::vector<std::vector<int>> rows;
  for (auto row : split_list(s, line)) {
    std::vector<int> r;
    for (auto item : split_list(row, line)) r.push_back(parse_int(item, line, what));
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

bool AlgebraFile::parametric() const {
  for (const auto& [key, coeffs] : brackets)
    for (Index k = 0; k < coeffs.size(); ++k)
      if (!coeffs(k).is_constant()) return true;
  return false;
}

ColorLieAlgebra<RationalFunction> AlgebraFile::algebra() const {
  return ColorLieAlgebra<RationalFunction>(signs, brackets, grading);
}

AlgebraFile parse_algebra_file(std::string_view text) {
  AlgebraFile file;
  std::optional<int> dimension;
  std::optional<std::vector<std::vector<int>>> signs;
  int signs_line = 0;
  struct PendingBracket {
    int i, j, line;
    std::vector<RationalFunction> coeffs;
  };
  std::vector<PendingBracket> pending;
  std::set<std::string> seen;

  std::istringstream in{std::string(text)};
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    std::string_view s = raw;
    if (const auto hash = s.find('#'); hash != std::string_view::npos) s = s.substr(0, hash);
    s = trim(s);
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string_view::npos) fail(line, "expected 'key = value'");
    const std::string_view key = trim(s.substr(0, eq));
    const std::string_view value = trim(s.substr(eq + 1));

    if (key.starts_with("bracket")) {
      std::istringstream ks{std::string(key.substr(7))};
      std::string a, b, extra;
      if (!(ks >> a >> b) || (ks >> extra)) fail(line, "expected 'bracket i j = [...]'");
      PendingBracket pb{parse_int(a, line, "index") - 1, parse_int(b, line, "index") - 1, line, {}};
      const std::string id = "bracket " + std::to_string(pb.i) + " " + std::to_string(pb.j);
      if (!seen.insert(id).second) fail(line, "duplicate " + std::string(key));
      for (auto item : split_list(value, line)) {
        try {
          pb.coeffs.push_back(parse_scalar(item));
        } catch (const std::exception& e) {
          fail(line, e.what());
        }
      }
      pending.push_back(std::move(pb));
      continue;
    }
    if (!seen.insert(std::string(key)).second) fail(line, "duplicate key '" + std::string(key) + "'");
    if (key == "name") {
      file.name = std::string(value);
    } else if (key == "dimension") {
      dimension = parse_int(value, line, "dimension");
      if (*dimension < 1) fail(line, "dimension must be positive");
    } else if (key == "signs") {
      signs = parse_int_matrix(value, line, "sign");
      signs_line = line;
    } else if (key == "parameter") {
      try {
        file.parameter = parse_rational(value);
      } catch (const std::exception& e) {
        fail(line, e.what());
      }
    } else if (key == "grading") {
      const auto rows = parse_int_matrix(value, line, "grading bit");
      GradingAssignment g;
      g.bits = rows.empty() ? 0 : static_cast<int>(rows.front().size());
      for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != g.bits) fail(line, "grading vectors must have equal length");
        for (int b : r)
          if (b != 0 && b != 1) fail(line, "grading bits must be 0 or 1");
      }
      g.degrees = rows;
      file.grading = std::move(g);
    } else {
      fail(line, "unknown key '" + std::string(key) + "'");
    }
  }

  if (!dimension) throw ParseError("missing 'dimension'");
  if (!signs) throw ParseError("missing 'signs'");
  const int n = *dimension;
  if (static_cast<int>(signs->size()) != n) fail(signs_line, "signs must have " + std::to_string(n) + " rows");
  Eigen::MatrixXi m(n, n);
  for (int i = 0; i < n; ++i) {
    const auto& row = (*signs)[static_cast<std::size_t>(i)];
    if (static_cast<int>(row.size()) != n) fail(signs_line, "signs row " + std::to_string(i + 1) + " has wrong length");
    for (int j = 0; j < n; ++j) m(i, j) = row[static_cast<std::size_t>(j)];
  }
  file.signs = CommutationMatrix(m);
  if (file.grading && static_cast<int>(file.grading->degrees.size()) != n)
    throw ParseError("grading must list one vector per generator");

  for (auto& pb : pending) {
    if (pb.i < 0 || pb.j < 0 || pb.i >= n || pb.j >= n) fail(pb.line, "bracket index out of range 1.." + std::to_string(n));
    if (pb.i > pb.j) fail(pb.line, "bracket indices must satisfy i <= j");
    if (static_cast<int>(pb.coeffs.size()) != n) fail(pb.line, "bracket needs " + std::to_string(n) + " coefficients");
    ExactVector<RationalFunction> v(n);
    for (int k = 0; k < n; ++k) v(k) = pb.coeffs[static_cast<std::size_t>(k)];
    if (!is_zero(v)) file.brackets.emplace(std::make_pair(pb.i, pb.j), v);
  }
  return file;
}

AlgebraFile read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra_file(buf.str());
}

std::string write_algebra_file(const AlgebraFile& file) {
  std::ostringstream out;
  const int n = file.dimension();
  if (!file.name.empty()) out << "name = " << file.name << "\n";
  out << "dimension = " << n << "\n";
  out << "signs = [";
  for (int i = 0; i < n; ++i) {
    out << (i ? ", [" : "[");
    for (int j = 0; j < n; ++j) out << (j ? ", " : "") << file.signs(i, j);
    out << "]";
  }
  out << "]\n";
  for (const auto& [key, coeffs] : file.brackets) {
    out << "bracket " << key.first + 1 << " " << key.second + 1 << " = [";
    for (Index k = 0; k < coeffs.size(); ++k) out << (k ? ", " : "") << coeffs(k).to_string();
    out << "]\n";
  }
  if (file.parameter) out << "parameter = " << file.parameter->to_string() << "\n";
  if (file.grading) {
    out << "grading = [";
    for (std::size_t i = 0; i < file.grading->degrees.size(); ++i) {
      out << (i ? ", [" : "[");
      for (std::size_t b = 0; b < file.grading->degrees[i].size(); ++b)
        out << (b ? ", " : "") << file.grading->degrees[i][b];
      out << "]";
    }
    out << "]\n";
  }
  return out.str();
}

AlgebraFile export_catalog_entry(int id) {
  const ColorLieAlgebra<RationalFunction> g = catalog::load_generic(id);
  AlgebraFile file;
  file.name = "case-" + std::to_string(id);
  file.signs = g.commutation();
  file.brackets = g.brackets();
  return file;
}

}  // namespace colorlie
