#include "colorlie/report.hpp"

#include <future>
#include <sstream>
#include <variant>

#include <json.hpp>

#include "colorlie/catalog.hpp"
#include "colorlie/homology.hpp"
#include "colorlie/pbw.hpp"
#include "colorlie/scalar.hpp"

namespace colorlie::report {

namespace {

using Json = nlohmann::ordered_json;

struct Resolved {
  std::variant<ColorLieAlgebra<Rational>, ColorLieAlgebra<RationalFunction>> algebra;
  std::string parameter;  // "t = VALUE", "t generic" or "none"
};

Resolved resolve(const AlgebraFile& file, const Options& opt) {
  ColorLieAlgebra<RationalFunction> g;
  try {
    g = file.algebra();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  std::optional<Rational> value = file.parameter;
  bool generic = false;
  if (opt.param) {
    if (*opt.param == "generic") {
      generic = true;
      value.reset();
    } else {
      try {
        value = parse_rational(*opt.param);
      } catch (const std::exception& e) {
        throw InputError("--param: " + std::string(e.what()));
      }
    }
  }
  if (!file.parametric() && !generic) return {specialize(g, Rational(0)), "none"};
  if (generic || !value) return {g, "t generic"};
  try {
    return {specialize(g, *value), "t = " + value->to_string()};
  } catch (const std::domain_error& e) {
    throw InputError(e.what());
  }
}

std::string join(const std::vector<std::int64_t>& v, const std::string& sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
  return out;
}

std::string recognized(const std::vector<std::int64_t>& seq) {
  const auto rs = recognize(seq);
  return rs ? rs->to_string() : "inconclusive";
}

Output render(const Json& j, const std::string& text, Format format, int exit_code) {
  if (format == Format::json) return {j.dump(2) + "\n", exit_code};
  return {text, exit_code};
}

void require_not_csv(const Options& opt, const char* command) {
  if (opt.format == Format::csv) throw InputError(std::string("--format csv is not available for '") + command + "'");
}

int degree_or(const Options& opt, int fallback) {
  const int n = opt.max_degree.value_or(fallback);
  if (n < 0) throw InputError("--max-degree must be nonnegative");
  return n;
}

template <ExactScalar S>
Output check_impl(const ColorLieAlgebra<S>& g, const AlgebraFile& file, const std::string& param, const Options& opt) {
  Json j;
  j["algebra"] = file.name;
  j["parameter"] = param;
  std::ostringstream text;
  text << "algebra: " << file.name << "\nparameter: " << param << "\n";
  bool ok = true;

  const ValidationReport v = validate(g);
  Json issues = Json::array();
  for (const auto& issue : v.issues) issues.push_back({{"kind", issue.kind}, {"message", issue.message}});
  j["validation"] = issues;
  if (v.ok()) {
    text << "validation: ok\n";
  } else {
    ok = false;
    for (const auto& issue : v.issues) text << "validation: " << issue.kind << ": " << issue.message << "\n";
  }

  const bool injective = is_injective(g.commutation());
  j["injective"] = injective;
  text << "injective: " << (injective ? "ok" : "no (two rows of the sign matrix coincide)") << "\n";
  ok = ok && injective;

  const bool commutation_ok = validate_commutation(g.commutation()).ok();
  if (!commutation_ok) {
    j["pbw"] = "not applicable";
    text << "pbw: not applicable (malformed sign matrix)\n";
  } else {
    try {
      const GroebnerReport<S> r = groebner_check(uea_relations(g));
      j["pbw"] = r.is_groebner ? "pass" : "fail";
      text << "pbw: " << (r.is_groebner ? "pass" : "fail") << "\n";
      for (const auto& f : r.failures)
        text << "  overlap " << word_to_string(f.overlap) << " leaves " << to_string(f.remainder) << "\n";
      ok = ok && r.is_groebner;
    } catch (const std::invalid_argument& e) {
      j["pbw"] = "not applicable";
      text << "pbw: not applicable (" << e.what() << ")\n";
      ok = false;
    }
  }
  j["verdict"] = ok ? "PASS" : "FAIL";
  text << "verdict: " << (ok ? "PASS" : "FAIL") << "\n";
  return render(j, text.str(), opt.format, ok ? 0 : 1);
}

Output invalid_output(const AlgebraFile& file, const ValidationReport& v, const Options& opt) {
  Json j;
  j["algebra"] = file.name;
  j["error"] = "invalid algebra";
  Json issues = Json::array();
  std::ostringstream text;
  text << "algebra: " << file.name << "\nerror: invalid algebra\n";
  for (const auto& issue : v.issues) {
    issues.push_back({{"kind", issue.kind}, {"message", issue.message}});
    text << "  " << issue.kind << ": " << issue.message << "\n";
  }
  j["validation"] = issues;
  return render(j, text.str(), opt.format == Format::csv ? Format::text : opt.format, 1);
}

template <ExactScalar S>
Output cohomology_impl(const ColorLieAlgebra<S>& g, const AlgebraFile& file, const std::string& param,
                       const Options& opt) {
  if (const ValidationReport v = validate(g); !v.ok()) return invalid_output(file, v, opt);
  const int n = degree_or(opt, default_betti_degree);
  const Differential<S> d = differential_from_brackets(g);
  const BettiTable full = betti(d, std::max(n, default_series_degree));
  const std::vector<std::int64_t> h(full.h.begin(), full.h.begin() + n + 1);
  const std::string series = recognized(full.h);

  Json j;
  j["algebra"] = file.name;
  j["parameter"] = param;
  j["betti"] = h;
  j["series"] = series;
  std::ostringstream text;
  text << "algebra: " << file.name << "\nparameter: " << param << "\n";
  text << "betti h0..h" << n << ": " << join(h) << "\n";
  text << "series: " << series << "\n";

  std::ostringstream csv;
  csv << "degree,h";
  if (opt.representatives) csv << ",representatives";
  csv << "\n";

  Json reps = Json::object();
  if (opt.representatives) text << "representatives:\n";
  for (int k = 0; k <= n; ++k) {
    csv << k << "," << h[static_cast<std::size_t>(k)];
    if (!opt.representatives) {
      csv << "\n";
      continue;
    }
    std::vector<std::string> classes;
    for (const auto& c : representatives(d, k)) classes.push_back(c.representative.to_string());
    reps[std::to_string(k)] = classes;
    std::string line;
    for (std::size_t i = 0; i < classes.size(); ++i) line += (i ? "; " : "") + classes[i];
    if (!classes.empty()) text << "  H^" << k << ": " << line << "\n";
    csv << ",\"" << line << "\"\n";
  }
  if (opt.representatives) j["representatives"] = reps;
  if (opt.format == Format::csv) return {csv.str(), 0};
  return render(j, text.str(), opt.format, 0);
}

template <ExactScalar S>
Output series_impl(const ColorLieAlgebra<S>& g, const AlgebraFile& file, const std::string& param,
                   const Options& opt) {
  if (const ValidationReport v = validate(g); !v.ok()) return invalid_output(file, v, opt);
  const int n = degree_or(opt, default_series_degree);
  if (n + 1 < 12) throw InputError("series recognition needs --max-degree >= 11");
  const BettiTable t = betti(differential_from_brackets(g), n);
  const std::string series = recognized(t.h);
  Json j;
  j["algebra"] = file.name;
  j["parameter"] = param;
  j["terms"] = t.h;
  j["series"] = series;
  std::ostringstream text;
  text << "algebra: " << file.name << "\nparameter: " << param << "\nterms: " << join(t.h) << "\nseries: " << series
       << "\n";
  return render(j, text.str(), opt.format, 0);
}

template <ExactScalar S>
Output pbw_impl(const ColorLieAlgebra<S>& g, const AlgebraFile& file, const std::string& param, const Options& opt) {
  if (!validate_commutation(g.commutation()).ok())
    return invalid_output(file, validate_commutation(g.commutation()), opt);
  QuadLinPresentation<S> rels;
  try {
    rels = uea_relations(g);
  } catch (const std::invalid_argument& e) {
    ValidationReport v;
    v.issues.push_back({"diagonal", e.what()});
    return invalid_output(file, v, opt);
  }
  const GroebnerReport<S> r = groebner_check(rels);
  Json j;
  j["algebra"] = file.name;
  j["parameter"] = param;
  std::ostringstream text;
  text << "algebra: " << file.name << "\nparameter: " << param << "\nrelations:\n";
  Json jr = Json::array();
  for (const auto& rel : rels.relations) {
    jr.push_back(to_string(rel.polynomial()));
    text << "  " << to_string(rel.polynomial()) << "\n";
  }
  j["relations"] = jr;
  Json jf = Json::array();
  for (const auto& f : r.failures) {
    jf.push_back({{"overlap", word_to_string(f.overlap)}, {"remainder", to_string(f.remainder)}});
    text << "failed overlap " << word_to_string(f.overlap) << ": remainder " << to_string(f.remainder) << "\n";
  }
  j["failures"] = jf;
  j["verdict"] = r.is_groebner ? "PASS" : "FAIL";
  text << "pbw: " << (r.is_groebner ? "PASS" : "FAIL") << "\n";
  return render(j, text.str(), opt.format, r.is_groebner ? 0 : 1);
}

template <class F>
Output dispatch(const AlgebraFile& file, const Options& opt, F&& f) {
  const Resolved r = resolve(file, opt);
  return std::visit([&](const auto& g) { return f(g, r.parameter); }, r.algebra);
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw InputError("unknown format '" + name + "' (expected text, csv or json)");
}

Output check(const AlgebraFile& file, const Options& opt) {
  require_not_csv(opt, "check");
  return dispatch(file, opt, [&](const auto& g, const std::string& p) { return check_impl(g, file, p, opt); });
}

Output cohomology(const AlgebraFile& file, const Options& opt) {
  return dispatch(file, opt, [&](const auto& g, const std::string& p) { return cohomology_impl(g, file, p, opt); });
}

Output series(const AlgebraFile& file, const Options& opt) {
  require_not_csv(opt, "series");
  return dispatch(file, opt, [&](const auto& g, const std::string& p) { return series_impl(g, file, p, opt); });
}

Output series(const std::vector<std::int64_t>& seq, const Options& opt) {
  require_not_csv(opt, "series");
  if (seq.size() < 12) throw InputError("series recognition needs at least 12 terms");
  const std::string s = recognized(seq);
  Json j;
  j["terms"] = seq;
  j["series"] = s;
  return render(j, "terms: " + join(seq) + "\nseries: " + s + "\n", opt.format, 0);
}

Output dual(const AlgebraFile& file, const Options& opt) {
  require_not_csv(opt, "dual");
  if (const ValidationReport v = validate_commutation(file.signs); !v.ok()) return invalid_output(file, v, opt);
  const SignAlgebra a = abelian_enveloping(file.signs);
  const SignAlgebra b = quadratic_dual(a);
  Json j;
  j["algebra"] = file.name;
  j["enveloping"] = a.describe();
  j["dual"] = b.describe();
  std::ostringstream text;
  text << "algebra: " << file.name << "\nU(g_ab): " << a.describe() << "\ndual: " << b.describe() << "\n";
  return render(j, text.str(), opt.format, 0);
}

Output hilbert(const AlgebraFile& file, const Options& opt) {
  require_not_csv(opt, "hilbert");
  if (const ValidationReport v = validate_commutation(file.signs); !v.ok()) return invalid_output(file, v, opt);
  const int n = degree_or(opt, 9);
  Json j;
  j["algebra"] = file.name;
  std::ostringstream text;
  text << "algebra: " << file.name << "\n";
  bool ok = true;
  const SignAlgebra a = abelian_enveloping(file.signs);
  for (const auto& [label, alg] : {std::pair<std::string, SignAlgebra>{"U(g_ab)", a}, {"dual", quadratic_dual(a)}}) {
    const RationalSeries hs = hilbert_series(alg);
    const std::vector<std::int64_t> closed = hs.expand(n);
    std::vector<std::int64_t> counted;
    for (int d = 0; d <= n; ++d) counted.push_back(static_cast<std::int64_t>(monomial_basis(alg, d).size()));
    const bool match = closed == counted;
    ok = ok && match;
    j[label] = {{"description", alg.describe()},
                {"series", hs.to_string()},
                {"coefficients", closed},
                {"enumerated", counted},
                {"match", match}};
    text << label << ": " << alg.describe() << "\n  series: " << hs.to_string() << "\n  coefficients: "
         << join(closed) << "\n  enumeration: " << (match ? "agrees" : "DISAGREES: " + join(counted)) << "\n";
  }
  return render(j, text.str(), opt.format, ok ? 0 : 1);
}

Output pbw(const AlgebraFile& file, const Options& opt) {
  require_not_csv(opt, "pbw");
  return dispatch(file, opt, [&](const auto& g, const std::string& p) { return pbw_impl(g, file, p, opt); });
}

namespace {

struct Sample {
  int id;
  std::optional<Rational> printed;
};

std::vector<Sample> samples() {
  std::vector<Sample> out;
  for (int id = 1; id <= catalog::entry_count; ++id) {
    if (!catalog::entry(id).parameterized()) {
      out.push_back({id, std::nullopt});
      continue;
    }
    std::vector<Rational> values;
    if (id == 1) values = {Rational(-1), Rational(2)};
    if (id == 6) values = {Rational(-1), Rational(-1, 2), Rational(-1, 3)};
    if (id == 10) values = {Rational(2), Rational(-2), Rational(3), Rational(-3), Rational(1, 2)};
    for (const Rational& v : values) out.push_back({id, v});
    out.push_back({id, std::nullopt});
  }
  return out;
}

template <ExactScalar S>
TableRow evaluate_row(const ColorLieAlgebra<S>& g, const RationalSeries& expected, int max_degree) {
  TableRow row;
  const BettiTable t = betti(g, std::max(max_degree, default_series_degree));
  row.h.assign(t.h.begin(), t.h.begin() + max_degree + 1);
  row.series = recognized(t.h);
  row.expected = expected.to_string();
  row.pass = row.h == expected.expand(max_degree);
  return row;
}

}  // namespace

std::vector<TableRow> table_rows(int max_degree) {
  if (max_degree < 0) throw InputError("--max-degree must be nonnegative");
  std::vector<std::future<TableRow>> jobs;
  for (const Sample& s : samples()) {
    jobs.push_back(std::async(std::launch::async, [s, max_degree] {
      const bool parameterized = catalog::entry(s.id).parameterized();
      const RationalSeries expected = catalog::expected_series(s.id, s.printed);
      TableRow row;
      if (!parameterized) {
        row = evaluate_row(catalog::load(s.id), expected, max_degree);
        row.param = row.bracket_param = "-";
      } else if (s.printed) {
        const Rational mu = catalog::reconcile(*s.printed);
        row = evaluate_row(catalog::load(s.id, mu), expected, max_degree);
        row.param = s.printed->to_string();
        row.bracket_param = mu.to_string();
      } else {
        row = evaluate_row(catalog::load_generic(s.id), expected, max_degree);
        row.param = row.bracket_param = "generic";
      }
      row.id = std::to_string(s.id);
      return row;
    }));
  }
  for (const auto& a : catalog::abelian_family()) {
    jobs.push_back(std::async(std::launch::async, [a, max_degree] {
      TableRow row = evaluate_row(ColorLieAlgebra<Rational>(a.signs, {}), abelian_closed_form(3, a.q), max_degree);
      row.id = a.label;
      row.param = row.bracket_param = "-";
      return row;
    }));
  }
  std::vector<TableRow> rows;
  for (auto& j : jobs) rows.push_back(j.get());
  return rows;
}

Output table(const Options& opt) {
  const int n = degree_or(opt, default_betti_degree);
  const std::vector<TableRow> rows = table_rows(n);
  int passed = 0;
  for (const auto& r : rows) passed += r.pass ? 1 : 0;
  const bool ok = passed == static_cast<int>(rows.size());
  const std::string summary = std::to_string(passed) + "/" + std::to_string(rows.size()) + " rows pass";

  if (opt.format == Format::csv) {
    std::ostringstream csv;
    csv << "id,param";
    for (int k = 0; k <= n; ++k) csv << ",h" << k;
    csv << ",series,expected,verdict\n";
    for (const auto& r : rows)
      csv << r.id << "," << r.param << "," << join(r.h, ",") << "," << r.series << "," << r.expected << ","
          << (r.pass ? "PASS" : "FAIL") << "\n";
    return {csv.str(), ok ? 0 : 1};
  }

  Json j;
  j["reconciliation"] = catalog::reconciliation_note;
  j["max_degree"] = n;
  Json jr = Json::array();
  for (const auto& r : rows)
    jr.push_back({{"id", r.id},
                  {"param", r.param},
                  {"bracket_param", r.bracket_param},
                  {"h", r.h},
                  {"series", r.series},
                  {"expected", r.expected},
                  {"verdict", r.pass ? "PASS" : "FAIL"}});
  j["rows"] = jr;
  j["summary"] = summary;

  const std::vector<std::string> header = {"id", "param", "bracket", "h0..h" + std::to_string(n), "series",
                                           "expected", "verdict"};
  std::vector<std::vector<std::string>> cells;
  for (const auto& r : rows)
    cells.push_back({r.id, r.param, r.bracket_param, join(r.h), r.series, r.expected, r.pass ? "PASS" : "FAIL"});
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  const auto line = [&](const std::vector<std::string>& row) {
    std::string out;
    for (std::size_t c = 0; c < row.size(); ++c) {
      out += row[c];
      if (c + 1 < row.size()) out += std::string(width[c] - row[c].size() + 2, ' ');
    }
    return out + "\n";
  };
  std::ostringstream text;
  text << "reconciliation: " << catalog::reconciliation_note << "\n" << line(header);
  for (const auto& row : cells) text << line(row);
  text << summary << "\n";
  return render(j, text.str(), opt.format, ok ? 0 : 1);
}

}  // namespace colorlie::report
