#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "colorlie/algebra_file.hpp"
#include "colorlie/report.hpp"

namespace {

std::vector<std::int64_t> parse_sequence(const std::string& text) {
  std::vector<std::int64_t> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    std::istringstream words(item);
    std::string w;
    while (words >> w) {
      std::size_t used = 0;
      std::int64_t v = 0;
      try {
        v = std::stoll(w, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != w.size() || w.empty()) throw colorlie::report::InputError("bad sequence term '" + w + "'");
      out.push_back(v);
    }
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace colorlie;
  CLI::App app{"Color Lie algebra cohomology via the Koszul dual DGA"};
  app.require_subcommand(1);

  std::string path, format = "text", out_path, param, sequence;
  int max_degree = -1;
  bool reps = false;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--format", format, "text, csv or json");
    cmd->add_option("--out", out_path, "write the report to this file");
  };
  const auto add_file = [&](CLI::App* cmd) {
    cmd->add_option("path", path, "algebra file")->required();
    add_common(cmd);
  };
  const auto add_param = [&](CLI::App* cmd) {
    cmd->add_option("--param", param, "value of t, or 'generic'");
  };
  const auto add_degree = [&](CLI::App* cmd) { cmd->add_option("--max-degree", max_degree, "highest degree")->check(CLI::NonNegativeNumber); };

  CLI::App* check = app.add_subcommand("check", "validate axioms, injectivity, Jacobi and PBW");
  add_file(check);
  add_param(check);
  CLI::App* coh = app.add_subcommand("cohomology", "Betti numbers, series and representatives");
  add_file(coh);
  add_param(coh);
  add_degree(coh);
  coh->add_flag("--representatives", reps, "print cocycles representing each H^n");
  CLI::App* ser = app.add_subcommand("series", "recognize the Poincare series of a file or a sequence");
  ser->add_option("path", path, "algebra file");
  ser->add_option("--sequence", sequence, "comma or space separated integers");
  add_common(ser);
  add_param(ser);
  add_degree(ser);
  CLI::App* dual = app.add_subcommand("dual", "quadratic dual of U(g_ab)");
  add_file(dual);
  CLI::App* hilb = app.add_subcommand("hilbert", "Hilbert series checked by enumeration");
  add_file(hilb);
  add_degree(hilb);
  CLI::App* pbw = app.add_subcommand("pbw", "Groebner check of the enveloping algebra relations");
  add_file(pbw);
  add_param(pbw);
  CLI::App* table = app.add_subcommand("table", "reproduce the catalog cohomology table");
  add_common(table);
  add_degree(table);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    report::Options opt;
    opt.format = report::parse_format(format);
    if (max_degree >= 0) opt.max_degree = max_degree;
    if (!param.empty()) opt.param = param;
    opt.representatives = reps;

    report::Output result;
    if (*table) {
      result = report::table(opt);
    } else if (*ser && path.empty()) {
      if (sequence.empty()) throw report::InputError("series needs a file or --sequence");
      result = report::series(parse_sequence(sequence), opt);
    } else {
      const AlgebraFile file = read_algebra_file(path);
      if (*check) result = report::check(file, opt);
      if (*coh) result = report::cohomology(file, opt);
      if (*ser) result = report::series(file, opt);
      if (*dual) result = report::dual(file, opt);
      if (*hilb) result = report::hilbert(file, opt);
      if (*pbw) result = report::pbw(file, opt);
    }

    if (out_path.empty()) {
      std::cout << result.body;
    } else {
      std::ofstream out(out_path);
      if (!out) throw report::InputError("cannot write '" + out_path + "'");
      out << result.body;
    }
    return result.exit_code;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const report::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
