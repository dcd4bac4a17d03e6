#include <iostream>
#include <regex>
#include <string>

#include <CLI11.hpp>

#include "csrg/brute_oracle.hpp"
#include "csrg/cayley_graph.hpp"
#include "csrg/export.hpp"
#include "csrg/report.hpp"

namespace
{

constexpr int graph6_max_modulus = 110;

bool parse_range(std::string const &text, int &lo, int &hi)
{
  static std::regex const pattern(R"(^\s*(\d+)\s*\.\.\s*(\d+)\s*$)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern))
    return false;
  lo = std::stoi(m[1]);
  hi = std::stoi(m[2]);
  return true;
}

int analyze(int n, bool oracle, bool no_timings)
{
  auto report = csrg::run_analyze(n, oracle);
  std::cout << csrg::to_json(report, !no_timings).dump(2) << '\n';
  for (auto const &m : report.mismatches)
    std::cerr << "mismatch: " << m << '\n';
  return report.passed() ? 0 : 1;
}

int export_graph(int n, std::string const &format)
{
  if (format == "graph6") {
    if (n < csrg::min_modulus || n > graph6_max_modulus) {
      std::cerr << "graph6 export supports 4 <= n <= 110\n";
      return 2;
    }
    std::cout << csrg::encode_graph6(csrg::build_gamma(n)) << '\n';
    return 0;
  }
  if (format == "dot") {
    std::cout << csrg::to_dot(csrg::build_gamma(n));
    return 0;
  }
  std::cerr << "unsupported format '" << format << "' (use graph6 or dot)\n";
  return 2;
}

int verify(std::string const &range, int oracle_upto)
{
  int lo = 0, hi = 0;
  if (!parse_range(range, lo, hi)) {
    std::cerr << "range must look like <lo>..<hi>, got '" << range << "'\n";
    return 2;
  }

  auto summary = csrg::run_verify(lo, hi, oracle_upto);
  std::cout << summary.table();
  for (auto const &m : summary.mismatches())
    std::cerr << "mismatch: " << m << '\n';
  std::cout << (summary.passed() ? "all predictions reproduced\n"
                                 : "MISMATCHES FOUND\n");
  return summary.passed() ? 0 : 1;
}

} // namespace

int main(int argc, char **argv)
{
  CLI::App app{"Automorphisms and transitivity of the Cayley graphs Γ(n) on Z_n×Z_n"};
  app.require_subcommand(1);

  int analyze_n = 0;
  bool with_oracle = false;
  bool no_timings = false;
  auto *analyze_cmd = app.add_subcommand("analyze", "Analyse Γ(n) and print a JSON report");
  analyze_cmd->add_option("n", analyze_n, "modulus (4..1000)")->required();
  analyze_cmd->add_flag("--oracle", with_oracle,
                        "cross-check against brute-force enumeration (n <= 7)");
  analyze_cmd->add_flag("--no-timings", no_timings,
                        "emit null timings for reproducible output");

  int export_n = 0;
  std::string format;
  auto *export_cmd = app.add_subcommand("export", "Write Γ(n) as graph6 or DOT");
  export_cmd->add_option("n", export_n, "modulus")->required();
  export_cmd->add_option("--format", format, "graph6 or dot")->required();

  std::string range;
  int oracle_upto = 0;
  auto *verify_cmd = app.add_subcommand("verify", "Check every prediction over a range of n");
  verify_cmd->add_option("range", range, "inclusive range <lo>..<hi>")->required();
  verify_cmd->add_option("--oracle-upto", oracle_upto,
                         "run the brute-force oracle for n <= m (m <= 7)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*analyze_cmd)
      return analyze(analyze_n, with_oracle, no_timings);
    if (*export_cmd)
      return export_graph(export_n, format);
    if (*verify_cmd)
      return verify(range, oracle_upto);
  } catch (std::exception const &e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
