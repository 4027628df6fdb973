#include <cstdint>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "tabletrie/bench.hpp"

int main(int argc, char** argv) {
  CLI::App app{"table-space benchmark: store/load workloads under the "
               "original, gt-t and gt-st designs and report node counts"};

  std::string design_str;
  std::string workload_str;
  std::string load_str = "both";
  std::string format_str = "json";
  std::string out_path = "-";
  uint64_t n = 0;
  int runs = 1;
  uint32_t word_bytes = 8;
  bool all_pairs = false;
  bool verify_oracle = false;

  app.add_option("--design", design_str, "original | gt-t | gt-st")->required();
  app.add_option("--workload", workload_str,
                 "table1:<kind> | table2:f<a>.g<b> | factfile:<path> | random:<seed>")
      ->required();
  app.add_option("--n", n, "term count (default: 100 for table1/random, 50000 for table2)");
  app.add_option("--runs", runs, "timed repetitions; times report the median")
      ->check(CLI::PositiveNumber);
  app.add_option("--load", load_str, "bottomup | compiled | both");
  app.add_option("--word-bytes", word_bytes, "word size for the byte model")
      ->check(CLI::PositiveNumber);
  app.add_option("--out", out_path, "output path, or - for stdout");
  app.add_option("--format", format_str, "json | csv");
  app.add_flag("--all-pairs", all_pairs,
               "table1: two-variable calls over all position pairs, not just adjacent ones");
  app.add_flag("--verify-oracle", verify_oracle,
               "check node counts against the reference model even on large runs");

  CLI11_PARSE(app, argc, argv);

  try {
    tabletrie::RunOptions opt;
    opt.design = tabletrie::parse_design(design_str);
    opt.spec = tabletrie::WorkloadSpec::parse(workload_str);
    opt.spec.n = n;
    opt.spec.all_pairs = all_pairs;
    opt.runs = runs;
    opt.load = tabletrie::parse_load_mode(load_str);
    opt.word_bytes = word_bytes;
    opt.force_verify_oracle = verify_oracle;

    tabletrie::RunReport report = tabletrie::run(opt);
    tabletrie::write_report(report, out_path, tabletrie::parse_report_format(format_str));
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
