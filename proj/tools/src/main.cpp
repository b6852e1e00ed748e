#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "commands.hpp"
#include "report.hpp"

using namespace singcurve::cli;

namespace {

std::vector<std::vector<std::string>> read_batch(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read batch file " + path);
  std::vector<std::vector<std::string>> groups;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    // inputs on one line are separated by '|'
    std::vector<std::string> g;
    size_t start = 0;
    for (;;) {
      size_t bar = line.find('|', start);
      std::string part = line.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
      auto a = part.find_first_not_of(" \t\r"), b = part.find_last_not_of(" \t\r");
      g.push_back(a == std::string::npos ? "" : part.substr(a, b - a + 1));
      if (bar == std::string::npos) break;
      start = bar + 1;
    }
    groups.push_back(g);
  }
  return groups;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Plane curve singularity invariants"};
  std::string command, format = "text", batch, out_path;
  std::vector<std::string> inputs;
  Options opts;
  int order = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  app.add_option("command", command, "expand | branches | char | semigroup | implicitize | intersect | contact | "
                                     "equisingular | cabling | alexander | recover")
      ->required();
  app.add_option("inputs", inputs, "polynomial in x, y; \"param: X(t), Y(t)\"; \"char: (m;b1,...)\"; "
                                   "\"semigroup: g1,...\"; \"symbol: S(n) ...\"; polynomial in t");
  auto* order_opt = app.add_option("--order", order, "x-degree bound for expansions (default: automatic)");
  app.add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--batch", batch, "file with one input set per line, inputs separated by '|'");
  app.add_option("--jobs", jobs, "worker threads for --batch");
  app.add_option("--out", out_path, "write the report to FILE");
  app.add_flag("--verbose", opts.verbose, "show intersection paths and the minimum contact reading");
  app.add_flag("--reduce", opts.reduce, "replace a non-reduced polynomial by its square-free part");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (*order_opt) opts.order = order;
  const Format fmt = format == "json" ? Format::Json : Format::Text;

  int status = 0;
  std::string text;
  try {
    Json report;
    if (!batch.empty()) {
      if (!inputs.empty()) throw UsageError("--batch takes its inputs from the file only");
      report = run_batch(command, read_batch(batch), opts, jobs, status);
    } else {
      report = run(command, inputs, opts);
    }
    text = serialize(report, fmt);
  } catch (const std::exception& e) {
    std::cerr << describe_error(e, inputs) << "\n";
    return exit_code_of(e);
  }

  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 1;
    }
    out << text;
  } else {
    std::cout << text;
  }
  return status;
}
