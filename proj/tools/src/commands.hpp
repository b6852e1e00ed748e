#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "singcurve/errors.hpp"

namespace singcurve::cli {

using Json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

struct Options {
  std::optional<int> order;  // x-degree bound; automatic when unset
  bool verbose = false;
  bool reduce = false;
};

// Bad command line; exit code 2 like a parse error.
struct UsageError : Error {
  using Error::Error;
};

const std::vector<std::string>& command_names();

// One complete report: {schema_version, command, inputs, results,
// frame_notes, erratum_notes, order_used}.
Json run(const std::string& command, const std::vector<std::string>& inputs, const Options& opts);

// Each group is evaluated on its own thread pool slot; results keep the
// group order. Failures are recorded per group.
Json run_batch(const std::string& command, const std::vector<std::vector<std::string>>& groups,
               const Options& opts, unsigned threads, int& status);

// 2 parse/usage, 3 precondition, 4 internal, 1 otherwise.
int exit_code_of(const std::exception& e);
// Message with position caret for parse errors.
std::string describe_error(const std::exception& e, const std::vector<std::string>& inputs);

}  // namespace singcurve::cli
