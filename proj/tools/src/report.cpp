#include "report.hpp"

#include <sstream>

namespace singcurve::cli {

namespace {

std::string scalar(const Json& v) {
  if (v.is_null()) return "none";
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "inf") return "∞";
    if (s.rfind(">= ", 0) == 0) return "≥ " + s.substr(3);
    return s;
  }
  return v.dump();
}

bool flat(const Json& v) {
  if (!v.is_array()) return !v.is_object();
  for (const auto& x : v)
    if (x.is_array() || x.is_object()) return false;
  return true;
}

std::string inline_array(const Json& v) {
  std::string s = "[";
  for (size_t k = 0; k < v.size(); ++k) s += (k ? ", " : "") + scalar(v[k]);
  return s + "]";
}

void emit(std::ostringstream& os, const Json& v, int indent);

void emit_items(std::ostringstream& os, const Json& arr, int indent) {
  const std::string pad(indent, ' ');
  for (const auto& x : arr) {
    if (x.is_object()) {
      os << pad << "-\n";
      emit(os, x, indent + 2);
    } else if (flat(x)) {
      os << pad << (x.is_array() ? inline_array(x) : scalar(x)) << "\n";
    } else {
      os << pad << "-\n";
      emit_items(os, x, indent + 2);
    }
  }
}

void emit_value(std::ostringstream& os, const std::string& head, const Json& v, int indent) {
  const std::string pad(indent, ' ');
  if (v.is_object()) {
    os << pad << head << ":\n";
    emit(os, v, indent + 2);
  } else if (v.is_array() && !flat(v)) {
    os << pad << head << ":\n";
    emit_items(os, v, indent + 2);
  } else if (v.is_array()) {
    os << pad << head << ": " << inline_array(v) << "\n";
  } else {
    const std::string sv = scalar(v);
    os << pad << head << (sv.empty() ? ":" : ": " + sv) << "\n";
  }
}

void emit(std::ostringstream& os, const Json& v, int indent) {
  for (auto it = v.begin(); it != v.end(); ++it) emit_value(os, it.key(), it.value(), indent);
}

}  // namespace

std::string serialize(const Json& report, Format format) {
  if (format == Format::Json) return report.dump(2) + "\n";
  std::ostringstream os;
  os << "command: " << scalar(report["command"]) << "\n";
  const Json& inputs = report["inputs"];
  for (size_t k = 0; k < inputs.size(); ++k)
    os << "input " << k + 1 << ": " << (inputs[k].is_array() ? inline_array(inputs[k]) : scalar(inputs[k])) << "\n";
  emit_value(os, "results", report["results"], 0);
  for (const char* key : {"frame_notes", "erratum_notes"}) {
    const Json& notes = report[key];
    if (notes.empty()) continue;
    os << (key[0] == 'f' ? "frame notes" : "erratum notes") << ":\n";
    for (const auto& n : notes) os << "  " << scalar(n) << "\n";
  }
  os << "order used: " << scalar(report["order_used"]) << "\n";
  return os.str();
}

}  // namespace singcurve::cli
