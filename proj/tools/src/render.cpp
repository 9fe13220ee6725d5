#include <sstream>

#include "commands.hpp"

namespace mckay::cli {

namespace {

bool scalar_array(const nlohmann::json& j) {
  for (const auto& x : j)
    if (x.is_structured()) return false;
  return true;
}

std::string scalar(const nlohmann::json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit(std::ostringstream& out, const nlohmann::json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && scalar_array(v))) {
        out << pad << k << ":\n";
        emit(out, v, indent + 1);
      } else if (v.is_array()) {
        out << pad << k << ": ";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "\n";
      } else {
        out << pad << k << ": " << scalar(v) << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_array() && scalar_array(v)) {
        out << pad << "- ";
        for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar(v[i]);
        out << "\n";
      } else if (v.is_structured()) {
        out << pad << "-\n";
        emit(out, v, indent + 1);
      } else {
        out << pad << "- " << scalar(v) << "\n";
      }
    }
  } else {
    out << pad << scalar(j) << "\n";
  }
}

}  // namespace

std::string render_text(const nlohmann::json& j) {
  std::ostringstream out;
  emit(out, j, 0);
  return out.str();
}

}  // namespace mckay::cli
