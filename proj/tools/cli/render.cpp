#include <sstream>

#include "cli/commands.hpp"

namespace spinc::cli {
namespace {

bool is_scalar_array(const Json& j) {
  if (!j.is_array()) return false;
  for (const auto& e : j)
    if (e.is_object() || (e.is_array() && !is_scalar_array(e))) return false;
  return true;
}

void render_into(std::ostringstream& out, const Json& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || (value.is_array() && !is_scalar_array(value) && !value.empty())) {
        out << pad << key << ":\n";
        render_into(out, value, indent + 1);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_object()) {
        out << pad << "-\n";
        render_into(out, e, indent + 1);
      } else {
        out << pad << "- " << e.dump() << '\n';
      }
    }
  } else {
    out << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

std::string render(const Json& body) {
  std::ostringstream out;
  render_into(out, body, 0);
  return out.str();
}

}  // namespace spinc::cli
