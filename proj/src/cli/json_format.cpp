#include "snellfagnano/cli/json_format.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace sf::cli {
namespace {

void write(const Json& j, int indent, int depth, std::string& out) {
  const bool pretty = indent >= 0;
  auto newline = [&](int d) {
    if (!pretty) return;
    out += '\n';
    out.append(static_cast<size_t>(d * indent), ' ');
  };
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        newline(depth + 1);
        out += Json(key).dump();
        out += pretty ? ": " : ":";
        write(value, indent, depth + 1, out);
      }
      newline(depth);
      out += '}';
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short numeric arrays (coordinates, triples) stay on one line.
      const bool flat = j.size() <= 4 && std::all_of(j.begin(), j.end(), [](const Json& e) {
                          return e.is_number() || e.is_boolean() || e.is_null();
                        });
      out += '[';
      for (size_t i = 0; i < j.size(); ++i) {
        if (i > 0) out += flat && pretty ? ", " : ",";
        if (!flat) newline(depth + 1);
        write(j[i], indent, depth + 1, out);
      }
      if (!flat) newline(depth);
      out += ']';
      return;
    }
    case Json::value_t::number_float:
      out += format_double(j.get<double>());
      return;
    default:
      out += j.dump();
      return;
  }
}

}  // namespace

std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";  // folds -0 as well
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_json(const Json& j, int indent) {
  std::string out;
  write(j, indent, 0, out);
  return out;
}

}  // namespace sf::cli
