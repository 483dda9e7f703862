#ifndef SNELLFAGNANO_CLI_JSON_FORMAT_HPP
#define SNELLFAGNANO_CLI_JSON_FORMAT_HPP

#include <string>

#include "json.hpp"

namespace sf::cli {

using Json = nlohmann::ordered_json;

// %.17g, so every double round-trips and the text is byte-stable.
std::string format_double(double v);

// Keys keep insertion order. indent < 0 writes a single line.
std::string format_json(const Json& j, int indent = 2);

}  // namespace sf::cli

#endif  // SNELLFAGNANO_CLI_JSON_FORMAT_HPP
