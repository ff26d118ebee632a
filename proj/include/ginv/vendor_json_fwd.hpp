#pragma once

// Single include point for the vendored nlohmann/json. ordered_json keeps
// emitted documents byte-stable in insertion order.

#include <json.hpp>

namespace ginv {
using json = nlohmann::ordered_json;
}
