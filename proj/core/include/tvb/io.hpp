#pragma once

#include <string>

#include "tvb/bundle.hpp"

namespace tvb {

// Parses the JSON bundle document (see docs/bundle-format.md). Throws Error
// with a distinct code per malformed construct.
ToricVectorBundle parse_bundle(const std::string& text);

ToricVectorBundle load_bundle(const std::string& path);

// Deterministic serialization; parse(serialize(e)) == e.
std::string serialize_bundle(const ToricVectorBundle& e);

void save_bundle(const ToricVectorBundle& e, const std::string& path);

}  // namespace tvb
