#pragma once

#include <filesystem>
#include <string>

#include "infgon/triangulation.hpp"
#include "json.hpp"

namespace infgon {

using Json = nlohmann::ordered_json;

Json to_json(const ParamRange& r);
Json to_json(const AffineEndpoint& e);
Json to_json(const Certificate& c);
Json to_json(const Triangulation& t);

/// Throws ParseError naming the offending token.
Triangulation triangulation_from_json(const nlohmann::json& doc);
Triangulation parse_triangulation(const std::string& text);

/// Throws std::runtime_error when the file cannot be read or written.
Triangulation read_triangulation(const std::filesystem::path& path);
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace infgon
