#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace qdx {

// 12 significant digits, lowercase exponent, negative zero printed as zero.
std::string format_number(double value);

// Flat `key value` records, one per line, sorted by key.
using FixtureMap = std::map<std::string, double>;

// Throws std::runtime_error with the path and line number on I/O or parse
// failure. Blank lines and lines starting with '#' are skipped.
FixtureMap read_fixtures(const std::filesystem::path& path);

std::string render_fixtures(const FixtureMap& fixtures);

void write_fixtures(const std::filesystem::path& path, const FixtureMap& fixtures);

}  // namespace qdx
