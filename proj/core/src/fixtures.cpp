#include "qdx/fixtures.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace qdx {

std::string format_number(double value) {
  if (value == 0.0) value = 0.0;  // drops the sign of -0
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

FixtureMap read_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open fixtures file " + path.string());
  FixtureMap out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    std::istringstream fields(line);
    std::string key;
    std::string number;
    std::string extra;
    if (!(fields >> key >> number) || (fields >> extra))
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": expected `key value`");
    std::size_t used = 0;
    double value = 0.0;
    try {
      value = std::stod(number, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != number.size())
      throw std::runtime_error(path.string() + ":" + std::to_string(line_no) +
                               ": bad number `" + number + "`");
    out[key] = value;
  }
  return out;
}

std::string render_fixtures(const FixtureMap& fixtures) {
  std::string text;
  for (const auto& [key, value] : fixtures) {
    text += key;
    text += ' ';
    text += format_number(value);
    text += '\n';
  }
  return text;
}

void write_fixtures(const std::filesystem::path& path, const FixtureMap& fixtures) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot write fixtures file " + path.string());
  out << render_fixtures(fixtures);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace qdx
