#include "emoflow/config.hpp"

#include <fstream>
#include <istream>

#include "emoflow/errors.hpp"
#include "emoflow/fitting.hpp"
#include "text.hpp"

namespace emoflow {

KeyValueConfig KeyValueConfig::parse(std::istream& in) {
  KeyValueConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (text::skippable(line)) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(line_no, "expected key = value");
    const auto key = text::trim(std::string_view(line).substr(0, eq));
    auto value = text::trim(std::string_view(line).substr(eq + 1));
    if (const auto hash = value.find('#'); hash != std::string_view::npos) {
      value = text::trim(value.substr(0, hash));
    }
    if (key.empty()) throw ParseError(line_no, "empty key");
    cfg.values_[std::string(key)] = std::string(value);
  }
  return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config '" + path + "'");
  return parse(in);
}

std::string KeyValueConfig::get(const std::string& key, const std::string& fallback) const {
  const auto it = values_.find(key);
  return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const auto v = text::parse_double(it->second);
  if (!v) throw UsageError("config key '" + key + "' expects a number, got '" + it->second + "'");
  return *v;
}

std::int64_t KeyValueConfig::get_int(const std::string& key, std::int64_t fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  const auto v = text::parse_int(it->second);
  if (!v) throw UsageError("config key '" + key + "' expects an integer, got '" + it->second + "'");
  return *v;
}

std::uint64_t KeyValueConfig::get_uint(const std::string& key, std::uint64_t fallback) const {
  const auto v = get_int(key, static_cast<std::int64_t>(fallback));
  if (v < 0) throw UsageError("config key '" + key + "' must be non-negative");
  return static_cast<std::uint64_t>(v);
}

std::vector<double> KeyValueConfig::get_doubles(const std::string& key,
                                                const std::vector<double>& fallback) const {
  const auto it = values_.find(key);
  if (it == values_.end()) return fallback;
  try {
    return parse_double_list(it->second);
  } catch (const std::exception& e) {
    throw UsageError("config key '" + key + "': " + e.what());
  }
}

std::vector<double> parse_double_list(const std::string& list) {
  const auto trimmed = text::trim(list);
  if (trimmed.find(':') != std::string_view::npos && trimmed.find(',') == std::string_view::npos) {
    std::vector<double> parts;
    std::size_t start = 0;
    while (true) {
      const auto pos = trimmed.find(':', start);
      const auto v = text::parse_double(text::trim(trimmed.substr(start, pos - start)));
      if (!v) throw UsageError("bad range '" + list + "'");
      parts.push_back(*v);
      if (pos == std::string_view::npos) break;
      start = pos + 1;
    }
    if (parts.size() != 3) throw UsageError("range must be first:last:step");
    return linear_grid(parts[0], parts[1], parts[2]);
  }
  std::vector<double> out;
  for (auto f : text::split_fields(trimmed)) {
    const auto v = text::parse_double(f);
    if (!v) throw UsageError("bad number '" + std::string(f) + "' in list");
    out.push_back(*v);
  }
  if (out.empty()) throw UsageError("empty list");
  return out;
}

}  // namespace emoflow
