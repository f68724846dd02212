#include "config.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "padicmech/errors.hpp"
#include "padicmech/text.hpp"

#ifndef PADICMECH_SOURCE_PRESET_DIR
#define PADICMECH_SOURCE_PRESET_DIR ""
#endif
#ifndef PADICMECH_INSTALL_PRESET_DIR
#define PADICMECH_INSTALL_PRESET_DIR ""
#endif

namespace padicmech::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// A bare name that does not exist relative to the working directory is
// looked up in $PADICMECH_PRESET_DIR and then in the built-in preset dirs.
std::filesystem::path locate_preset(const std::string& name) {
  namespace fs = std::filesystem;
  const fs::path direct(name);
  if (fs::exists(direct) || direct.has_parent_path()) return direct;
  std::vector<std::string> dirs;
  if (const char* env = std::getenv("PADICMECH_PRESET_DIR")) dirs.emplace_back(env);
  dirs.emplace_back(PADICMECH_INSTALL_PRESET_DIR);
  dirs.emplace_back(PADICMECH_SOURCE_PRESET_DIR);
  for (const auto& d : dirs) {
    if (d.empty()) continue;
    const fs::path candidate = fs::path(d) / name;
    if (fs::exists(candidate)) return candidate;
  }
  return direct;
}

}  // namespace

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int parse_int(const std::string& text, const std::string& what) {
  int v = 0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(what + ": expected an integer, got '" + text + "'");
  }
  return v;
}

std::uint64_t parse_u64(const std::string& text, const std::string& what) {
  std::uint64_t v = 0;
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty()) {
    throw ParseError(what + ": expected an unsigned 64-bit integer, got '" + text + "'");
  }
  return v;
}

Preset parse_preset(const std::string& text, const std::string& origin) {
  Preset out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError(origin + ":" + std::to_string(number) + ": expected 'key = value'");
    }
    const auto key = trim(line.substr(0, eq));
    if (key.empty()) throw ParseError(origin + ":" + std::to_string(number) + ": empty key");
    out[key] = trim(line.substr(eq + 1));
  }
  return out;
}

Preset load_preset(const std::string& path) {
  const auto resolved = locate_preset(path);
  std::ifstream in(resolved);
  if (!in) throw ParseError("cannot open preset '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_preset(buf.str(), resolved.string());
}

std::string RunConfig::pick(const std::optional<std::string>& flag, const std::string& key,
                            const std::string& fallback) const {
  return pick_optional(flag, key).value_or(fallback);
}

std::optional<std::string> RunConfig::pick_optional(const std::optional<std::string>& flag,
                                                    const std::string& key) const {
  if (flag) return flag;
  if (const auto it = preset.find(key); it != preset.end()) return it->second;
  return std::nullopt;
}

PadicNumber RunConfig::value(const std::string& text) const { return parse_value(text, prime, precision); }

std::vector<PadicNumber> RunConfig::values(const std::string& list) const {
  std::vector<PadicNumber> out;
  for (const auto& item : split_list(list)) out.push_back(value(item));
  return out;
}

std::uint64_t RunConfig::require_seed() const {
  if (!seed) throw InvalidArgument("random sampling needs an explicit --seed");
  return *seed;
}

RunConfig resolve(const GlobalFlags& flags) {
  RunConfig cfg;
  if (flags.preset) cfg.preset = load_preset(*flags.preset);
  const auto pick = [&](const std::optional<std::string>& flag, const char* key) { return cfg.pick_optional(flag, key); };

  if (const auto v = pick(flags.prime, "prime")) {
    const auto p = parse_u64(*v, "prime");
    require_prime(p);
    cfg.prime = static_cast<std::uint32_t>(p);
  }
  if (const auto v = pick(flags.precision, "precision")) {
    cfg.precision = parse_int(*v, "precision");
    if (cfg.precision < 1 || cfg.precision > kMaxPrecision) {
      throw InvalidArgument("precision must lie in [1, " + std::to_string(kMaxPrecision) + "]");
    }
  }
  if (const auto v = pick(flags.degree, "degree")) {
    cfg.degree = parse_int(*v, "degree");
    if (cfg.degree < 0 || cfg.degree > kMaxDegree) {
      throw InvalidArgument("degree must lie in [0, " + std::to_string(kMaxDegree) + "]");
    }
  }
  if (const auto v = pick(flags.format, "format")) cfg.format = parse_format(*v);
  cfg.out = pick(flags.out, "out");
  if (const auto v = pick(flags.seed, "seed")) cfg.seed = parse_u64(*v, "seed");
  return cfg;
}

}  // namespace padicmech::cli
