#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "output.hpp"
#include "padicmech/padic_number.hpp"

namespace padicmech::cli {

inline constexpr int kMaxPrecision = 1024;
inline constexpr int kMaxDegree = 512;

/// Flat `key = value` text; '#' starts a comment. Later keys win.
using Preset = std::map<std::string, std::string>;

Preset parse_preset(const std::string& text, const std::string& origin = "preset");
Preset load_preset(const std::string& path);

/// Settings shared by every subcommand. Flags override the preset, which
/// overrides the built-in defaults.
struct RunConfig {
  std::uint32_t prime = 5;
  int precision = kDefaultPrecision;
  int degree = kDefaultDegree;
  /// Empty when neither a flag nor the preset chose one; records then print
  /// as JSON and tables as CSV.
  std::optional<Format> format;
  std::optional<std::string> out;
  std::optional<std::uint64_t> seed;
  Preset preset;

  /// flag, else preset[key], else fallback.
  std::string pick(const std::optional<std::string>& flag, const std::string& key,
                   const std::string& fallback = "") const;
  std::optional<std::string> pick_optional(const std::optional<std::string>& flag, const std::string& key) const;

  PadicNumber value(const std::string& text) const;
  std::vector<PadicNumber> values(const std::string& list) const;
  std::uint64_t require_seed() const;
};

/// Raw command-line values before merging.
struct GlobalFlags {
  std::optional<std::string> prime;
  std::optional<std::string> precision;
  std::optional<std::string> degree;
  std::optional<std::string> preset;
  std::optional<std::string> format;
  std::optional<std::string> out;
  std::optional<std::string> seed;
};

RunConfig resolve(const GlobalFlags& flags);

/// Comma-separated items with surrounding blanks removed; empty items dropped.
std::vector<std::string> split_list(const std::string& text, char sep = ',');
int parse_int(const std::string& text, const std::string& what);
std::uint64_t parse_u64(const std::string& text, const std::string& what);

}  // namespace padicmech::cli
