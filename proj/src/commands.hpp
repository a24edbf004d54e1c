#pragma once

// Command dispatch shared by the C API and, through it, the CLI.

#include "serialize.hpp"

#include <map>

namespace arithlat {

struct RunConfig {
  std::map<std::string, std::string> values;

  void set(const std::string& key, const std::string& value);
  bool has(const std::string& key) const { return values.count(key) != 0; }
  std::string text(const std::string& key, const std::string& fallback) const;
  long integer(const std::string& key, long fallback) const;
  Rational rational(const std::string& key, const Rational& fallback) const;
  std::uint64_t seed() const;
};

// Accepted configuration keys (same spelling as the CLI flags).
const std::vector<std::string>& config_keys();

// "key = value" lines; '#' starts a comment.
void load_config_text(RunConfig& cfg, const std::string& text);

struct CommandResult {
  Json doc;
  bool pass = true;
};

// noun: algebra | units | rep | descend | build | verify
CommandResult run_command(const std::string& noun, const RunConfig& cfg);

}  // namespace arithlat
