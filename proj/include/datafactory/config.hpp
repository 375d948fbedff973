#pragma once

// Minimal INI-style configuration: `[section]` headers, `key = value` lines,
// `#` or `;` comments. Section and key order is preserved.

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace datafactory {

class Config {
 public:
  struct Section {
    std::string name;
    std::size_t line = 0;
    std::vector<std::pair<std::string, std::string>> entries;

    std::optional<std::string> get(std::string_view key) const;
    bool has(std::string_view key) const { return get(key).has_value(); }
  };

  static Config parse(std::string_view text, const std::string& origin = "<config>");
  static Config load(const std::filesystem::path& path);

  const std::vector<Section>& sections() const { return sections_; }
  const Section* section(std::string_view name) const;

  // Lookup by dotted name "section.key"; keys outside any section live in
  // the section named "".
  std::optional<std::string> get(std::string_view dotted) const;
  std::string get_or(std::string_view dotted, std::string fallback) const;
  double get_double(std::string_view dotted, double fallback) const;
  long long get_int(std::string_view dotted, long long fallback) const;
  bool get_bool(std::string_view dotted, bool fallback) const;

  // Sets or overrides "section.key" (used for CLI flag overrides).
  void set(std::string_view dotted, std::string value);

  const std::filesystem::path& base_dir() const { return base_dir_; }
  // Resolves a path relative to the config file location.
  std::filesystem::path resolve(const std::string& p) const;

 private:
  std::vector<Section> sections_;
  std::filesystem::path base_dir_;
  std::string origin_;
};

double parse_double(std::string_view s, const std::string& what);
long long parse_int(std::string_view s, const std::string& what);
bool parse_bool(std::string_view s, const std::string& what);
std::vector<std::string> split_list(std::string_view s, char sep = ',');

}  // namespace datafactory
