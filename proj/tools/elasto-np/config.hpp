#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

namespace cli {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// section -> key -> raw value
using RawConfig = std::map<std::string, std::map<std::string, std::string>>;

// INI by default; JSON when the file ends in .json (a previous summary is
// accepted: its "config" object is used).
RawConfig load_config(const std::string& path);

enum class Type { Real, Complex, Int, U64, Bool, String, RealList };

struct KeySpec {
  std::string section;
  std::string key;
  std::string def;  // "" = unset (only legal for optional keys)
  Type type;
  std::vector<std::string> choices = {};
};

class Resolved {
 public:
  bool has(const std::string& section, const std::string& key) const;
  double real(const std::string& section, const std::string& key) const;
  std::complex<double> cplx(const std::string& section, const std::string& key) const;
  int integer(const std::string& section, const std::string& key) const;
  std::uint64_t u64(const std::string& section, const std::string& key) const;
  bool boolean(const std::string& section, const std::string& key) const;
  const std::string& str(const std::string& section, const std::string& key) const;
  std::vector<double> reals(const std::string& section, const std::string& key) const;

  void set(const std::string& section, const std::string& key, const std::string& value);
  nlohmann::ordered_json to_json() const;

 private:
  friend Resolved resolve(const std::string&, const RawConfig&);
  struct Entry {
    KeySpec spec;
    std::string value;
  };
  const Entry& find(const std::string& section, const std::string& key) const;
  std::vector<Entry> entries_;
};

const std::vector<std::string>& commands();

// Fills defaults, rejects unknown sections/keys and malformed values.
Resolved resolve(const std::string& command, const RawConfig& raw);

std::complex<double> parse_complex(const std::string& s);
double parse_real(const std::string& s);

}  // namespace cli
