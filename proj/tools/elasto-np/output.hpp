#pragma once

#include <complex>
#include <filesystem>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "elasto_np.h"
#include "json.hpp"

namespace cli {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
  // RFC 4180: CRLF records, quoted fields when needed.
  std::string to_csv() const;
};

std::string num(double v);  // %.17g
std::string num(int v);

// temp file in the same directory, then rename
void write_atomic(const std::filesystem::path& path, const std::string& content);

struct Assertion {
  std::string name;
  double value;
  double threshold;
  std::string relation;  // human-readable comparison
  bool passed;
};

struct RunOutput {
  nlohmann::ordered_json results = nlohmann::ordered_json::object();
  std::vector<Assertion> assertions;
  Table table;
};

// A library call failed; the run ends with exit status 1.
struct RunError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(enp_status s);

inline enp_complex to_enp(std::complex<double> z) { return {z.real(), z.imag()}; }
inline std::complex<double> from_enp(enp_complex z) { return {z.re, z.im}; }

struct Deleter {
  void operator()(enp_corefree* p) const { enp_corefree_destroy(p); }
  void operator()(enp_coreshell* p) const { enp_coreshell_destroy(p); }
  void operator()(enp_source* p) const { enp_source_destroy(p); }
  void operator()(enp_solution* p) const { enp_solution_destroy(p); }
};

template <class T>
using Handle = std::unique_ptr<T, Deleter>;

}  // namespace cli
