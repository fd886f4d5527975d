#include "config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

namespace cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<KeySpec> common_keys(const std::string& command) {
  return {
      {"run", "mode", command, Type::String, {command}},
      {"run", "seed", "0", Type::U64},
      {"run", "threads", "0", Type::Int},
      {"output", "dir", ".", Type::String},
  };
}

std::vector<KeySpec> medium_keys(const char* omega) {
  return {
      {"medium", "lambda", "1", Type::Complex},
      {"medium", "mu", "1", Type::Complex},
      {"medium", "omega", omega, Type::Real},
  };
}

std::vector<KeySpec> schema(const std::string& command) {
  auto keys = common_keys(command);
  auto add = [&](std::vector<KeySpec> more) { keys.insert(keys.end(), more.begin(), more.end()); };

  if (command == "validate") return keys;

  if (command == "np-spectrum") {
    add(medium_keys("1"));
    add({
        {"geometry", "R", "1", Type::Real},
        {"sweep", "n_min", "1", Type::Int},
        {"sweep", "n_max", "40", Type::Int},
        {"tolerance", "eigen_residual", "1e-11", Type::Real},
    });
    return keys;
  }

  if (command == "resonance-sweep") {
    add(medium_keys("5"));
    add({
        {"geometry", "R", "1", Type::Real},
        {"inclusion", "lambda_hat", "1+0.01i", Type::Complex},
        {"inclusion", "mu_hat", "-1.87988+1e-6i", Type::Complex},
        {"sweep", "variable", "im_mu_hat", Type::String, {"im_mu_hat", "p1"}},
        {"sweep", "n0", "5", Type::Int},
        {"sweep", "im_lo", "1e-6", Type::Real},
        {"sweep", "im_hi", "1", Type::Real},
        {"sweep", "per_decade", "60", Type::Int},
        {"sweep", "tune_re", "false", Type::Bool},
        {"sweep", "re_lo", "-3", Type::Real},
        {"sweep", "re_hi", "-1", Type::Real},
        {"sweep", "M", "1e10", Type::Real},
        {"sweep", "p_lo", "-0.5", Type::Real},
        {"sweep", "p_hi", "0.5", Type::Real},
        {"sweep", "points", "201", Type::Int},
        {"expect", "peak_ratio", "", Type::Real},
        {"expect", "re_mu_hat", "", Type::Real},
        {"expect", "re_mu_tol", "0.01", Type::Real},
        {"expect", "p_star", "", Type::Real},
        {"expect", "p_tol", "1e-3", Type::Real},
    });
    return keys;
  }

  const std::vector<KeySpec> shell = {
      {"geometry", "r_i", "0.8", Type::Real},
      {"geometry", "r_e", "1", Type::Real},
      {"inclusion", "lambda_core", "1", Type::Complex},
      {"inclusion", "mu_core", "1", Type::Complex},
      {"inclusion", "lambda_hat", "1+0.01i", Type::Complex},
  };

  if (command == "calr-design") {
    add(medium_keys("5"));
    add(shell);
    add({
        {"sweep", "n0", "50", Type::Int},
        {"sweep", "p_lo", "-0.5", Type::Real},
        {"sweep", "p_hi", "0.5", Type::Real},
        {"sweep", "points", "401", Type::Int},
        {"source", "radii", "", Type::RealList},
        {"source", "n_min", "1", Type::Int},
        {"source", "n_extra", "40", Type::Int},
        {"source", "threshold", "1e6", Type::Real},
        {"expect", "min_suppression", "", Type::Real},
        {"expect", "r_star", "", Type::Real},
        {"expect", "bound_radius", "", Type::Real},
        {"expect", "radius_tol", "1e-5", Type::Real},
        {"expect", "dichotomy", "false", Type::Bool},
    });
    return keys;
  }

  if (command == "field-grid") {
    add(medium_keys("5"));
    add(shell);
    add({
        {"sweep", "n0", "50", Type::Int},
        {"sweep", "p2", "", Type::Real},
        {"sweep", "p_lo", "-0.5", Type::Real},
        {"sweep", "p_hi", "-1e-3", Type::Real},
        {"source", "r0", "1.05", Type::Real},
        {"source", "n_min", "1", Type::Int},
        {"source", "n_extra", "40", Type::Int},
        {"grid", "extent", "2", Type::Real},
        {"grid", "points", "41", Type::Int},
        {"grid", "sphere_radius", "1.6", Type::Real},
        {"grid", "sphere_points", "200", Type::Int},
    });
    return keys;
  }

  throw ConfigError("unknown command '" + command + "'");
}

void check_value(const KeySpec& k, const std::string& v) {
  const std::string where = "[" + k.section + "] " + k.key + " = '" + v + "'";
  try {
    switch (k.type) {
      case Type::Real:
        parse_real(v);
        break;
      case Type::Complex:
        parse_complex(v);
        break;
      case Type::Int: {
        std::size_t pos = 0;
        (void)std::stoi(v, &pos);
        if (pos != v.size()) throw ConfigError("trailing characters");
        break;
      }
      case Type::U64: {
        if (!v.empty() && v[0] == '-') throw ConfigError("negative");
        std::size_t pos = 0;
        (void)std::stoull(v, &pos);
        if (pos != v.size()) throw ConfigError("trailing characters");
        break;
      }
      case Type::Bool:
        if (v != "true" && v != "false") throw ConfigError("expected true or false");
        break;
      case Type::RealList: {
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) parse_real(trim(item));
        break;
      }
      case Type::String:
        break;
    }
  } catch (const ConfigError& e) {
    throw ConfigError(where + ": " + e.what());
  } catch (const std::exception&) {
    throw ConfigError(where + ": malformed value");
  }
  if (!k.choices.empty() && std::find(k.choices.begin(), k.choices.end(), v) == k.choices.end()) {
    std::string all;
    for (const auto& c : k.choices) all += (all.empty() ? "" : ", ") + c;
    throw ConfigError(where + ": expected one of " + all);
  }
}

RawConfig from_json(const nlohmann::json& j0) {
  const nlohmann::json& j = j0.contains("config") ? j0.at("config") : j0;
  if (!j.is_object()) throw ConfigError("JSON config must be an object of sections");
  RawConfig raw;
  for (const auto& [section, body] : j.items()) {
    if (!body.is_object()) throw ConfigError("section '" + section + "' must be an object");
    for (const auto& [key, v] : body.items()) {
      if (v.is_string())
        raw[section][key] = v.get<std::string>();
      else if (v.is_number() || v.is_boolean())
        raw[section][key] = v.dump();
      else
        throw ConfigError("[" + section + "] " + key + ": scalar expected");
    }
  }
  return raw;
}

}  // namespace

double parse_real(const std::string& s0) {
  const std::string s = trim(s0);
  if (s.empty()) throw ConfigError("empty number");
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(s.c_str(), &end);
  if (end != s.c_str() + s.size() || errno == ERANGE || !std::isfinite(v))
    throw ConfigError("not a finite real number: '" + s + "'");
  return v;
}

// "a", "bi", "a+bi", "a-bi", "(a,b)"
std::complex<double> parse_complex(const std::string& s0) {
  const std::string s = trim(s0);
  if (s.size() > 2 && s.front() == '(' && s.back() == ')') {
    const auto comma = s.find(',');
    if (comma == std::string::npos) throw ConfigError("malformed complex '" + s + "'");
    return {parse_real(s.substr(1, comma - 1)), parse_real(s.substr(comma + 1, s.size() - comma - 2))};
  }
  if (s.empty()) throw ConfigError("empty number");
  if (s.back() != 'i') return {parse_real(s), 0.0};
  const std::string body = s.substr(0, s.size() - 1);
  // split at the last sign that is not an exponent sign or the leading sign
  std::size_t split = std::string::npos;
  for (std::size_t i = body.size(); i-- > 1;) {
    if ((body[i] == '+' || body[i] == '-') && body[i - 1] != 'e' && body[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  auto imag = [](const std::string& t) {
    if (t == "+" || t.empty()) return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t);
  };
  if (split == std::string::npos) return {0.0, imag(body)};
  return {parse_real(body.substr(0, split)), imag(body.substr(split))};
}

RawConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config '" + path + "'");
  if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
    try {
      return from_json(nlohmann::json::parse(in));
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("invalid JSON config: ") + e.what());
    }
  }
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(std::string("invalid config: ") + e.what());
  }
  RawConfig raw;
  for (const auto& [section, body] : tree) {
    if (body.empty()) throw ConfigError("key '" + section + "' outside a section");
    for (const auto& [key, v] : body) raw[section][key] = trim(v.data());
  }
  return raw;
}

const std::vector<std::string>& commands() {
  static const std::vector<std::string> c = {"np-spectrum", "resonance-sweep", "calr-design",
                                             "field-grid", "validate"};
  return c;
}

Resolved resolve(const std::string& command, const RawConfig& raw) {
  const auto keys = schema(command);
  for (const auto& [section, body] : raw) {
    for (const auto& [key, v] : body) {
      const bool known = std::any_of(keys.begin(), keys.end(), [&](const KeySpec& k) {
        return k.section == section && k.key == key;
      });
      if (!known)
        throw ConfigError("unknown key [" + section + "] " + key + " for command " + command);
    }
  }
  Resolved r;
  for (const auto& k : keys) {
    std::string v = k.def;
    if (auto s = raw.find(k.section); s != raw.end())
      if (auto it = s->second.find(k.key); it != s->second.end()) v = it->second;
    if (!v.empty()) check_value(k, v);
    r.entries_.push_back({k, v});
  }
  return r;
}

const Resolved::Entry& Resolved::find(const std::string& section, const std::string& key) const {
  for (const auto& e : entries_)
    if (e.spec.section == section && e.spec.key == key) return e;
  throw std::logic_error("config key not in schema: " + section + "." + key);
}

bool Resolved::has(const std::string& section, const std::string& key) const {
  return !find(section, key).value.empty();
}

namespace {
const std::string& required(const std::string& v, const std::string& section,
                            const std::string& key) {
  if (v.empty()) throw ConfigError("missing required key [" + section + "] " + key);
  return v;
}
}  // namespace

double Resolved::real(const std::string& section, const std::string& key) const {
  return parse_real(required(find(section, key).value, section, key));
}

std::complex<double> Resolved::cplx(const std::string& section, const std::string& key) const {
  return parse_complex(required(find(section, key).value, section, key));
}

int Resolved::integer(const std::string& section, const std::string& key) const {
  return std::stoi(required(find(section, key).value, section, key));
}

std::uint64_t Resolved::u64(const std::string& section, const std::string& key) const {
  return std::stoull(required(find(section, key).value, section, key));
}

bool Resolved::boolean(const std::string& section, const std::string& key) const {
  return required(find(section, key).value, section, key) == "true";
}

const std::string& Resolved::str(const std::string& section, const std::string& key) const {
  return find(section, key).value;
}

std::vector<double> Resolved::reals(const std::string& section, const std::string& key) const {
  std::vector<double> out;
  std::stringstream ss(find(section, key).value);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_real(trim(item)));
  return out;
}

void Resolved::set(const std::string& section, const std::string& key, const std::string& value) {
  for (auto& e : entries_) {
    if (e.spec.section == section && e.spec.key == key) {
      check_value(e.spec, value);
      e.value = value;
      return;
    }
  }
  throw std::logic_error("config key not in schema: " + section + "." + key);
}

nlohmann::ordered_json Resolved::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& e : entries_) j[e.spec.section][e.spec.key] = e.value;
  return j;
}

}  // namespace cli
