#include "q3c/config.hpp"

#include <fstream>
#include <sstream>

#include "q3c/errors.hpp"

namespace q3c {

namespace {

long parse_positive_long(const std::string& key, const std::string& value) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    throw domain_error("config " + key + ": not an integer: " + value);
  }
  if (used != value.size())
    throw domain_error("config " + key + ": not an integer: " + value);
  if (v <= 0) throw domain_error("config " + key + ": must be positive");
  return v;
}

std::uint64_t parse_positive_u64(const std::string& key,
                                 const std::string& value) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(value, &used);
  } catch (const std::exception&) {
    throw domain_error("config " + key + ": not an integer: " + value);
  }
  if (used != value.size())
    throw domain_error("config " + key + ": not an integer: " + value);
  if (v == 0) throw domain_error("config " + key + ": must be positive");
  return v;
}

}  // namespace

void apply_config_kv(RunConfig& cfg, const std::string& key,
                     const std::string& value) {
  if (key == "window") {
    cfg.window = parse_positive_long(key, value);
  } else if (key == "k_assoc") {
    cfg.k_assoc = parse_positive_long(key, value);
  } else if (key == "box") {
    try {
      cfg.box = big_from(value);
    } catch (const std::invalid_argument&) {
      throw domain_error("config box: not an integer: " + value);
    }
    if (cfg.box < 0) throw domain_error("config box: must be nonnegative");
  } else if (key == "solver") {
    if (value != "factor" && value != "box")
      throw domain_error("config solver: expected factor or box");
    cfg.solver = value;
  } else if (key == "mt_prime_limit") {
    cfg.mt_prime_limit = parse_positive_u64(key, value);
  } else if (key == "rho_budget") {
    cfg.rho_budget = parse_positive_u64(key, value);
  } else if (key == "max_vertices") {
    cfg.max_vertices = static_cast<std::size_t>(parse_positive_u64(key, value));
  } else if (key == "max_bits") {
    cfg.max_bits = static_cast<unsigned>(parse_positive_u64(key, value));
  } else if (key == "scan_kmax") {
    cfg.scan_kmax = parse_positive_u64(key, value);
  } else if (key == "n_max") {
    cfg.n_max = parse_positive_u64(key, value);
  } else if (key == "format") {
    if (value != "json" && value != "dot")
      throw domain_error("config format: expected json or dot");
    cfg.format = value;
  } else if (key == "parallelism") {
    // 0 = hardware default, so plain nonnegative here.
    std::size_t used = 0;
    unsigned long v = 0;
    try {
      v = std::stoul(value, &used);
    } catch (const std::exception&) {
      throw domain_error("config parallelism: not an integer: " + value);
    }
    if (used != value.size())
      throw domain_error("config parallelism: not an integer: " + value);
    cfg.parallelism = static_cast<unsigned>(v);
  } else {
    throw domain_error("config: unknown key: " + key);
  }
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw domain_error("config file not found: " + path);
  RunConfig cfg;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    // Strip comments and surrounding whitespace.
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto strip = [](std::string s) {
      const char* ws = " \t\r\n";
      auto b = s.find_first_not_of(ws);
      if (b == std::string::npos) return std::string();
      auto e = s.find_last_not_of(ws);
      return s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw domain_error("config file " + path + ":" + std::to_string(lineno) +
                         ": expected key=value");
    apply_config_kv(cfg, strip(line.substr(0, eq)), strip(line.substr(eq + 1)));
  }
  return cfg;
}

std::string config_to_string(const RunConfig& cfg) {
  std::ostringstream os;
  os << "window=" << cfg.window << "\n"
     << "k_assoc=" << cfg.k_assoc << "\n"
     << "box=" << to_dec(cfg.box) << "\n"
     << "solver=" << cfg.solver << "\n"
     << "mt_prime_limit=" << cfg.mt_prime_limit << "\n"
     << "rho_budget=" << cfg.rho_budget << "\n"
     << "max_vertices=" << cfg.max_vertices << "\n"
     << "max_bits=" << cfg.max_bits << "\n"
     << "scan_kmax=" << cfg.scan_kmax << "\n"
     << "n_max=" << cfg.n_max << "\n"
     << "format=" << cfg.format << "\n"
     << "parallelism=" << cfg.parallelism << "\n";
  return os.str();
}

}  // namespace q3c
