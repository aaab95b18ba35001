#pragma once

// Toolkit limits, loadable from a key=value file:
//
//   # comment
//   grad_max_order = 12
//   separator_c1 = 4
//
// Unknown keys and non-positive limits are rejected.

#include <cstdlib>
#include <fstream>
#include <locale>
#include <sstream>
#include <string>
#include <vector>

#include "gradkit/error.hpp"

namespace gradkit {

struct Config {
  int grad_max_order = 12;    // grad oracle, r >= 1
  int grad_max_order_r0 = 16; // grad oracle, r = 0
  int treedepth_limit = 20;   // exact tree-depth, per component
  int certify_limit = 20;     // full p-centered check
  int pattern_max_order = 5;  // count / list patterns
  int default_k = 2;          // distance horizon when --k is absent
  double separator_c1 = 4.0;  // separator size bound constant
  int log_base = 2;           // logarithms are base 2; only 2 is accepted

  void set(const std::string &key, const std::string &value) {
    auto as_int = [&]() {
      std::size_t used = 0;
      long long x = 0;
      try {
        x = std::stoll(value, &used);
      } catch (const std::exception &) {
        used = 0;
      }
      if (used != value.size() || value.empty())
        throw InputError("config: '" + key + "' needs an integer, got '" +
                         value + "'");
      if (x < 1 || x > 1000000)
        throw DomainError("config: '" + key + "' must be a positive integer");
      return static_cast<int>(x);
    };
    if (key == "grad_max_order")
      grad_max_order = as_int();
    else if (key == "grad_max_order_r0")
      grad_max_order_r0 = as_int();
    else if (key == "treedepth_limit")
      treedepth_limit = as_int();
    else if (key == "certify_limit")
      certify_limit = as_int();
    else if (key == "pattern_max_order")
      pattern_max_order = as_int();
    else if (key == "default_k")
      default_k = as_int();
    else if (key == "log_base") {
      if (as_int() != 2)
        throw DomainError("config: log_base must be 2");
    } else if (key == "separator_c1") {
      std::istringstream is(value);
      is.imbue(std::locale::classic());
      double x;
      if (!(is >> x) || !(is >> std::ws).eof())
        throw InputError("config: 'separator_c1' needs a number, got '" +
                         value + "'");
      if (!(x > 0))
        throw DomainError("config: separator_c1 must be positive");
      separator_c1 = x;
    } else
      throw InputError("config: unknown key '" + key + "'");
  }

  // "key=value"
  void apply(const std::string &assignment) {
    auto eq = assignment.find('=');
    if (eq == std::string::npos)
      throw InputError("config: expected key=value, got '" + assignment + "'");
    set(trim(assignment.substr(0, eq)), trim(assignment.substr(eq + 1)));
  }

  void load(std::istream &in, const std::string &name = "config") {
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      auto hash = line.find('#');
      if (hash != std::string::npos)
        line.erase(hash);
      if (trim(line).empty())
        continue;
      try {
        apply(line);
      } catch (const InputError &e) {
        throw InputError(name + ":" + std::to_string(line_no) + ": " +
                         e.what());
      } catch (const DomainError &e) {
        throw DomainError(name + ":" + std::to_string(line_no) + ": " +
                          e.what());
      }
    }
  }

  void load_file(const std::string &path) {
    std::ifstream in(path);
    if (!in)
      throw InputError("cannot open config file '" + path + "'");
    load(in, path);
  }

  std::string str() const {
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << "grad_max_order = " << grad_max_order << '\n'
       << "grad_max_order_r0 = " << grad_max_order_r0 << '\n'
       << "treedepth_limit = " << treedepth_limit << '\n'
       << "certify_limit = " << certify_limit << '\n'
       << "pattern_max_order = " << pattern_max_order << '\n'
       << "default_k = " << default_k << '\n'
       << "separator_c1 = " << separator_c1 << '\n'
       << "log_base = " << log_base << '\n';
    return os.str();
  }

private:
  static std::string trim(const std::string &s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
      return {};
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  }
};

// Defaults, then the file named by `path` or else by GRADKIT_CONFIG, then
// the overrides in order.
inline Config load_config(const std::string &path,
                          const std::vector<std::string> &overrides = {}) {
  Config c;
  std::string file = path;
  if (file.empty())
    if (const char *env = std::getenv("GRADKIT_CONFIG"))
      file = env;
  if (!file.empty())
    c.load_file(file);
  for (const auto &o : overrides)
    c.apply(o);
  return c;
}

} // namespace gradkit
