#include "harness/config.hpp"

#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace edsp {

namespace {

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r");
  size_t e = s.find_last_not_of(" \t\r");
  if (b == std::string::npos) return "";
  return s.substr(b, e - b + 1);
}

}  // namespace

Options load_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("config: cannot open " + path);
  Options opt;
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::runtime_error("config: missing '=' at line " + std::to_string(lineno));
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (key == "precision") opt.precision = std::stol(val);
    else if (key == "cache") opt.cache_dir = val;
    else if (key == "threads") opt.threads = std::stoi(val);
    else if (key == "trial-bound") opt.trial_bound = std::stoul(val);
    else throw std::runtime_error("config: unknown key '" + key + "'");
  }
  return opt;
}

Options load_config_if_present(const std::string& path) {
  if (!path.empty() && std::filesystem::exists(path)) return load_config_file(path);
  return Options{};
}

}  // namespace edsp
