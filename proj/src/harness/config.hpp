// Runtime options shared by the C API and the CLI; a plain "key = value"
// config file may set defaults, flags override.
#pragma once

#include <optional>
#include <string>

namespace edsp {

struct Options {
  long precision = 128;          // mantissa bits for heights/criteria
  std::string cache_dir;         // empty = no on-disk cache
  int threads = 1;
  unsigned long trial_bound = 1'000'000;  // witness-prime trial division
};

// Parses "key = value" lines; '#' starts a comment. Unknown keys error.
Options load_config_file(const std::string& path);
// Applies the file at `path` if it exists, else returns defaults.
Options load_config_if_present(const std::string& path);

}  // namespace edsp
