// On-disk polynomial cache: one file per key, text format, atomic writes via
// temp-file rename so concurrent CLI invocations are safe.
//
// File layout (decimal, coefficients little-endian by degree):
//   edsprimcache 1
//   <KEY>
//   degree <D>
//   c_0
//   ...
//   c_D
#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "divpoly/divpoly.hpp"

namespace edsp {

class PolyCache {
 public:
  explicit PolyCache(std::filesystem::path dir);

  // keys: "PSI <n> <a>", "GRADED <n>", "PSI_QUOTIENT <n>"
  std::optional<IntPoly> load_intpoly(const std::string& key) const;
  std::optional<HomogPoly> load_homog(const std::string& key) const;
  void store(const std::string& key, const IntPoly& p) const;
  void store(const std::string& key, const HomogPoly& p) const;

  const std::filesystem::path& dir() const { return dir_; }

 private:
  std::filesystem::path path_for(const std::string& key) const;
  void write_file(const std::string& key, int degree,
                  const std::vector<Int>& coeffs) const;
  std::optional<std::vector<Int>> read_file(const std::string& key, int* degree) const;

  std::filesystem::path dir_;
};

}  // namespace edsp
