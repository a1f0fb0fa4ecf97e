#include "harness/cache.hpp"

#include <fstream>
#include <unistd.h>

namespace edsp {

PolyCache::PolyCache(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path PolyCache::path_for(const std::string& key) const {
  std::string name = key;
  for (auto& ch : name)
    if (ch == ' ') ch = '_';
  for (auto& ch : name)
    if (ch == '-') ch = 'm';
  return dir_ / (name + ".txt");
}

void PolyCache::write_file(const std::string& key, int degree,
                           const std::vector<Int>& coeffs) const {
  auto final_path = path_for(key);
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream os(tmp);
    os << "edsprimcache 1\n" << key << "\ndegree " << degree << "\n";
    for (const auto& c : coeffs) os << c.get_str() << "\n";
  }
  std::filesystem::rename(tmp, final_path);
}

std::optional<std::vector<Int>> PolyCache::read_file(const std::string& key,
                                                     int* degree) const {
  std::ifstream is(path_for(key));
  if (!is) return std::nullopt;
  std::string magic, ver, stored_key, dlabel;
  if (!(is >> magic >> ver)) return std::nullopt;
  if (magic != "edsprimcache" || ver != "1") return std::nullopt;
  is.ignore();
  if (!std::getline(is, stored_key) || stored_key != key) return std::nullopt;
  int d;
  if (!(is >> dlabel >> d) || dlabel != "degree") return std::nullopt;
  std::vector<Int> coeffs;
  std::string line;
  while (is >> line) coeffs.push_back(Int(line));
  *degree = d;
  return coeffs;
}

std::optional<IntPoly> PolyCache::load_intpoly(const std::string& key) const {
  int d = 0;
  auto c = read_file(key, &d);
  if (!c) return std::nullopt;
  return IntPoly(std::move(*c));
}

std::optional<HomogPoly> PolyCache::load_homog(const std::string& key) const {
  int d = 0;
  auto c = read_file(key, &d);
  if (!c) return std::nullopt;
  if (static_cast<int>(c->size()) != d + 1) return std::nullopt;
  return HomogPoly(d, std::move(*c));
}

void PolyCache::store(const std::string& key, const IntPoly& p) const {
  write_file(key, p.degree(), p.coeffs());
}

void PolyCache::store(const std::string& key, const HomogPoly& p) const {
  write_file(key, p.degree(), p.coeffs());
}

}  // namespace edsp
