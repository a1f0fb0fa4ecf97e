// Curve/point fixtures with expected facts and source notes. The shipped
// data/fixtures.txt is the serialized form of the built-in table; each fact
// is either checked in-repo by the verification suite or marked
// unverified-in-repo (database-sourced rank facts).
#pragma once

#include <map>
#include <string>
#include <vector>

#include "curve/curve.hpp"

namespace edsp {

struct Fixture {
  std::string name;
  Int a1, a2, a3, a4, a6;        // a4 = a for short-form fixtures
  bool short_form = true;
  std::optional<std::pair<Rat, Rat>> point;  // generator / study point, y > 0 canonical
  std::map<std::string, std::string> facts;
  std::string citation;

  Curve curve() const {
    return short_form ? Curve::short_form(a4) : Curve(a1, a2, a3, a4, a6);
  }
  CurvePoint curve_point() const {
    if (!point) throw std::logic_error("fixture has no point: " + name);
    return CurvePoint(point->first, point->second);
  }
};

// Built-in table (source of truth; data/fixtures.txt mirrors it).
const std::vector<Fixture>& fixtures();
const Fixture& fixture(const std::string& name);

// Parse the text form: blocks separated by blank lines, lines "key: value";
// keys: name, curve (a1 a2 a3 a4 a6 | "short <a>"), point ("x y"), fact
// (repeatable, "key = value"), cite.
std::vector<Fixture> parse_fixtures_text(const std::string& text);
std::vector<Fixture> load_fixtures_file(const std::string& path);

// Serialized text of the built-in table (what data/fixtures.txt contains).
std::string fixtures_text();

}  // namespace edsp
