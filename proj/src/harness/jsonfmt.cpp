#include "harness/jsonfmt.hpp"

namespace edsp {

std::string dump_sorted(const Json& j) { return j.dump(); }

}  // namespace edsp
