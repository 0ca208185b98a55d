#pragma once

#include "lie2/ratmat.hpp"

#include <string>
#include <vector>

namespace lie2 {

/// One failed instance of an identity: which family, at which basis indices.
struct Violation {
  std::string family;
  std::vector<Index> where;
  std::string detail;
};

using Report = std::vector<Violation>;

inline void append(Report& into, const Report& from) { into.insert(into.end(), from.begin(), from.end()); }

}  // namespace lie2
