#pragma once

#include <vector>

#include "fenchel/linalg.hpp"

namespace fenchel {

// V-description of a cone {x : rows * x >= 0}: extreme rays modulo lineality,
// plus a basis of the lineality space.  Ray representatives live in the row
// space of the constraint matrix, so they are canonical.
struct ConeGenerators {
  std::vector<Vec> rays;
  std::vector<Vec> lineality;
};

// Double description method.  Exact; intended for desk-scale dimensions.
ConeGenerators dd_cone(int dim, const std::vector<Vec>& rows);

}  // namespace fenchel
