#pragma once

#include <cstddef>
#include <vector>

#include "toricmld/numeric.hpp"

namespace toricmld::detail {

struct ConeGenerators {
  std::vector<IntVector> rays;   ///< primitive, extreme modulo the lines
  std::vector<IntVector> lines;  ///< basis of the lineality space
};

/// Generators of {x in Q^dim : a.x >= 0 for a in inequalities, a.x = 0 for a in
/// equalities}, by the double description method.
ConeGenerators cone_generators(std::size_t dim, const std::vector<IntVector>& inequalities,
                               const std::vector<IntVector>& equalities);

}  // namespace toricmld::detail
