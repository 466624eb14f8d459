#pragma once

#include <cstdint>

#include "instance.hpp"

namespace toricmld::harness {

/// Random germ of rank <= 3 satisfying the search hypotheses: valid
/// contraction, relatively nef, g-lc, positive mld over the fibre. The same
/// seed always yields the same instance.
Instance generate_instance(std::uint64_t seed);

}  // namespace toricmld::harness
