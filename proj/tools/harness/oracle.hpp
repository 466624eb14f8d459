#pragma once

#include "instance.hpp"

namespace toricmld::harness {

struct OracleResult {
  bool found = false;  ///< some candidate point exists in the box
  Rational value;      ///< least log discrepancy among candidates
  IntVector point;     ///< lexicographically first attaining point
  std::size_t candidates = 0;
};

/// Minimum of the log discrepancy over primitive points of [-radius, radius]^n
/// mapping into the interior of the base cone. An upper bound for the mld,
/// exact once the radius is large enough.
OracleResult oracle_mld(const ToricContraction& tc, const GPair& pair, long radius);

}  // namespace toricmld::harness
