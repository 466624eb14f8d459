#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "toricmld/hyperplane_search.hpp"

namespace toricmld::harness {

struct GeneralEntry {
  Rational b;
  std::vector<IntVector> a;
};

/// Instance file contents, kept as written so that serialization round-trips.
struct Instance {
  std::string comment;
  std::size_t rank_n = 0;
  std::vector<IntVector> rays;
  std::vector<std::vector<std::size_t>> max_cones;
  std::vector<IntVector> pi;  ///< rows
  std::optional<std::vector<IntVector>> sigma_bar;
  std::map<std::size_t, Rational> b;
  std::vector<RatVector> bdiv_a;
  std::vector<GeneralEntry> general;

  ToricContraction contraction() const;
  GPair pair() const;
};

/// Throws Error(kParse) with "source:line:column" for syntax errors and the
/// JSON pointer of the offending field otherwise.
Instance parse_instance(const std::string& text, const std::string& source = "<input>");
Instance load_instance(const std::string& path);

/// Fixed key order, one top-level key per line, compact values.
std::string serialize_instance(const Instance& inst);

/// Certificate as JSON; the transcript is informational.
std::string serialize_certificate(const HyperplaneCertificate& cert);
HyperplaneCertificate parse_certificate(const std::string& text, const std::string& source = "<certificate>");

std::string read_file(const std::string& path);

}  // namespace toricmld::harness
