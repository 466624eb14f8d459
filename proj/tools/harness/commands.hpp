#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "instance.hpp"

namespace toricmld::harness {

enum ExitCode : int { kOk = 0, kNegative = 1, kInvalidInput = 2 };

struct CommandOptions {
  std::string instance;
  std::string certificate;
  std::optional<std::uint64_t> seed;  ///< generated instance instead of a file
  bool json = false;
  long box = 0;
  std::string phibar;  ///< comma separated integers
  std::string out;
  std::size_t dim = 0;
  std::string mld;
};

int exit_code_for(ErrorCode code);

/// Each command writes its result to out and diagnostics to err, and returns
/// the process exit code.
int cmd_check(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_mld(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_lc(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_lct(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_find(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_verify(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_oracle_mld(const CommandOptions& opt, std::ostream& out, std::ostream& err);
int cmd_gamma(const CommandOptions& opt, std::ostream& out, std::ostream& err);

IntVector parse_int_list(const std::string& text);

}  // namespace toricmld::harness
