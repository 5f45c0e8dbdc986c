#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "barysimplex/cli/json_io.hpp"

namespace barysimplex::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;  // report written, some check failed
inline constexpr int kExitBadInput = 2;     // parse, validation, usage or I/O error

// Values given on the command line; each replaces the matching field of the input document.
struct InlineFlags {
  std::optional<std::string> p;  // comma-separated fractions
  std::optional<std::string> q;
  std::optional<std::string> family;
  std::optional<std::string> base;
  std::optional<std::string> map;
  std::optional<std::string> vertex;
  std::optional<std::size_t> z_grid;
  std::optional<std::size_t> x_grid;
  std::optional<std::size_t> cap;
  std::optional<std::string> permutation;  // comma-separated, 1-based
  bool chain = false;
};

Json merge_flags(Json doc, const InlineFlags& flags);

// Full command-line entry point; argv[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace barysimplex::cli
