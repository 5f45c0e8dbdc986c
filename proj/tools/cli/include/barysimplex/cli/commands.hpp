#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "barysimplex/cdf_synth.hpp"
#include "barysimplex/cli/json_io.hpp"
#include "barysimplex/stochastic.hpp"

namespace barysimplex::cli {

enum class Format { json, csv };

struct Options {
  std::string family = "uniform";  // uniform | beta
  std::string base = "normal";     // normal | empirical:<path>
  std::string map = "bar";         // bar | hat | identity
  std::size_t z_grid = kDefaultZGrid;
  std::size_t x_grid = 513;
  std::size_t cap = 8;
  // Map the equal-weight family onto p first, so any p can serve as source.
  bool chain = false;
  // 0-based image of M̂ for perm and map = hat; validated against optimality.
  std::optional<std::vector<std::size_t>> permutation;
  std::string vertex = "closed_form";  // closed_form | witness
};

struct ProblemInput {
  StochasticVector p;
  StochasticVector q;
  Options options;
};

// Document shape: {"p": [...], "q": [...], "options": {...}}. Permutations are
// written 1-based in JSON.
ProblemInput parse_input(const Json& doc);
// Parses text; JSON syntax errors report line and column.
Json read_document(const std::string& text);

struct Output {
  Json report;
  bool ok = false;
  // Named tables, written as CSV files when the format is csv.
  std::vector<std::pair<std::string, GridTable>> tables;
};

Output cmd_solve(const ProblemInput& input);
Output cmd_perm(const ProblemInput& input);
Output cmd_oracle(const ProblemInput& input);
Output cmd_synth(const ProblemInput& input);

// json: the report (tables embedded) to `out` or the file at `path`.
// csv: solve/perm/oracle emit a long-form "section,row,col,value" listing;
// synth requires `path` to be a directory and writes one CSV per table plus
// report.json.
void write_output(const Output& output, Format format, const std::optional<std::filesystem::path>& path,
                  std::ostream& out);

// Long-form CSV of every fraction in the report.
std::string report_csv(const Json& report);

}  // namespace barysimplex::cli
