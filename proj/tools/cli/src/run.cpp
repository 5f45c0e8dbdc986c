#include "barysimplex/cli/run.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "barysimplex/cli/commands.hpp"
#include "barysimplex/error.hpp"

namespace barysimplex::cli {
namespace {

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> items;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) items.push_back(item);
  if (!text.empty() && text.back() == ',') items.emplace_back();
  return items;
}

Json read_input_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read input '" + path + "'");
  std::ostringstream text;
  text << in.rdbuf();
  try {
    return read_document(text.str());
  } catch (const Error& e) {
    throw Error(e.code(), path + ": " + e.detail());
  }
}

void print_error(std::ostream& err, const std::string& code, const std::string& message) {
  Json doc{{"schema", kSchema}, {"error", code}, {"message", message}};
  err << doc.dump(2) << '\n';
}

}  // namespace

Json merge_flags(Json doc, const InlineFlags& f) {
  if (doc.is_null()) doc = Json::object();
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "input: expected a JSON object");
  if (f.p) doc["p"] = split_list(*f.p);
  if (f.q) doc["q"] = split_list(*f.q);
  Json& o = doc["options"];
  if (o.is_null()) o = Json::object();
  if (!o.is_object()) throw Error(ErrorCode::ParseError, "options: expected an object");
  if (f.family) o["family"] = *f.family;
  if (f.base) o["base"] = *f.base;
  if (f.map) o["map"] = *f.map;
  if (f.vertex) o["vertex"] = *f.vertex;
  if (f.z_grid) o["z_grid"] = *f.z_grid;
  if (f.x_grid) o["x_grid"] = *f.x_grid;
  if (f.cap) o["cap"] = *f.cap;
  if (f.chain) o["chain"] = true;
  if (f.permutation) {
    Json image = Json::array();
    for (const auto& s : split_list(*f.permutation)) {
      std::size_t used = 0;
      unsigned long v = 0;
      try {
        v = std::stoul(s, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != s.size()) {
        throw Error(ErrorCode::ParseError, "--permutation: '" + s + "' is not an index");
      }
      image.push_back(v);
    }
    o["permutation"] = std::move(image);
  }
  if (o.empty()) doc.erase("options");
  return doc;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form trace maximization over stochastic matrices with a prescribed barycenter"};
  app.require_subcommand(1);

  std::optional<std::string> input;
  std::optional<std::string> output;
  std::string format = "json";
  InlineFlags flags;

  using Command = std::function<Output(const ProblemInput&)>;
  const std::map<std::string, std::pair<std::string, Command>> commands{
      {"solve", {"Closed form, inverse, dual, uniqueness and KKT certificate", cmd_solve}},
      {"perm", {"Permutation-relaxed problem", cmd_perm}},
      {"oracle", {"Exact simplex on the primal and dual LPs", cmd_oracle}},
      {"synth", {"Coherent conditional CDF synthesis", cmd_synth}},
  };
  for (const auto& [name, entry] : commands) {
    CLI::App* sub = app.add_subcommand(name, entry.first);
    sub->add_option("--input", input, "JSON document {\"p\": [...], \"q\": [...], \"options\": {...}}");
    sub->add_option("--output", output, "Output file (directory for synth csv)");
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--p", flags.p, "Comma-separated fractions for p");
    sub->add_option("--q", flags.q, "Comma-separated fractions for q");
    sub->add_option("--family", flags.family, "uniform | beta");
    sub->add_option("--base", flags.base, "normal | empirical:<path>");
    sub->add_option("--map", flags.map, "bar | hat | identity");
    sub->add_option("--vertex", flags.vertex, "closed_form | witness");
    sub->add_option("--z-grid", flags.z_grid, "Points on the z grid");
    sub->add_option("--x-grid", flags.x_grid, "Points on the x grid");
    sub->add_option("--cap", flags.cap, "Largest n accepted by oracle");
    sub->add_option("--permutation", flags.permutation, "Comma-separated 1-based image of M");
    sub->add_flag("--chain", flags.chain, "Map the equal-weight family onto p first");
  }

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    print_error(err, "UsageError", e.what());
    return kExitBadInput;
  }

  const std::string name = app.get_subcommands().front()->get_name();
  try {
    Json doc = input ? read_input_file(*input) : Json::object();
    const ProblemInput problem = parse_input(merge_flags(std::move(doc), flags));
    const Output result = commands.at(name).second(problem);
    std::optional<std::filesystem::path> path;
    if (output) path = *output;
    write_output(result, format == "csv" ? Format::csv : Format::json, path, out);
    return result.ok ? kExitOk : kExitCheckFailed;
  } catch (const Error& e) {
    print_error(err, std::string(to_string(e.code())), e.detail());
    return kExitBadInput;
  } catch (const std::exception& e) {
    print_error(err, "Internal", e.what());
    return kExitBadInput;
  }
}

}  // namespace barysimplex::cli
