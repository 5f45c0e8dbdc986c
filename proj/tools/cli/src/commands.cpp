#include "barysimplex/cli/commands.hpp"

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "barysimplex/closed_form.hpp"
#include "barysimplex/error.hpp"
#include "barysimplex/kkt.hpp"
#include "barysimplex/lp_oracle.hpp"
#include "barysimplex/permutation_opt.hpp"

namespace barysimplex::cli {
namespace {

namespace fs = std::filesystem;

[[noreturn]] void option_error(const std::string& key, const std::string& what) {
  throw Error(ErrorCode::ParseError, "options." + key + ": " + what);
}

std::string get_string(const Json& v, const std::string& key) {
  if (!v.is_string()) option_error(key, "expected a string");
  return v.get<std::string>();
}

std::size_t get_count(const Json& v, const std::string& key) {
  if (!v.is_number_unsigned() || v.get<std::size_t>() == 0) option_error(key, "expected a positive integer");
  return v.get<std::size_t>();
}

void require_one_of(const std::string& value, std::initializer_list<const char*> allowed, const std::string& key) {
  for (const char* a : allowed)
    if (value == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : ", ") + std::string(a);
  option_error(key, "'" + value + "' is not one of " + list);
}

StochasticVector parse_weights(const Json& doc, const char* field) {
  if (!doc.contains(field)) throw Error(ErrorCode::ParseError, std::string(field) + ": missing");
  Vector raw = parse_fraction_array(doc.at(field), field);
  try {
    return StochasticVector::validate(std::move(raw));
  } catch (const Error& e) {
    throw Error(e.code(), std::string(field) + ": " + e.detail());
  }
}

Options parse_options(const Json& v) {
  Options o;
  if (v.is_null()) return o;
  if (!v.is_object()) throw Error(ErrorCode::ParseError, "options: expected an object");
  for (const auto& [key, value] : v.items()) {
    if (key == "family") {
      o.family = get_string(value, key);
      require_one_of(o.family, {"uniform", "beta"}, key);
    } else if (key == "base") {
      o.base = get_string(value, key);
      if (o.base != "normal" && (o.base.rfind("empirical:", 0) != 0 || o.base.size() == 10)) {
        option_error(key, "'" + o.base + "' is not 'normal' or 'empirical:<path>'");
      }
    } else if (key == "map") {
      o.map = get_string(value, key);
      require_one_of(o.map, {"bar", "hat", "identity"}, key);
    } else if (key == "vertex") {
      o.vertex = get_string(value, key);
      require_one_of(o.vertex, {"closed_form", "witness"}, key);
    } else if (key == "z_grid") {
      o.z_grid = get_count(value, key);
      if (o.z_grid < 2) option_error(key, "needs at least 2 points");
    } else if (key == "x_grid") {
      o.x_grid = get_count(value, key);
      if (o.x_grid < 2) option_error(key, "needs at least 2 points");
    } else if (key == "cap") {
      o.cap = get_count(value, key);
    } else if (key == "chain") {
      if (!value.is_boolean()) option_error(key, "expected true or false");
      o.chain = value.get<bool>();
    } else if (key == "permutation") {
      if (!value.is_array()) option_error(key, "expected an array of 1-based indices");
      std::vector<std::size_t> image;
      for (const auto& x : value) {
        if (!x.is_number_unsigned() || x.get<std::size_t>() == 0) option_error(key, "expected 1-based indices");
        image.push_back(x.get<std::size_t>() - 1);
      }
      o.permutation = std::move(image);
    } else {
      option_error(key, "unknown option");
    }
  }
  return o;
}

Json partition_json(const IndexPartition& part) {
  return Json{{"greater", one_based(part.greater)},
              {"equal", one_based(part.equal)},
              {"less", one_based(part.less)}};
}

Json index_or_null(std::size_t i) { return i == kNoIndex ? Json(nullptr) : Json(i + 1); }

Json certificate_json(const KktCertificate& c) {
  Json violations = Json::array();
  for (const auto& v : c.violations) {
    violations.push_back(Json{{"condition", std::string(to_string(v.condition))},
                              {"row", index_or_null(v.row)},
                              {"col", index_or_null(v.col)},
                              {"residual", to_json(v.residual)}});
  }
  return Json{{"all_pass", c.all_pass()},
              {"stationarity", c.stationarity},
              {"barycenter", c.barycenter},
              {"row_sums", c.row_sums},
              {"primal_nonnegative", c.primal_nonnegative},
              {"dual_feasible", c.dual_feasible},
              {"complementary_slack", c.complementary_slack},
              {"strong_duality", c.strong_duality},
              {"violations", std::move(violations)}};
}

Json header(const char* command, const ProblemInput& in) {
  return Json{{"schema", kSchema},
              {"command", command},
              {"n", in.p.size()},
              {"p", to_json(in.p.entries())},
              {"q", to_json(in.q.entries())}};
}

Json vertices_json(const StochasticMatrix& u) {
  Json out = Json::array();
  for (const auto& v : simplex_vertices(u)) out.push_back(to_json(v));
  return out;
}

PermOptions perm_options(const Options& o) {
  PermOptions po;
  if (o.permutation) po.permutation = Permutation::from_mapping(*o.permutation);
  po.vertex = o.vertex == "witness" ? FaceVertex::witness : FaceVertex::closed_form;
  return po;
}

Json coherence_json(const CoherenceReport& r) {
  Json mono = Json::array();
  for (const auto& v : r.monotonicity_violations) {
    mono.push_back(Json{{"member", v.member + 1}, {"z_from", v.z_from}, {"z_to", v.z_to}, {"drop", v.drop}});
  }
  Json ends = Json::array();
  for (const auto& v : r.endpoint_violations) {
    ends.push_back(Json{{"member", v.member + 1}, {"z", v.z}, {"value", v.value}});
  }
  return Json{{"pass", r.pass()},
              {"max_residual", r.max_residual},
              {"tolerance", r.tolerance},
              {"grid_size", r.grid_size},
              {"monotonicity_violations", std::move(mono)},
              {"endpoint_violations", std::move(ends)}};
}

BaseCdf load_base(const std::string& spec) {
  if (spec == "normal") return BaseCdf::standard_normal();
  const std::string path = spec.substr(std::string("empirical:").size());
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::InvalidArgument, "cannot read empirical samples from '" + path + "'");
  std::vector<double> samples;
  std::string line;
  for (std::size_t line_no = 1; std::getline(in, line); ++line_no) {
    std::replace(line.begin(), line.end(), ',', ' ');
    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size()) {
        throw Error(ErrorCode::ParseError,
                    path + ": line " + std::to_string(line_no) + ": '" + token + "' is not a number");
      }
      samples.push_back(value);
    }
  }
  return BaseCdf::empirical(std::move(samples));
}

Json table_json(const GridTable& t) { return Json{{"columns", t.columns}, {"rows", t.rows}}; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

std::string scalar_text(const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void flatten(const Json& v, const std::string& path, std::ostream& out) {
  auto emit = [&](const std::string& row, const std::string& col, const Json& x) {
    out << csv_field(path) << ',' << row << ',' << col << ',' << csv_field(scalar_text(x)) << '\n';
  };
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      const Json& item = v[i];
      if (item.is_array() && std::none_of(item.begin(), item.end(), [](const Json& x) { return x.is_structured(); })) {
        for (std::size_t j = 0; j < item.size(); ++j) emit(std::to_string(i + 1), std::to_string(j + 1), item[j]);
      } else if (item.is_structured()) {
        flatten(item, path + "[" + std::to_string(i + 1) + "]", out);
      } else {
        emit(std::to_string(i + 1), "", item);
      }
    }
  } else {
    emit("", "", v);
  }
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path.string() + "'");
  f << content;
  if (!f) throw Error(ErrorCode::InvalidArgument, "write to '" + path.string() + "' failed");
}

}  // namespace

Json read_document(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ProblemInput parse_input(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorCode::ParseError, "input: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    if (key != "p" && key != "q" && key != "options") {
      throw Error(ErrorCode::ParseError, key + ": unknown field");
    }
  }
  ProblemInput in{parse_weights(doc, "p"), parse_weights(doc, "q"),
                  parse_options(doc.contains("options") ? doc.at("options") : Json())};
  require_same_size(in.p, in.q);
  if (in.options.permutation && in.options.permutation->size() != in.p.size()) {
    option_error("permutation", "has " + std::to_string(in.options.permutation->size()) + " entries, expected " +
                                    std::to_string(in.p.size()));
  }
  return in;
}

Output cmd_solve(const ProblemInput& in) {
  const auto& p = in.p;
  const auto& q = in.q;
  const auto u = build_optimal_primal(p, q);
  const Matrix v = build_inverse(p, q);
  const auto dual = build_dual(p, q);
  const Vector eig_u = eigenvalues(p, q, WhichMatrix::primal);
  const Vector eig_v = eigenvalues(p, q, WhichMatrix::inverse);
  const bool char_u = characteristic_identity_holds(u.matrix(), eig_u);
  const bool char_v = characteristic_identity_holds(v, eig_v);
  const auto cls = classify(p, q);
  const auto uniq = uniqueness(p, q);
  const auto cert = certify(u, dual, p, q);
  const Rational tr = trace(u.matrix());

  Output out;
  Json& r = out.report;
  r = header("solve", in);
  r["u_bar"] = to_json(u.matrix());
  r["trace"] = to_json(tr);
  r["absdet"] = to_json(determinant(u.matrix()).abs());
  r["v_bar"] = to_json(v);
  r["dual"] = Json{{"alpha", to_json(dual.alpha)},
                   {"beta", to_json(dual.beta)},
                   {"gamma", to_json(dual.gamma)},
                   {"objective", to_json(dual.objective)}};
  r["eigenvalues"] = Json{{"u_bar", to_json(eig_u)},
                          {"v_bar", to_json(eig_v)},
                          {"characteristic_identity", char_u && char_v}};
  r["classification"] = Json{{"all_pass", cls.all_pass()},
                             {"inverse_pair", cls.inverse_pair},
                             {"z_matrix", cls.z_matrix},
                             {"m_matrix", cls.m_matrix},
                             {"inverse_m_matrix", cls.inverse_m},
                             {"max_offdiag_v_bar", to_json(cls.max_offdiag_inverse)},
                             {"det_v_bar", to_json(cls.det_inverse)},
                             {"min_entry_u_bar", to_json(cls.min_entry_primal)}};
  bool witness_ok = true;
  Json uj = Json{{"unique", uniq.unique}, {"partition", partition_json(uniq.partition)}};
  if (uniq.witness) {
    const auto& w = *uniq.witness;
    const Rational alt_trace = trace(w.alternate.matrix());
    const bool feasible = is_member(w.alternate, p, q);
    witness_ok = feasible && alt_trace == tr && w.alternate != u;
    uj["witness"] = Json{{"rows", one_based({w.row_a, w.row_b})},
                         {"cols", one_based({w.col_a, w.col_b})},
                         {"direction", to_json(w.direction)},
                         {"step", to_json(w.step)},
                         {"alternate", to_json(w.alternate.matrix())},
                         {"trace", to_json(alt_trace)},
                         {"feasible", feasible},
                         {"trace_equal", alt_trace == tr}};
  }
  r["uniqueness"] = std::move(uj);
  r["certificate"] = certificate_json(cert);
  out.ok = cert.all_pass() && cls.all_pass() && char_u && char_v && witness_ok;
  r["ok"] = out.ok;
  return out;
}

Output cmd_perm(const ProblemInput& in) {
  const auto& p = in.p;
  const auto& q = in.q;
  const auto res = solve_p_perm(p, q, perm_options(in.options));
  const auto ubar = build_optimal_primal(p, q);
  const bool feasible = is_member(res.u_hat, p, q);
  const bool dominance = res.trace_perm >= res.trace_base;
  const bool identity = trace(mat_mul(res.m_hat.matrix(), res.u_hat.matrix())) == res.trace_perm;

  Output out;
  Json& r = out.report;
  r = header("perm", in);
  r["sigma"] = one_based(res.m_hat.mapping());
  r["m_hat"] = to_json(res.m_hat.matrix());
  r["u_hat"] = to_json(res.u_hat.matrix());
  r["u_bar"] = to_json(ubar.matrix());
  r["trace_perm"] = to_json(res.trace_perm);
  r["trace_base"] = to_json(res.trace_base);
  r["absdet_perm"] = to_json(res.absdet_perm);
  r["absdet_base"] = to_json(res.absdet_base);
  r["vertices"] = Json{{"u_hat", vertices_json(res.u_hat)}, {"u_bar", vertices_json(ubar)}};
  r["checks"] = Json{{"u_hat_feasible", feasible}, {"relaxation_dominance", dominance}, {"trace_identity", identity}};
  out.ok = feasible && dominance && identity;
  r["ok"] = out.ok;
  return out;
}

Output cmd_oracle(const ProblemInput& in) {
  const auto& p = in.p;
  const auto& q = in.q;
  const std::size_t n = p.size();
  if (n > in.options.cap) {
    throw Error(ErrorCode::InvalidArgument,
                "n = " + std::to_string(n) + " exceeds the oracle cap of " + std::to_string(in.options.cap));
  }
  const auto ubar = build_optimal_primal(p, q);
  const Rational closed = trace(ubar.matrix());
  const auto primal = solve(encode_primal(p, q));
  const auto dual = solve_dual(p, q);
  const bool both_optimal = primal.status == LpStatus::optimal && dual.status == LpStatus::optimal;

  Output out;
  Json& r = out.report;
  r = header("oracle", in);
  Json pj{{"status", std::string(to_string(primal.status))},
          {"value", to_json(primal.value)},
          {"phase_one_value", to_json(primal.phase_one_value)},
          {"pivots", primal.pivots}};
  Json dj{{"status", std::string(to_string(dual.status))},
          {"value", to_json(dual.value)},
          {"phase_one_value", to_json(dual.phase_one_value)},
          {"pivots", dual.pivots}};
  bool diagonal_ok = false;
  bool certificate_ok = false;
  if (both_optimal) {
    const Matrix u = primal_matrix(primal, n);
    const auto d = decode_dual(dual, p, q);
    pj["matrix"] = to_json(u);
    dj["alpha"] = to_json(d.alpha);
    dj["beta"] = to_json(d.beta);
    diagonal_ok = u.diagonal() == ubar.matrix().diagonal();
    certificate_ok = certify(u, d, p, q).all_pass();
  }
  r["primal"] = std::move(pj);
  r["dual"] = std::move(dj);
  r["closed_form"] = to_json(closed);
  const bool agrees = both_optimal && primal.value == closed && dual.value == closed;
  r["agrees_with_closed_form"] = agrees;
  r["diagonal_matches_closed_form"] = diagonal_ok;
  r["oracle_certificate"] = certificate_ok;
  out.ok = agrees && diagonal_ok && certificate_ok;
  r["ok"] = out.ok;
  return out;
}

Output cmd_synth(const ProblemInput& in) {
  const auto& p = in.p;
  const auto& q = in.q;
  const auto& o = in.options;
  const std::size_t n = p.size();
  const TransformFamily root = o.family == "beta" ? beta_family(n) : uniform_family(n);

  Output out;
  Json& r = out.report;
  r = header("synth", in);
  r["family"] = o.family;
  r["base"] = o.base;
  r["map"] = o.map;
  r["chain"] = o.chain;

  TransformFamily source = root;
  if (o.chain) {
    const auto lift = build_optimal_primal(StochasticVector::uniform(n), p);
    r["chain_matrix"] = to_json(lift.matrix());
    source = apply_matrix(lift, root);
  }
  const auto source_report = check_coherence(source, to_doubles(p.entries()), o.z_grid);
  r["source_coherence"] = coherence_json(source_report);
  if (!source_report.pass()) {
    std::ostringstream msg;
    msg << "weights/family mismatch: the " << o.family << " family is not coherent for p (max residual "
        << source_report.max_residual << "); use equal weights in p or set options.chain";
    r["error"] = msg.str();
    out.ok = false;
    r["ok"] = false;
    return out;
  }

  StochasticMatrix u = StochasticMatrix::identity(n);
  if (o.map == "bar") {
    u = build_optimal_primal(p, q);
  } else if (o.map == "hat") {
    u = solve_p_perm(p, q, perm_options(o)).u_hat;
  } else if (p != q) {
    r["warning"] = "identity map with p != q; coherence for q is not expected";
  }
  r["matrix"] = to_json(u.matrix());

  const TransformFamily mapped = apply_matrix(u, source);
  const auto report = check_coherence(mapped, to_doubles(q.entries()), o.z_grid);
  r["coherence"] = coherence_json(report);

  Json spacing{{"source", wasserstein_consecutive(source)}, {"mapped", wasserstein_consecutive(mapped)}};
  if (!o.chain) {
    spacing["expected_source"] = o.family == "beta" ? 1.0 / static_cast<double>(n + 1) : 1.0 / static_cast<double>(n);
  }
  r["spacing"] = std::move(spacing);

  const BaseCdf base = load_base(o.base);
  out.tables.emplace_back("z_table", transform_table(source, mapped, o.z_grid));
  out.tables.emplace_back("x_table", synthesize(mapped, base, default_x_grid(base, o.x_grid)));

  out.ok = report.pass();
  r["ok"] = out.ok;
  return out;
}

std::string report_csv(const Json& report) {
  std::ostringstream out;
  out << "section,row,col,value\n";
  flatten(report, "", out);
  return out.str();
}

void write_output(const Output& output, Format format, const std::optional<fs::path>& path, std::ostream& out) {
  if (format == Format::json) {
    Json doc = output.report;
    if (!output.tables.empty()) {
      Json tables = Json::object();
      for (const auto& [name, table] : output.tables) tables[name] = table_json(table);
      doc["tables"] = std::move(tables);
    }
    const std::string text = doc.dump(2) + "\n";
    if (path) {
      write_file(*path, text);
    } else {
      out << text;
    }
    return;
  }
  if (!output.tables.empty()) {
    if (!path) throw Error(ErrorCode::InvalidArgument, "csv output with tables needs --output <directory>");
    std::error_code ec;
    fs::create_directories(*path, ec);
    if (ec) throw Error(ErrorCode::InvalidArgument, "cannot create '" + path->string() + "': " + ec.message());
    for (const auto& [name, table] : output.tables) write_file(*path / (name + ".csv"), to_csv(table));
    write_file(*path / "report.json", output.report.dump(2) + "\n");
    return;
  }
  const std::string text = report_csv(output.report);
  if (path) {
    write_file(*path, text);
  } else {
    out << text;
  }
}

}  // namespace barysimplex::cli
