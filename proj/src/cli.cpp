#include "hnc/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "acceptance.hpp"
#include "hnc/derivations.hpp"
#include "hnc/errors.hpp"
#include "hnc/fredholm.hpp"
#include "hnc/group_structure.hpp"
#include "hnc/json_io.hpp"
#include "hnc/kk_sequences.hpp"
#include "hnc/pairing_check.hpp"

namespace hnc::cli {

namespace {

using hnc::to_json;

struct Config {
  int truncation = 64;
  double tol = 1e-8;
  int grid = 64;
  int n_commutators = 4;
  std::uint64_t seed = 20240601;
  bool table = false;
};

// Failed check inside an otherwise well-formed run.
struct Failure {
  std::string check;
  std::string message;
};

json config_json(const Config& c) {
  return {{"truncation", c.truncation}, {"tol", c.tol},   {"grid", c.grid},
          {"n_commutators", c.n_commutators}, {"seed", c.seed}, {"output", c.table ? "table" : "json"}};
}

json read_input(const std::string& src, std::istream& in) {
  if (src.empty()) throw std::invalid_argument("this command needs an input (path, '-' or inline JSON)");
  if (src == "-") return json::parse(in);
  if (src.front() == '{' || src.front() == '[') return json::parse(src);
  std::ifstream f(src);
  if (!f) throw std::invalid_argument("cannot open input file " + src);
  return json::parse(f);
}

Derivation derivation_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dU") || !j.contains("dV"))
    throw std::invalid_argument("derivation JSON needs \"dU\" and \"dV\"");
  return {element_from_json(j.at("dU")), element_from_json(j.at("dV"))};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (int j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    rows.push_back(r);
  }
  return rows;
}

json to_json(const IndexCertificate& c) {
  return {{"index", c.index},
          {"truncations", c.truncations},
          {"kernel_dims", c.kernel_dims},
          {"cokernel_dims", c.cokernel_dims},
          {"spectral_gaps", c.spectral_gaps}};
}

json to_json(const PairingTable& t) {
  return {{"rows", t.rows}, {"cols", t.cols}, {"entries", to_json(t.entries)}, {"provenance", t.provenance}};
}

json to_json(const CentralizerReport& r) {
  return {{"case", to_string(r.kase)}, {"k", r.k},     {"p_prime", r.p_prime}, {"q_prime", r.q_prime},
          {"S_k", r.S_k},              {"l", r.l},     {"N_g", to_string(r.ng)}};
}

RationalAngle parse_angle(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return {std::stoll(s), 1};
    return {std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1))};
  } catch (const std::logic_error&) {
    throw std::invalid_argument("angle must look like s/t, got " + s);
  }
}

NumericOptions numeric(const Config& c) {
  NumericOptions n;
  n.index_truncations = {c.truncation / 2, c.truncation, 2 * c.truncation};
  n.n_commutators = c.n_commutators;
  n.grid = c.grid;
  n.tol = c.tol;
  n.trace.seed = c.seed;
  return n;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

void print_table(std::ostream& out, const std::string& title, const std::vector<std::string>& rows,
                 const std::vector<std::string>& cols, const IntMatrix& m) {
  out << title << "\n" << pad("", 8);
  for (const auto& c : cols) out << pad(c, 14);
  out << "\n";
  for (int i = 0; i < m.rows(); ++i) {
    out << pad(rows[static_cast<std::size_t>(i)], 8);
    for (int j = 0; j < m.cols(); ++j) out << pad(std::to_string(m(i, j)), 14);
    out << "\n";
  }
}

// Flattens a JSON result into "key: value" lines for --table output.
void print_flat(std::ostream& out, const json& j, const std::string& prefix = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) print_flat(out, v, prefix.empty() ? k : prefix + "." + k);
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

json cmd_alg(const std::string& action, const json& in, const std::string& angle) {
  if (action == "mul") {
    if (!in.is_object() || !in.contains("a") || !in.contains("b"))
      throw std::invalid_argument("alg mul needs {\"a\": element, \"b\": element}");
    return {{"product", to_json(alg_mul(element_from_json(in.at("a")), element_from_json(in.at("b"))))}};
  }
  const auto x = element_from_json(in);
  if (action == "star") return {{"star", to_json(alg_star(x))}};
  if (action == "central") return {{"central", is_central(x)}};
  const auto th = parse_angle(angle);
  return {{"angle", std::to_string(th.s) + "/" + std::to_string(th.t)}, {"matrix", to_json(eval_at_angle(x, th))}};
}

json cmd_deriv(const std::string& action, const json& in, std::optional<Failure>& fail) {
  const auto d = derivation_from_json(in);
  const auto rep = check_consistency(d);
  json violations = json::array();
  for (const auto& v : rep.violations)
    violations.push_back({{"kind", to_string(v.kind)}, {"cell", hnc::to_json(v.cell)}, {"residual", hnc::to_json(v.residual)}});
  if (action == "check") {
    if (!rep.pass) fail = Failure{"derivation consistency", std::to_string(rep.violations.size()) + " violated cells"};
    return {{"consistent", rep.pass}, {"violations", violations}};
  }
  if (!rep.pass) {
    fail = Failure{"derivation consistency", "input is not a derivation"};
    return {{"consistent", false}, {"violations", violations}};
  }
  if (action == "apply") {
    if (!in.contains("x")) throw std::invalid_argument("deriv apply needs an \"x\" element");
    return {{"value", hnc::to_json(apply(d, element_from_json(in.at("x"))))}};
  }
  try {
    const auto r = decompose(d);
    return {{"z1", hnc::to_json(r.z1)}, {"z2", hnc::to_json(r.z2)}, {"x", hnc::to_json(r.x)}};
  } catch (const NotDecomposable& e) {
    json lines = json::array();
    for (const auto& l : e.obstructed_lines()) lines.push_back({{"p", l[0]}, {"q", l[1]}});
    fail = Failure{"finite decomposition", e.what()};
    return {{"decomposable", false}, {"obstructed_lines", lines}};
  }
}

json cmd_group(const std::string& action, const std::vector<std::int64_t>& elem, const std::string& type, int n) {
  if (action == "classify") {
    if (elem.size() != 3) throw std::invalid_argument("group classify needs --element p q r");
    const GroupElement g{elem[0], elem[1], elem[2]};
    auto j = to_json(classify_element(g));
    j["element"] = hnc::to_json(g);
    j["conjugacy_representative"] = hnc::to_json(conjugacy_representative(g));
    return j;
  }
  if (action == "cohomology") {
    const auto t = parse_ng_type(type);
    return {{"group", to_string(t)}, {"dims", group_cohomology(t).dims}};
  }
  const auto c = cyclic_cohomology_dim(n);
  json j{{"degree", c.degree}, {"finite_rank", c.finite_rank}, {"countable", c.countable_factor}};
  const auto [ev, od] = periodic_cyclic_dims();
  j["periodic"] = {ev, od};
  return j;
}

json cmd_sequence(const std::string& which, bool check, std::optional<Failure>& fail) {
  const auto seq = which == "ktheory" ? pv_ktheory_sequence() : khomology_sequence();
  json maps = json::array();
  for (const auto& m : seq) {
    json derived = json::array();
    for (const auto& [r, c] : m.exactness_derived) derived.push_back({r, c});
    maps.push_back({{"name", m.name},
                    {"source", m.source.name},
                    {"target", m.target.name},
                    {"matrix", to_json(m.matrix)},
                    {"exactness_derived", derived}});
  }
  json j{{"sequence", which}, {"maps", maps}};
  if (check) {
    const auto rep = check_exactness(seq);
    json nodes = json::array();
    for (const auto& n : rep.nodes)
      nodes.push_back({{"node", n.node},
                       {"label", n.label},
                       {"composition_zero", n.composition_zero},
                       {"image_rank", n.image_rank},
                       {"kernel_rank", n.kernel_rank},
                       {"image_saturated", n.image_saturated},
                       {"exact", n.exact}});
    j["exact"] = rep.exact;
    j["nodes"] = nodes;
    if (!rep.exact) fail = Failure{"six-term exactness", "nodes fail"};
  }
  return j;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact and certified computations for the discrete Heisenberg group algebra", "hnc"};
  app.require_subcommand(1);
  Config cfg;
  bool json_flag = false;
  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--truncation", cfg.truncation, "window half-width for Fredholm modules")->check(CLI::Range(4, 4096));
    sub->add_option("--tol", cfg.tol, "singular-value kernel threshold")->check(CLI::PositiveNumber);
    sub->add_option("--grid", cfg.grid, "torus sampling grid")->check(CLI::Range(8, 4096));
    sub->add_option("--n-commutators", cfg.n_commutators, "commutator count 2n in the trace formula")
        ->check(CLI::Range(2, 16));
    sub->add_option("--seed", cfg.seed, "seed for probing and random suites (HNC_SEED overrides)");
    auto* t = sub->add_flag("--table", cfg.table, "human-readable output");
    sub->add_flag("--json", json_flag, "JSON output (default)")->excludes(t);
  };

  std::string action, input, angle = "0/1", type = "H3", module = "z1prime", unitary = "V", which;
  std::vector<std::int64_t> elem;
  int degree = 0;
  double mass = 1.0;
  bool check = false;

  auto* alg = app.add_subcommand("alg", "group ring arithmetic");
  alg->add_option("action", action)->required()->check(CLI::IsMember({"mul", "star", "central", "eval"}));
  alg->add_option("input", input, "path, '-' for stdin, or inline JSON");
  alg->add_option("--angle", angle, "rational angle s/t for eval");
  auto* deriv = app.add_subcommand("deriv", "derivations given by their values on U and V");
  deriv->add_option("action", action)->required()->check(CLI::IsMember({"check", "decompose", "apply"}));
  deriv->add_option("input", input, "path, '-' for stdin, or inline JSON");
  auto* group = app.add_subcommand("group", "centralizers and (cyclic) cohomology");
  group->add_option("action", action)->required()->check(CLI::IsMember({"classify", "cohomology", "hc-dim"}));
  group->add_option("--element", elem, "p q r")->expected(3);
  group->add_option("--type", type, "Z, ZxZl:l, Z2, ext:r or H3");
  group->add_option("--n", degree, "cyclic cohomology degree")->check(CLI::NonNegativeNumber);
  auto* pairing = app.add_subcommand("pairing", "index pairing tables");
  pairing->add_option("action", action)->required()->check(CLI::IsMember({"table", "verify"}));
  auto* index = app.add_subcommand("index", "odd index pairing of a Fredholm module with a unitary");
  index->add_option("--module", module, "z1, z1prime, w1, w1prime")->required();
  index->add_option("--unitary", unitary, "U, V, W, V_a, or JSON element/matrix (path or inline)")->required();
  auto* chern = app.add_subcommand("chern", "lattice Chern number of the two-band projector");
  chern->add_option("--mass", mass, "mass term (Bott class for 0 < m < 2)");
  auto* seq = app.add_subcommand("sequence", "six-term sequences");
  seq->add_option("which", which)->required()->check(CLI::IsMember({"ktheory", "khomology"}));
  seq->add_flag("--check", check, "run the exactness checks");
  auto* report = app.add_subcommand("report", "acceptance suite");
  report->add_option("action", action)->required()->check(CLI::IsMember({"all"}));
  for (auto* s : {alg, deriv, group, pairing, index, chern, seq, report}) add_common(s);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }
  if (const char* s = std::getenv("HNC_SEED")) {
    try {
      cfg.seed = std::stoull(s);
    } catch (const std::logic_error&) {
      err << "usage error: HNC_SEED must be an unsigned integer\n";
      return kUsage;
    }
  }

  json result;
  std::optional<Failure> fail;
  std::string command;
  try {
    if (alg->parsed()) {
      command = "alg " + action;
      result = cmd_alg(action, read_input(input, in), angle);
    } else if (deriv->parsed()) {
      command = "deriv " + action;
      result = cmd_deriv(action, read_input(input, in), fail);
    } else if (group->parsed()) {
      command = "group " + action;
      result = cmd_group(action, elem, type, degree);
    } else if (pairing->parsed()) {
      command = "pairing " + action;
      const auto [even, odd] = pairing_tables();
      if (action == "table") {
        result = {{"even", to_json(even)}, {"odd", to_json(odd)}};
      } else {
        const auto v = verify_pairing_tables(numeric(cfg));
        json entries = json::array();
        for (const auto& e : v.entries)
          entries.push_back({{"table", e.table}, {"row", e.row}, {"col", e.col}, {"stored", e.stored},
                             {"computed", e.computed}, {"route", e.route}, {"match", e.match()}});
        result = {{"pass", v.pass}, {"entries", entries}};
        if (!v.pass) fail = Failure{"pairing table recomputation", "entries differ"};
      }
    } else if (index->parsed()) {
      command = "index";
      const auto name = parse_module_name(module);
      AlgebraMatrix u;
      if (unitary == "U" || unitary == "V" || unitary == "W" || unitary == "V_a")
        u = odd_generator_image("[" + unitary + "]");
      else
        u = algebra_matrix_from_json(read_input(unitary, in));
      const auto spec = FredholmModuleSpec::make(name, cfg.truncation);
      const auto c = odd_pairing(spec, u, {cfg.truncation / 2, cfg.truncation, 2 * cfg.truncation}, cfg.tol);
      result = to_json(c);
      result["module"] = module;
    } else if (chern->parsed()) {
      command = "chern";
      const auto f = two_band_projector(cfg.grid, mass);
      const auto g2 = two_band_projector(2 * cfg.grid, mass);
      std::ostringstream raw;
      raw << std::setprecision(12) << lattice_chern_raw(f);
      result = {{"mass", mass}, {"chern", lattice_chern(f)}, {"raw", raw.str()}, {"chern_double_grid", lattice_chern(g2)}};
    } else if (seq->parsed()) {
      command = "sequence " + which;
      result = cmd_sequence(which, check, fail);
    } else {
      command = "report all";
      acceptance::Options o;
      o.seed = cfg.seed;
      o.n_commutators = cfg.n_commutators;
      o.tol = cfg.tol;
      json crit = json::array();
      int failed = 0;
      const auto results = acceptance::run_all(o, [&](const acceptance::CriterionResult& r) {
        if (cfg.table) out << acceptance::format_line(r) << std::endl;
      });
      for (const auto& r : results) {
        crit.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        if (!r.passed) ++failed;
      }
      result = {{"criteria", crit}, {"passed", static_cast<int>(results.size()) - failed}, {"failed", failed}};
      if (failed) fail = Failure{"acceptance suite", std::to_string(failed) + " criteria failed"};
    }
  } catch (const json::exception& e) {
    err << "usage error: malformed JSON: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    fail = Failure{"numeric certificate", e.what()};
    result = json::object();
  }

  if (fail) result["failure"] = {{"check", fail->check}, {"message", fail->message}};
  json doc{{"command", command}, {"config", config_json(cfg)}, {"result", result}};
  if (!cfg.table) {
    out << doc.dump(2) << "\n";
  } else if (command != "report all") {
    out << "# " << command << "  " << config_json(cfg).dump() << "\n";
    if (command == "pairing table") {
      const auto [even, odd] = pairing_tables();
      print_table(out, "even", even.rows, even.cols, even.entries);
      print_table(out, "odd", odd.rows, odd.cols, odd.entries);
    } else {
      print_flat(out, result);
    }
  } else {
    out << "# config " << config_json(cfg).dump() << "\n";
  }
  if (fail) {
    err << "verification failed: " << fail->check << ": " << fail->message << "\n";
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace hnc::cli
