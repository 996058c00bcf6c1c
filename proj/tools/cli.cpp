#include "cremona/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "cremona/document.hpp"
#include "cremona/enumeration.hpp"
#include "cremona/error.hpp"
#include "cremona/invariants.hpp"
#include "json.hpp"

namespace cremona {

namespace {

using Json = nlohmann::ordered_json;

struct Settings {
  std::string input;
  bool normalize = false;
  bool oracle = false;
  bool json = true;
  int n = 3;
  std::int64_t d = 2;
  int jobs = 1;
  std::string dump;
};

// Largest degree accepted by `enumerate` for n = 2, 3, 4.
std::int64_t max_enumeration_degree(int n) {
  switch (n) {
    case 2: return 40;
    case 3: return 8;
    case 4: return 4;
    default: return 0;
  }
}

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

void emit(const Json& j, const Settings& s, std::ostream& out) {
  if (s.json) {
    out << j.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : j.items()) out << key << ": " << value.dump() << '\n';
}

ExponentMatrix load(const Settings& s) {
  return to_exponent_matrix(parse_document(read_input(s.input)), {s.normalize});
}

int cmd_validate(const Settings& s, std::ostream& out, std::ostream& err) {
  const MatrixDocument doc = parse_document(read_input(s.input));
  Json j;
  try {
    const ExponentMatrix e = to_exponent_matrix(doc, {s.normalize});
    const bool birational = is_birational(e);
    j["valid"] = true;
    j["n"] = e.n();
    j["d"] = e.degree();
    j["birational"] = birational;
    j["normalized"] = e.rows() != doc.rows;
    emit(j, s, out);
    return birational ? kExitOk : kExitNotBirational;
  } catch (const TheoryViolation&) {
    throw;
  } catch (const Error& e) {
    j["valid"] = false;
    j["error"] = std::string(to_string(e.kind()));
    emit(j, s, out);
    err << "validate: " << e.what() << '\n';
    return kExitInvalid;
  }
}

int cmd_invert(const Settings& s, std::ostream& out) {
  const ExponentMatrix inverse = invert(load(s));
  Json j = to_json(inverse);
  j["dprime"] = inverse.degree();
  emit(j, s, out);
  return kExitOk;
}

int cmd_invariants(const Settings& s, std::ostream& out) {
  const ExponentMatrix e = load(s);
  const InvariantReport report = johnson_check(e, s.oracle ? KMode::Checked : KMode::Fast);
  if (!s.json) {
    const SparsePoly f = build_f(e);
    out << "f: " << f.to_string() << '\n';
    const auto polar = toric_polar(f);
    for (std::size_t i = 0; i < polar.size(); ++i) out << "T" << i << ": " << polar[i].to_string() << '\n';
  }
  emit(to_json(report), s, out);
  return kExitOk;
}

int cmd_classify(const Settings& s, std::ostream& out) {
  const CaseLabel label = classify_case(load(s));
  Json j;
  j["case"] = std::string(to_string(label.label));
  if (label.column) j["column"] = *label.column;
  if (!label.lines.empty()) {
    j["lines"] = Json::array();
    for (const auto& [a, b] : label.lines) j["lines"].push_back({a, b});
  }
  emit(j, s, out);
  return kExitOk;
}

int cmd_enumerate(const Settings& s, std::ostream& out) {
  if (s.n < 2 || s.n > 4) throw UsageError("--n must be 2, 3 or 4");
  if (s.d < 1 || s.d > max_enumeration_degree(s.n))
    throw UsageError("--d must lie in [1, " + std::to_string(max_enumeration_degree(s.n)) + "] for n = " +
                     std::to_string(s.n));
  if (s.jobs < 1) throw UsageError("--jobs must be positive");

  std::ofstream dump;
  if (!s.dump.empty()) {
    dump.open(s.dump);
    if (!dump) throw UsageError("cannot write '" + s.dump + "'");
  }
  VerifyOptions options;
  options.jobs = s.jobs;
  options.kmode = s.oracle ? KMode::Checked : KMode::Fast;
  if (dump.is_open())
    options.on_class = [&](const ClassRecord& record) { dump << Json(record.canonical.rows()).dump() << '\n'; };

  const EnumerationSummary summary = verify_bounds(s.n, s.d, options);
  emit(to_json(summary), s, out);
  return summary.violations.empty() ? kExitOk : kExitTheoryViolation;
}

int cmd_phi(const Settings& s, bool json_requested, std::ostream& out) {
  if (s.n < 2) throw UsageError("--n must be at least 2");
  if (s.d < 1) throw UsageError("--d must be at least 1");
  const ExponentMatrix e = phi_nd(s.n, s.d);
  if (json_requested)
    out << to_json(e).dump() << '\n';
  else
    out << to_text(e);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Monomial Cremona transformations: inversion, invariants and exhaustive search"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Expand all help");

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", s.input, "Matrix file (text or JSON), '-' for stdin")->required();
    sub->add_flag("--normalize", s.normalize, "Remove a common monomial factor instead of rejecting it");
  };
  auto* json_flag = app.add_flag("--json,!--no-json", s.json, "JSON output (default on)");

  auto* validate_cmd = app.add_subcommand("validate", "Check a matrix and test birationality");
  add_input(validate_cmd);
  auto* invert_cmd = app.add_subcommand("invert", "Exponent matrix of the inverse map");
  add_input(invert_cmd);
  auto* invariants_cmd = app.add_subcommand("invariants", "Invariant report for a map of P^3");
  add_input(invariants_cmd);
  invariants_cmd->add_flag("--oracle", s.oracle, "Cross-check k_i with polynomial arithmetic");
  auto* classify_cmd = app.add_subcommand("classify", "Case of the degree-bound argument (P^3)");
  add_input(classify_cmd);

  auto* enumerate_cmd = app.add_subcommand("enumerate", "Enumerate all classes and check the degree bound");
  enumerate_cmd->add_option("--n", s.n, "Projective dimension (2, 3 or 4)")->required();
  enumerate_cmd->add_option("--d", s.d, "Degree of the monomials")->required();
  enumerate_cmd->add_option("--jobs", s.jobs, "Worker threads");
  enumerate_cmd->add_option("--dump", s.dump, "Write each canonical matrix as one JSON line");
  enumerate_cmd->add_flag("--oracle", s.oracle, "Cross-check k_i with polynomial arithmetic");

  auto* phi_cmd = app.add_subcommand("phi", "Print the extremal map (x0^d : x0^(d-1) x1 : ...)");
  phi_cmd->add_option("--n", s.n, "Projective dimension")->required();
  phi_cmd->add_option("--d", s.d, "Degree")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(s, out, err);
    if (invert_cmd->parsed()) return cmd_invert(s, out);
    if (invariants_cmd->parsed()) return cmd_invariants(s, out);
    if (classify_cmd->parsed()) return cmd_classify(s, out);
    if (enumerate_cmd->parsed()) return cmd_enumerate(s, out);
    if (phi_cmd->parsed()) return cmd_phi(s, json_flag->count() > 0 && s.json, out);
  } catch (const TheoryViolation& e) {
    err << "assertion failed: " << e.what() << '\n';
    return kExitTheoryViolation;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::NotBirational ? kExitNotBirational : kExitInvalid;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace cremona
