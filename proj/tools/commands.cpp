#include "commands.hpp"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "document.hpp"
#include "expr_parser.hpp"
#include "superint/goldens.hpp"

namespace superint {

namespace {

void engine_diagnostic(std::ostream& err, const std::string& command, const std::string& stage,
                       const std::exception& e) {
  nlohmann::ordered_json d;
  d["error"] = "engine-failure";
  d["command"] = command;
  d["stage"] = stage;
  d["message"] = e.what();
  err << d.dump() << "\n";
}

void report(std::ostream& out, const CheckList& checks) {
  for (const auto& c : checks) {
    out << (c.ok ? "PASS " : "FAIL ") << c.name;
    if (!c.detail.empty()) out << "  (" << c.detail << ")";
    out << "\n";
  }
}

struct ConstructArgs {
  std::string system, k, variant, seed, out;
  bool expand = false;
};

int cmd_construct(const ConstructArgs& a, std::ostream& out, std::ostream& err) {
  JobConfig cfg;
  try {
    if (a.system == "cartesian") cfg.system = SystemKind::Cartesian;
    else if (a.system == "ttw") cfg.system = SystemKind::Ttw;
    else throw ConfigError("unknown system '" + a.system + "'");
    if (a.variant == "quantum") cfg.variant = Variant::Quantum;
    else if (a.variant == "classical") cfg.variant = Variant::Classical;
    else throw ConfigError("unknown variant '" + a.variant + "'");
    try {
      cfg.k = Rational::parse(a.k);
    } catch (const std::exception& e) {
      throw ConfigError("bad k '" + a.k + "': " + e.what());
    }
    if (!a.seed.empty()) {
      try {
        cfg.seed = parse_seed(a.seed);
      } catch (const std::exception& e) {
        throw ConfigError(std::string("bad seed: ") + e.what());
      }
    }
    validate(cfg);
  } catch (const ConfigError& e) {
    err << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  Construction c;
  std::string text;
  const char* stage = "construct";
  try {
    c = construct(cfg);
    stage = "serialize";
    text = serialize(make_document(c, a.expand));
  } catch (const std::exception& e) {
    engine_diagnostic(err, "construct", stage, e);
    return kExitEngineFail;
  }
  std::ofstream f(a.out, std::ios::binary);
  if (!(f << text) || !f.flush()) {
    err << "cannot write " << a.out << "\n";
    return kExitUsage;
  }
  out << "order: " << c.order << "\n";
  out << "scale: " << c.scale.str() << "\n";
  if (cfg.system == SystemKind::Cartesian && cfg.k == Rational(3) && cfg.variant == Variant::Classical)
    report(out, k3_classical_comparisons(c.op));
  out << "wrote " << a.out << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& path, bool full, std::ostream& out, std::ostream& err) {
  OperatorDocument doc;
  try {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw DocumentError("cannot read " + path);
    std::stringstream buf;
    buf << f.rdbuf();
    doc = parse_document(buf.str());
    validate(JobConfig{doc.system, doc.k, doc.variant, std::nullopt});
  } catch (const std::exception& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  Verification v;
  try {
    v = verify_operator(doc.op, system_for(doc.system, doc.k), doc.variant, full);
  } catch (const std::exception& e) {
    engine_diagnostic(err, "verify", "residuals", e);
    return kExitEngineFail;
  }
  for (size_t i = 0; i < v.residuals.names.size(); ++i) {
    const FunElement& r = v.residuals.residuals[i];
    out << "residual " << v.residuals.names[i] << ": ";
    if (r.is_zero()) out << "zero\n";
    else out << "NONZERO (" << r.size() << " terms)\n";
  }
  if (v.commutes)
    out << (doc.variant == Variant::Quantum ? "commutator with H: " : "Poisson bracket with H: ")
        << (*v.commutes ? "zero" : "NONZERO") << "\n";
  out << (v.ok() ? "verified" : "verification failed") << "\n";
  return v.ok() ? kExitOk : kExitVerifyFail;
}

int cmd_selftest(std::ostream& out, std::ostream& err) {
  using Clock = std::chrono::steady_clock;
  struct Group {
    const char* name;
    CheckList (*run)();
  };
  const Group groups[] = {
      {"cartesian k=3 classical", golden_cartesian_k3_classical},
      {"cartesian k=3 quantum", golden_cartesian_k3_quantum},
      {"ttw k=2", golden_ttw_k2},
      {"ttw k=1/3", [] { return golden_ttw_k13(true); }},
      {"determinant identity", [] { return golden_det_identity(50, 20261015u); }},
  };
  bool ok = true;
  for (const auto& g : groups) {
    auto t0 = Clock::now();
    CheckList checks;
    try {
      checks = g.run();
    } catch (const std::exception& e) {
      engine_diagnostic(err, "selftest", g.name, e);
      return kExitEngineFail;
    }
    double s = std::chrono::duration<double>(Clock::now() - t0).count();
    out << "== " << g.name << " (" << std::fixed << std::setprecision(2) << s << " s)\n";
    report(out, checks);
    ok = ok && all_ok(checks);
  }
  out << (ok ? "selftest passed" : "selftest FAILED") << "\n";
  return ok ? kExitOk : kExitVerifyFail;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact construction and verification of higher-order symmetry operators", "superint"};
  app.require_subcommand(1);

  ConstructArgs ca;
  auto* construct = app.add_subcommand("construct", "Build the symmetry operator for one system");
  construct->add_option("--system", ca.system, "cartesian or ttw")->required()->check(CLI::IsMember({"cartesian", "ttw"}));
  construct->add_option("--k", ca.k, "ratio p/q")->required();
  construct->add_option("--variant", ca.variant, "quantum or classical")
      ->required()
      ->check(CLI::IsMember({"quantum", "classical"}));
  construct->add_option("--seed", ca.seed, "two exact expressions, comma separated");
  construct->add_option("--out", ca.out, "output document")->required();
  construct->add_flag("--expand", ca.expand, "also store the operator expanded in the derivatives");

  std::string path;
  bool full = false;
  auto* verify = app.add_subcommand("verify", "Check a stored operator against the symmetry conditions");
  verify->add_option("path", path, "operator document")->required();
  verify->add_flag("--full-commutator", full, "also expand the operator and commute it with H");

  auto* selftest = app.add_subcommand("selftest", "Run the golden examples and the determinant identity");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  if (*construct) return cmd_construct(ca, out, err);
  if (*verify) return cmd_verify(path, full, out, err);
  if (*selftest) return cmd_selftest(out, err);
  return kExitUsage;
}

}  // namespace superint
