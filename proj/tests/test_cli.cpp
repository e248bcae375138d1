#include <filesystem>
#include <fstream>
#include <numeric>
#include <sstream>

#include "commands.hpp"
#include "doctest.h"
#include "document.hpp"
#include "expr_parser.hpp"
#include "superint/goldens.hpp"
#include "test_support.hpp"

using namespace superint;
using namespace superint::testing;

namespace {

namespace fs = std::filesystem;

struct CliResult {
  int code;
  std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "superint_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

void spit(const fs::path& p, const std::string& text) { std::ofstream(p, std::ios::binary) << text; }

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

JobConfig config(SystemKind s, Rational k, Variant v) { return JobConfig{s, std::move(k), v, std::nullopt}; }

void check_round_trip(const OperatorDocument& doc) {
  std::string text = serialize(doc);
  OperatorDocument back = parse_document(text);
  CHECK(back == doc);
  CHECK(serialize(back) == text);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("expression parser") {
  CHECK(parse_param_expr("3i/4") == ParamRatFn(GaussRational(0, Rational(3, 4))));
  CHECK(parse_param_expr("4L2") == L2 * 4);
  CHECK(parse_param_expr("36H(18L2+13)") == H * (L2 * 18 + 13) * 36);
  CHECK(parse_param_expr("H + 1/(L2 - alpha)") == H + ParamRatFn(1) / (L2 - al));
  CHECK(parse_param_expr("(1+2i)^2") == ParamRatFn(GaussRational(-3, 4)));
  CHECK(parse_param_expr("β^-2 γ") == ga / (be * be));
  CHECK(parse_param_expr("-2^2") == ParamRatFn(-4));
  CHECK(parse_param_expr(" - beta*gamma + 7/3 ") == -be * ga + ParamRatFn(Rational(7, 3)));

  auto seed = parse_seed("8(81L2^2+765L2+274), 36H(18L2+13)");
  CHECK(seed[0] == (L2 * L2 * 81 + L2 * 765 + 274) * 8);
  CHECK(seed[1] == H * (L2 * 18 + 13) * 36);

  for (const char* bad : {"", "1.5", "x", "(H", "H)", "2^", "1/0", "1/(H-H)", "alpha^99999", "0^-1"})
    CHECK_THROWS_AS(parse_param_expr(bad), ExprError);
  CHECK_THROWS_AS(parse_seed("1"), ExprError);
  CHECK_THROWS_AS(parse_seed("1,2,3"), ExprError);
  CHECK_THROWS_AS(parse_seed("(1,2)"), ExprError);
}

TEST_CASE("documents round-trip byte-identically on the golden outputs") {
  const JobConfig cfgs[] = {
      config(SystemKind::Cartesian, Rational(3), Variant::Classical),
      config(SystemKind::Cartesian, Rational(3), Variant::Quantum),
      config(SystemKind::Cartesian, Rational(-2, 3), Variant::Quantum),
      config(SystemKind::Ttw, Rational(2), Variant::Quantum),
      config(SystemKind::Ttw, Rational(1, 3), Variant::Quantum),
  };
  for (const auto& cfg : cfgs) {
    CAPTURE(cfg.k.str());
    Construction c = construct(cfg);
    check_round_trip(make_document(c, false));
    check_round_trip(make_document(c, true));
  }
  JobConfig seeded = config(SystemKind::Cartesian, Rational(1, 3), Variant::Quantum);
  seeded.seed = parse_seed("H + 1/(L2 - alpha), 3i/4");
  check_round_trip(make_document(construct(seeded), true));
}

TEST_CASE("document rejects malformed input") {
  std::string good = serialize(make_document(construct(config(SystemKind::Ttw, Rational(2), Variant::Quantum)), false));
  auto edited = [&](const std::string& from, const std::string& to) {
    std::string s = good;
    size_t at = s.find(from);
    REQUIRE(at != std::string::npos);
    return s.replace(at, from.size(), to);
  };
  CHECK_NOTHROW(parse_document(good));
  const std::string bad[] = {
      "",
      "[]",
      good.substr(0, good.size() / 2),
      edited("\"version\": 1", "\"version\": 2"),
      edited("\"system\": \"ttw\"", "\"system\": \"polar\""),
      edited("\"ring\": \"trig\"", "\"ring\": \"exp\""),
      edited("\"re\": \"1\"", "\"re\": \"1.0\""),
      edited("\"re\": \"1\"", "\"re\": \"0\", \"im\": \"0\", \"extra\": \"0\""),
      edited("\"0,0,0,0,0\"", "\"0,0,0,0\""),
      edited("\"order\": 4", "\"order\": \"4\""),
      edited("\"canonical\"", "\"canonica\""),
  };
  for (const auto& text : bad) {
    CAPTURE(text.substr(0, 80));
    CHECK_THROWS_AS(parse_document(text), DocumentError);
  }

  OperatorDocument doc = parse_document(good);
  doc.op.D += FunElement::trig_term(Rational(2), Rational(0), 0, 0, ParamRatFn(1) / H);
  CHECK_THROWS_AS(serialize(doc), DocumentError);
}

TEST_CASE("exit codes") {
  fs::path out = scratch("codes.json");

  auto r = cli({"construct", "--system", "ttw", "--k", "2", "--variant", "classical", "--out", out.string()});
  CHECK(r.code == kExitUsage);
  CHECK(contains(r.err, "out of scope"));

  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"construct", "--system", "ttw", "--k", "2", "--variant", "quantum"}).code == kExitUsage);
  CHECK(cli({"construct", "--system", "ttw", "--k", "-2", "--variant", "quantum", "--out", out.string()}).code ==
        kExitUsage);
  CHECK(cli({"construct", "--system", "cartesian", "--k", "0", "--variant", "quantum", "--out", out.string()}).code ==
        kExitUsage);
  CHECK(cli({"construct", "--system", "cartesian", "--k", "0.5", "--variant", "quantum", "--out", out.string()})
            .code == kExitUsage);
  CHECK(cli({"construct", "--system", "cartesian", "--k", "3", "--variant", "quantum", "--seed", "1", "--out",
             out.string()})
            .code == kExitUsage);
  CHECK(cli({"construct", "--system", "cartesian", "--k", "3", "--variant", "quantum", "--out",
             (scratch("missing_dir") / "x" / "y.json").string()})
            .code == kExitUsage);

  r = cli({"construct", "--system", "cartesian", "--k", "3", "--variant", "quantum", "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "order: 6"));
  CHECK(cli({"verify", out.string()}).code == kExitOk);

  // Parse failures.
  CHECK(cli({"verify", scratch("does_not_exist.json").string()}).code == kExitParse);
  fs::path broken = scratch("broken.json");
  spit(broken, "{\"format\": \"superint-operator\"");
  CHECK(cli({"verify", broken.string()}).code == kExitParse);
  std::string text = slurp(out);
  spit(broken, text.replace(text.find("\"variant\": \"quantum\""), 20, "\"variant\": \"quantal\""));
  CHECK(cli({"verify", broken.string()}).code == kExitParse);

  // A well-formed document that is not a symmetry.
  OperatorDocument doc = parse_document(slurp(out));
  doc.op.D += FunElement::exp_term(Rational(3), Rational(-1, 2), Rational(-1, 2), H);
  fs::path wrong = scratch("wrong.json");
  spit(wrong, serialize(doc));
  r = cli({"verify", wrong.string()});
  CHECK(r.code == kExitVerifyFail);
  CHECK(contains(r.out, "NONZERO"));
  CHECK(cli({"verify", wrong.string(), "--full-commutator"}).code == kExitVerifyFail);

  CHECK(cli({"--help"}).code == kExitOk);
}

TEST_CASE("selftest passes") {
  auto r = cli({"selftest"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "selftest passed"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("construct writes the k = 1/3 operator of order 6") {
  fs::path out = scratch("k13.json");
  auto r = cli({"construct", "--system", "ttw", "--k", "1/3", "--variant", "quantum", "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "order: 6"));
  OperatorDocument doc = parse_document(slurp(out));
  CHECK(doc.order == 6);

  // The stored operator is a scalar multiple of the reference one (β, γ exchanged).
  TtwReferenceK13 ex = ttw_reference_k13();
  auto swap = [](const FunElement& f) { return f.swap_params(Var::Beta, Var::Gamma); };
  const FunMonomial lead{Rational(-1), Rational(0), 3, 0};
  REQUIRE(doc.op.A.terms().count(lead));
  ParamRatFn ratio = doc.op.A.terms().at(lead) / ex.A.terms().at(lead);
  CHECK(ratio.num().is_constant());
  CHECK(ratio.den().is_constant());
  CHECK(doc.op.A == swap(ex.A) * ratio);
  CHECK(doc.op.B == swap(ex.B) * ratio);
  CHECK(doc.op.C == swap(ex.C) * ratio);

  r = cli({"verify", out.string(), "--full-commutator"});
  CHECK(r.code == kExitOk);
  CHECK(contains(r.out, "commutator with H: zero"));
}

TEST_CASE("classical k = 3 report lists the comparisons with K1 and K2") {
  fs::path out = scratch("k3c.json");
  auto r = cli({"construct", "--system", "cartesian", "--k", "3", "--variant", "classical", "--out", out.string()});
  REQUIRE(r.code == kExitOk);
  CHECK(contains(r.out, "PASS B p_R + C p_θ = (3/4) K1"));
  CHECK(contains(r.out, "PASS A p_R p_θ + D = (1/4) K2"));
  CHECK_FALSE(contains(r.out, "FAIL"));
  CHECK(cli({"verify", out.string(), "--full-commutator"}).code == kExitOk);
}

TEST_CASE("verify accepts every constructed Cartesian operator with p q <= 9") {
  fs::path out = scratch("sweep_cartesian.json");
  for (long p = 1; p <= 9; ++p)
    for (long q = 1; p * q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      for (int sign : {1, -1})
        for (const char* variant : {"quantum", "classical"}) {
          std::string k = Rational(sign * p, q).str();
          CAPTURE(k);
          CAPTURE(variant);
          REQUIRE(cli({"construct", "--system", "cartesian", "--k", k, "--variant", variant, "--out", out.string()})
                      .code == kExitOk);
          CHECK(cli({"verify", out.string(), "--full-commutator"}).code == kExitOk);
        }
    }
}

TEST_CASE("verify accepts every constructed TTW operator with p q <= 9") {
  fs::path out = scratch("sweep_ttw.json");
  for (long p = 1; p <= 9; ++p)
    for (long q = 1; p * q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      std::string k = Rational(p, q).str();
      CAPTURE(k);
      REQUIRE(cli({"construct", "--system", "ttw", "--k", k, "--variant", "quantum", "--out", out.string()}).code ==
              kExitOk);
      CHECK(cli({"verify", out.string(), "--full-commutator"}).code == kExitOk);
    }
}

}  // TEST_SUITE
