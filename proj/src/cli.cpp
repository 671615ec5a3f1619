#include "swcalc/cli.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "swcalc/json_io.hpp"
#include "swcalc/kernels.hpp"
#include "swcalc/ledger.hpp"
#include "swcalc/mcg.hpp"
#include "swcalc/pipeline.hpp"
#include "swcalc/plumbing.hpp"

namespace swcalc::cli {

namespace {

void emit(const Json& j, std::ostream& out) { out << j.dump(2) << "\n"; }

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open file: " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw DomainError("file " + path + " is not valid JSON: " + e.what());
  }
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string verdict_name(SymplecticVerdict v) {
  return v == SymplecticVerdict::nonsymplectic ? "nonsymplectic" : "unknown";
}

void print_state(const ManifoldState& m, std::ostream& out) {
  out << "e = " << m.e() << "  sigma = " << m.signature() << "  b2+ = " << m.b2_plus()
      << "  c1^2 = " << m.c1_squared() << "  chi_h = " << m.chi_h() << "\n";
  out << "simply connected: " << yes_no(m.simply_connected()) << "\n";
  out << "sw = " << m.sw().to_string() << "\n";
  out << "basic classes: " << m.sw().term_count() << "\n";
  out << "verdict: " << verdict_name(symplectic_verdict(m)) << "\n";
  out << "history:\n";
  for (const std::string& line : m.history()) out << "  " << line << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"surgery calculus for simply connected 4-manifolds"};
  app.name("swcalc");
  app.require_subcommand(1);

  bool json_mode = false;
  app.add_flag("--json", json_mode, "emit one JSON document on stdout");

  // fibration <n>
  std::int64_t fib_n = 0;
  auto* fibration = app.add_subcommand(
      "fibration", "canonical positive factorization of (t_a t_b)^{6n} with its fiber census");
  fibration->add_option("n", fib_n, "index of the elliptic surface E(n)")->required();
  fibration->callback([&] {
    const CanonicalFactorization fact = canonical_factorization(fib_n);
    const bool identity = evaluate(fact.word).is_identity();
    if (json_mode) {
      Json j;
      j["n"] = fib_n;
      j["word"] = fact.word.render();
      j["census"] = census_to_json(fact.census);
      j["evaluates_to_identity"] = identity;
      emit(j, out);
    } else {
      out << "word: " << fact.word.render() << "\n";
      out << "census: " << fact.census.to_string() << "\n";
      out << "right-handed twists: " << fact.census.right_handed_twists() << "\n";
      out << "evaluates to identity: " << yes_no(identity) << "\n";
    }
  });

  // verify-word <word>
  std::string word_text;
  auto* verify = app.add_subcommand("verify-word",
                                    "evaluate a twist word in SL(2,Z) and test for the identity");
  verify->add_option("word", word_text, "word in a, b, A, B with ^k and (...)^k")->required();
  verify->callback([&] {
    const MCGWord word = parse_word(word_text);
    const SL2Matrix m = evaluate(word);
    if (json_mode) {
      Json j;
      j["word"] = word.render();
      Json mj = matrix_to_json(m);
      j["matrix"] = mj["matrix"];
      j["is_identity"] = mj["is_identity"];
      emit(j, out);
    } else {
      out << "word: " << word.render() << "\n";
      out << "[ " << m.a.get_str() << " " << m.b.get_str() << " ]\n";
      out << "[ " << m.c.get_str() << " " << m.d.get_str() << " ]\n";
      out << "identity: " << yes_no(m.is_identity()) << "\n";
    }
  });

  // cfrac <p> <q>
  std::int64_t cf_p = 0, cf_q = 0;
  auto* cfrac = app.add_subcommand(
      "cfrac", "blowdown chain of C_{p,q}: continued fraction of p^2/(pq-1) with checks");
  cfrac->add_option("p", cf_p, "p > q >= 1, coprime")->required();
  cfrac->add_option("q", cf_q, "q")->required();
  cfrac->callback([&] {
    const Chain chain = chain_for(cf_p, cf_q);
    const ChainReport report = verify_chain(chain);
    if (json_mode) {
      emit(chain_to_json(chain, report), out);
    } else {
      out << "chain for C_{" << cf_p << "," << cf_q << "}: [";
      for (std::size_t i = 0; i < chain.coefficients.size(); ++i)
        out << (i ? ", " : "") << chain.coefficients[i];
      out << "]\n";
      out << "boundary lens space: L(" << chain.boundary.order << ", " << chain.boundary.twist
          << ")\n";
      out << "recomposition exact: " << yes_no(report.recomposition_exact) << "\n";
      out << "coefficients >= 2: " << yes_no(report.coefficients_ge_2) << "\n";
      out << "negative definite: " << yes_no(report.negative_definite) << "\n";
      out << "|det| = p^2: " << yes_no(report.abs_det_equals_p_squared) << " (det = "
          << report.determinant.get_str() << ")\n";
    }
  });

  // sw en <n>
  auto* sw = app.add_subcommand("sw", "Seiberg-Witten invariants of standard families");
  sw->require_subcommand(1);
  std::int64_t sw_n = 0;
  auto* sw_en = sw->add_subcommand("en", "the elliptic surface E(n): (t - 1/t)^{n-2}");
  sw_en->add_option("n", sw_n, "n >= 2")->required();
  sw_en->callback([&] {
    const ManifoldState m = elliptic_surface(sw_n);
    if (json_mode)
      emit(poly_to_json(m.sw()), out);
    else
      out << "sw(E(" << sw_n << ")) = " << m.sw().to_string() << "\n";
  });

  // build -f <recipe.json>
  std::string build_file;
  auto* build_cmd = app.add_subcommand("build", "run a construction recipe through the ledger");
  build_cmd->add_option("-f,--file", build_file, "recipe JSON file")->required();
  build_cmd->callback([&] {
    const ConstructionResult result = build(recipe_from_json(read_json_file(build_file)));
    if (json_mode) {
      emit(result_to_json(result), out);
    } else {
      print_state(result.state, out);
      out << "top classes: " << result.top_classes.size()
          << "  |sw| there = " << result.top_value_abs.get_str() << "\n";
    }
  });

  // optimize <n>
  std::int64_t opt_n = 0;
  auto* optimize_cmd =
      app.add_subcommand("optimize", "recipe maximizing c1^2 at chi_h = n (no extra blowups)");
  optimize_cmd->add_option("n", opt_n, "n >= 3")->required();
  optimize_cmd->callback([&] {
    const ConstructionRecipe rec = optimize(opt_n);
    const RecipeStats stats = recipe_stats(rec);
    if (json_mode) {
      Json j;
      j["n"] = opt_n;
      j["chi_h"] = stats.chi_h;
      j["c1sq"] = stats.c1sq;
      j["recipe"] = recipe_to_json(rec);
      emit(j, out);
    } else {
      out << "chi_h = " << stats.chi_h << "  max c1^2 = " << stats.c1sq << "\n";
      out << "recipe: s = " << rec.s << " surgeries, fishtail = " << yes_no(rec.fishtail)
          << ", blowdown order p = " << stats.p << "\n";
    }
  });

  // geography <n> [--floor c]
  std::int64_t geo_n = 0;
  std::int64_t geo_floor = 0;
  auto* geography_cmd = app.add_subcommand(
      "geography", "every realized c1^2 between a floor and the maximum, with witnesses");
  geography_cmd->add_option("n", geo_n, "n >= 3")->required();
  geography_cmd->add_option("--floor", geo_floor, "lowest c1^2 to include (default 0)");
  geography_cmd->callback([&] {
    const std::vector<GeographyPoint> points = geography(geo_n, geo_floor);
    if (json_mode) {
      emit(geography_to_json(geo_n, geo_floor, points), out);
    } else {
      out << "chi_h = " << geo_n << ", c1^2 from " << geo_floor << " to "
          << (points.empty() ? geo_floor : points.back().c1sq) << "\n";
      for (const GeographyPoint& point : points) {
        out << "  c1^2 = " << point.c1sq << ": s = " << point.witness.s
            << ", fishtail = " << yes_no(point.witness.fishtail)
            << ", extra blowups = " << point.witness.extra_blowups
            << ", verified = " << yes_no(point.verified) << "\n";
      }
    }
  });

  // certify -f <recipe.json> --r r1,r2,...
  std::string certify_file;
  std::vector<std::int64_t> certify_r;
  auto* certify = app.add_subcommand(
      "certify", "distinctness certificate: one manifold per twist parameter r");
  certify->add_option("-f,--file", certify_file, "recipe JSON file giving (n, s, fishtail, extra)")
      ->required();
  certify->add_option("--r", certify_r, "comma-separated twist parameters, all >= 2, distinct")
      ->required()
      ->delimiter(',');
  certify->callback([&] {
    const ConstructionRecipe frame = recipe_from_json(read_json_file(certify_file));
    const DistinctnessCertificate cert = distinctness_certificate(
        frame.n, frame.s, frame.fishtail, frame.extra_blowups, certify_r);
    if (json_mode) {
      emit(certificate_to_json(cert), out);
    } else {
      out << "frame: n = " << cert.n << ", s = " << cert.s
          << ", fishtail = " << yes_no(cert.fishtail) << ", extra blowups = "
          << cert.extra_blowups << "\n";
      for (const CertificateEntry& entry : cert.entries) {
        out << "  r = " << entry.r << ": |sw top| = " << entry.top_value_abs.get_str()
            << ", e = " << entry.e << ", sigma = " << entry.sigma
            << ", verdict = " << verdict_name(entry.verdict) << "\n";
      }
      out << "fingerprints match: " << yes_no(cert.fingerprints_match) << "\n";
      out << "pairwise distinct: " << yes_no(cert.pairwise_distinct) << "\n";
      out << (cert.pass() ? "PASS" : "FAIL") << "\n";
    }
  });

  // Let a trailing --json (or any app-level flag) appear after a subcommand.
  auto enable_fallthrough = [](auto&& self, CLI::App* cmd) -> void {
    for (CLI::App* sub : cmd->get_subcommands([](const CLI::App*) { return true; })) {
      sub->fallthrough();
      self(self, sub);
    }
  };
  enable_fallthrough(enable_fallthrough, &app);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help and friends
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    if (json_mode)
      emit(Json{{"error", e.what()}}, out);
    else
      err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace swcalc::cli
