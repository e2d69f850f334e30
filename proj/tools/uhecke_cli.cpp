// Command-line front end: compute-and-print commands for the public
// operations plus named verification suites with JSON reports.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "uhecke/doubling.hpp"
#include "uhecke/hecke.hpp"
#include "uhecke/satake.hpp"
#include "uhecke/verify.hpp"
#include "uhecke/weilrep.hpp"

using json = nlohmann::ordered_json;
using namespace uhecke;

namespace {

int max_rank() {
  const char* env = std::getenv("UHECKE_MAX_R");
  if (env == nullptr) return 4;
  try {
    int v = std::stoi(env);
    if (v >= 1) return v;
  } catch (...) {
  }
  return 4;
}

Rat parse_half_integer(const std::string& tok) {
  size_t slash = tok.find('/');
  if (slash == std::string::npos) return Rat(std::stol(tok));
  Rat r(std::stol(tok.substr(0, slash)), std::stol(tok.substr(slash + 1)));
  r.canonicalize();
  return r;
}

// "1/2,0,-1" -> half-integer parameters; "sym" -> symbolic of rank r.
SatakeParams parse_sigma(const std::string& spec, int r) {
  if (spec == "sym") return SatakeParams::symbolic(r);
  std::vector<Rat> entries;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) entries.push_back(parse_half_integer(tok));
  return SatakeParams::from_half_integers(entries);
}

std::vector<GenIndex> parse_word(const std::string& spec) {
  std::vector<GenIndex> word;
  if (spec.empty() || spec == "e") return word;
  std::stringstream ss(spec);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) word.push_back(std::stoi(tok));
  return word;
}

std::string rf(const RFunc& f) { return f.reduced().str(); }

json hecke_to_json(const HeckeElement& a) {
  json terms = json::array();
  for (const auto& [w, c] : a.coeffs())
    terms.push_back({{"element", w.str()}, {"coeff", rf(c)}});
  return terms;
}

json params_to_json(const SatakeParams& s) {
  json out = json::array();
  for (const RFunc& u : s.u) out.push_back(rf(u));
  return out;
}

json report_to_json(const Report& rep) {
  json checks = json::array();
  for (const auto& c : rep.checks) {
    json rec = {{"id", c.id}, {"pass", c.pass}, {"lhs", c.lhs},
                {"rhs", c.rhs}};
    if (!c.notes.empty()) rec["notes"] = c.notes;
    checks.push_back(rec);
  }
  return json{{"suite", rep.suite},
              {"checks", checks},
              {"summary",
               {{"passed", rep.passed()},
                {"failed", rep.failed()},
                {"pass", rep.all_pass()}}}};
}

void emit(const json& out, const std::string& path) {
  std::string text = out.dump(2);
  std::cout << text << "\n";
  if (!path.empty()) {
    std::ofstream f(path);
    f << text << "\n";
  }
}

struct Options {
  int r = 1;
  std::string eps = "-";
  int c = 0;
  std::string sigma;
  int d = 1;
  long p = 3;
  std::string suite;
  int rmax = 3;
  std::string json_out;
  unsigned seed = 1;
  std::string u_word, v_word;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_option("--r", o.r, "rank");
  cmd->add_option("--eps", o.eps, "sign: + or -");
  cmd->add_option("--c", o.c, "conductor exponent of psi_F");
  cmd->add_option("--sigma", o.sigma,
                  "comma list of half-integers, or 'sym'");
  cmd->add_option("--d", o.d, "hermitian space half-dimension");
  cmd->add_option("--p", o.p, "residue characteristic (3 or 5)");
  cmd->add_option("--suite", o.suite, "verification suite name");
  cmd->add_option("--rmax", o.rmax, "rank bound for suites");
  cmd->add_option("--json-out", o.json_out, "also write the JSON here");
  cmd->add_option("--seed", o.seed, "seed for sampled checks");
  cmd->add_option("--u", o.u_word, "left factor as generator word, e.g. 0,1");
  cmd->add_option("--v", o.v_word, "right factor as generator word");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Hecke-algebra, doubling-L-factor and Weil-model "
               "calculator"};
  app.require_subcommand(1);
  Options o;
  std::string cmd_name;
  for (const char* name :
       {"lfactor", "epsilon", "zeta", "gk", "intertwine", "eigenvector",
        "idempotent", "hecke-mul", "theta-params", "classify", "ideal-member",
        "weil-verify", "verify"}) {
    CLI::App* sub = app.add_subcommand(name);
    add_common(sub, o);
    sub->callback([&cmd_name, name] { cmd_name = name; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (o.r > max_rank()) {
      std::cerr << "--r exceeds UHECKE_MAX_R (" << max_rank() << ")\n";
      return 2;
    }
    Sign eps = sign_from_string(o.eps);
    int exit_code = 0;
    json out;

    if (cmd_name == "lfactor") {
      DoublingContext ctx{o.r, eps, o.c};
      out = {{"result", rf(l_factor(ctx, parse_sigma(o.sigma, o.r)))}};
    } else if (cmd_name == "epsilon") {
      DoublingContext ctx{o.r, eps, o.c};
      out = {{"result", rf(epsilon_factor(ctx, parse_sigma(o.sigma, o.r)))}};
    } else if (cmd_name == "zeta") {
      DoublingContext ctx{o.r, eps, o.c};
      out = {{"result", rf(zeta_value(ctx, parse_sigma(o.sigma, o.r)))}};
    } else if (cmd_name == "gk") {
      DoublingContext ctx{o.r, eps, o.c};
      out = {{"product", rf(gk_constant(ctx, GKForm::product))},
             {"closed", rf(gk_constant(ctx, GKForm::closed))}};
    } else if (cmd_name == "intertwine") {
      DoublingContext ctx{o.r, eps, o.c};
      out = {{"constant", rf(intertwining_constant(ctx))},
             {"normalized", rf(normalized_intertwining_constant(ctx))}};
    } else if (cmd_name == "eigenvector") {
      out = {{"r", o.r},
             {"eps", std::string(1, sign_char(eps))},
             {"dimension", eigenspace_dimension(o.r, eps)},
             {"coefficients", hecke_to_json(eigenvector(o.r, eps))}};
    } else if (cmd_name == "idempotent") {
      out = {{"coefficients", hecke_to_json(idempotent(o.r, eps))}};
    } else if (cmd_name == "hecke-mul") {
      SignedPermutation u = evaluate_word(o.r, parse_word(o.u_word));
      SignedPermutation v = evaluate_word(o.r, parse_word(o.v_word));
      out = {{"u", u.str()},
             {"v", v.str()},
             {"product", hecke_to_json(t_mul(u, v))}};
    } else if (cmd_name == "theta-params") {
      HermitianSpaceDesc V{o.d, eps};
      int m = std::min(o.r, V.witt());
      ThetaParamPair tp =
          theta_parameters(o.r, V, parse_sigma(o.sigma, m));
      out = {{"left", params_to_json(tp.left)},
             {"right", params_to_json(tp.right)},
             {"left_class",
              repr_class_name(classify(tp.left, Sign::minus))}};
    } else if (cmd_name == "classify") {
      SatakeParams sigma = parse_sigma(o.sigma, o.r);
      out = {{"result", repr_class_name(classify(sigma, eps))}};
    } else if (cmd_name == "ideal-member") {
      HermitianSpaceDesc V{o.d, eps};
      SymLaurent F =
          symmetrize(o.r, LPoly::variable("T1")) +
          SymLaurent::constant(o.r, Rat(1));
      TensorElement diag{o.r, V.witt(),
                         {{F, SymLaurent::constant(V.witt(), Rat(1))},
                          {SymLaurent::constant(o.r, Rat(-1)), F}}};
      out = {{"diagonal_witness_member", ideal_member(diag, V, o.r)}};
    } else if (cmd_name == "weil-verify") {
      GeneratorLemmaReport g = verify_generator_lemma(o.p, o.d, eps);
      out = {{"check", "generator-lemma"},
             {"params", {{"p", g.p}, {"d", g.d},
                         {"eps", std::string(1, sign_char(g.eps))}}},
             {"support_identity", g.support_identity},
             {"operator_identity", g.operator_identity},
             {"pass", g.pass}};
      if (!g.counterexample.empty()) out["counterexample"] = g.counterexample;
      if (!g.pass) exit_code = 1;
    } else if (cmd_name == "verify") {
      if (o.suite.empty()) {
        std::cerr << "--suite is required for verify\n";
        return 2;
      }
      SuiteOptions opts{o.rmax, o.p, o.seed};
      Report rep = run_suite(o.suite, opts);
      out = report_to_json(rep);
      if (!rep.all_pass()) exit_code = 1;
    }

    emit(out, o.json_out);
    return exit_code;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
