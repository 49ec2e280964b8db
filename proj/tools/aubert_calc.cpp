#include <exception>
#include <iostream>
#include <set>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "aubert/duality.hpp"
#include "aubert/jacquet.hpp"
#include "aubert/json_io.hpp"
#include "aubert/params.hpp"
#include "aubert/parse.hpp"
#include "aubert/segments.hpp"

namespace {

using namespace aubert;
using nlohmann::json;

struct Options {
  std::string alpha;
  int k = 0;
  int max_m = 0;
  bool as_json = false;
  std::size_t max_terms = 0;
  int threads = 1;
  int ell = -1;
  int dim_rho = 0;
  std::string text;   // expression / parameter / word argument
  std::string text2;  // second positional (mult target word)
};

RhoSigmaContext make_context(const Options& opt, bool alpha_required) {
  HalfInt alpha = HalfInt::half();
  if (!opt.alpha.empty())
    alpha = HalfInt::parse(opt.alpha);
  else if (alpha_required)
    throw CLI::ValidationError("--alpha", "this command requires --alpha {0,1/2,1}");
  RhoSigmaContext ctx = RhoSigmaContext::symbolic(alpha);
  if (opt.dim_rho > 0) {
    ctx.phi.dim = opt.dim_rho;
    ctx.rho.gl_size = opt.dim_rho;
  }
  if (opt.ell >= 0) {
    ctx.sigma.so_rank = opt.ell;
    ctx.sigma.background.clear();
    // one label per background factor keeps dimensions checkable
    for (int i = 0; i < opt.ell; ++i)
      ctx.sigma.background.push_back({"bg" + std::to_string(i + 1), 2, true});
    if (opt.ell == 0) ctx.sigma.background.clear();
  }
  ctx.validate();
  return ctx;
}

void emit(const json& j, const std::string& plain, bool as_json) {
  if (as_json)
    std::cout << j.dump() << "\n";
  else
    std::cout << plain << "\n";
}

int run_verify(const Options& opt) {
  RhoSigmaContext ctx = make_context(opt, true);
  int m_max = opt.max_m > 0 ? opt.max_m : 3;
  VerifyReport rep = verify_multiplicity_claims(m_max, ctx, opt.max_terms, opt.threads);
  for (const auto& c : rep.claims) {
    if (opt.as_json) {
      std::cout << to_json(c).dump() << "\n";
    } else {
      std::cout << (c.pass ? "PASS" : "FAIL") << " " << c.claim << " m=" << c.m
                << " expected=" << c.expected << " got=" << c.got << " terms=" << c.terms
                << "\n";
    }
  }
  return rep.all_pass() ? 0 : 1;
}

int dispatch(const std::string& cmd, const Options& opt) {
  if (cmd == "a2l") {
    RhoSigmaContext ctx = make_context(opt, false);
    AParameter psi = parse_a_parameter(opt.text, ctx);
    LParameter phi = a_to_l(psi);
    emit(to_json(phi), print(phi), opt.as_json);
    return 0;
  }
  if (cmd == "swap") {
    RhoSigmaContext ctx = make_context(opt, false);
    AParameter psi = swap_sl2_copies(parse_a_parameter(opt.text, ctx));
    emit(to_json(psi), print(psi), opt.as_json);
    return 0;
  }
  if (cmd == "is-image") {
    RhoSigmaContext ctx = make_context(opt, false);
    LParameter phi = parse_l_parameter(opt.text, ctx);
    auto psi = l_is_image_of_a(phi);
    if (psi)
      emit(json{{"image", true}, {"value", to_json(*psi)}}, print(*psi), opt.as_json);
    else
      emit(json{{"image", false}}, "none", opt.as_json);
    return 0;
  }
  if (cmd == "basepoint") {
    RhoSigmaContext ctx = make_context(opt, false);
    LanglandsData d = base_point(opt.k, ctx);
    emit(to_json(d), print(d), opt.as_json);
    return 0;
  }
  if (cmd == "dual") {
    RhoSigmaContext ctx = make_context(opt, true);
    DualOutcome o = theorem_dual(opt.k, ctx);
    emit(to_json(o), print(o), opt.as_json);
    return 0;
  }
  if (cmd == "dual-data") {
    RhoSigmaContext ctx = make_context(opt, true);
    auto d = dual_langlands_data(opt.k, ctx);
    if (d)
      emit(to_json(*d), print(*d), opt.as_json);
    else
      emit(json{{"data", nullptr}}, "none", opt.as_json);
    return 0;
  }
  if (cmd == "jacquet" || cmd == "mult") {
    InducedExpr e = parse_expr(opt.text);
    if (e.tail != TemperedAtom::Sigma && opt.alpha.empty())
      throw CLI::ValidationError("--alpha", "non-sigma tails require --alpha");
    RhoSigmaContext ctx = make_context(opt, false);
    FormalSum jac = full_jacquet(e, ctx, opt.max_terms);
    if (cmd == "jacquet") {
      emit(to_json(jac), print(jac), opt.as_json);
    } else {
      Word w = parse_word(opt.text2);
      Int c = multiplicity(w, jac);
      emit(json{{"multiplicity", c.str()}}, c.str(), opt.as_json);
    }
    return 0;
  }
  if (cmd == "closure") {
    RhoSigmaContext ctx = make_context(opt, true);
    std::set<Word> seed{parse_word(opt.text)};
    std::set<Word> closed = move_closure(seed, ctx);
    if (opt.as_json) {
      json arr = json::array();
      for (const auto& w : closed) {
        json word = json::array();
        for (const auto& x : w) word.push_back(x.str());
        arr.push_back(word);
      }
      std::cout << json{{"words", arr}}.dump() << "\n";
    } else {
      for (const auto& w : closed) std::cout << print(w) << "\n";
    }
    return 0;
  }
  if (cmd == "symmetry") {
    RhoSigmaContext ctx = make_context(opt, true);
    bool sym = symmetry_verdict(opt.k, ctx);
    emit(json{{"symmetric", sym}}, sym ? "true" : "false", opt.as_json);
    return 0;
  }
  if (cmd == "verify") return run_verify(opt);
  throw CLI::ValidationError("command", "unknown command " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact calculator for Arthur/Langlands parameter duality on SO(2n+1)"};
  app.require_subcommand(1);

  Options opt;
  auto add_common = [&](CLI::App* sub, bool needs_k, bool takes_text, bool takes_word) {
    sub->add_option("--alpha", opt.alpha, "reducibility point: 0, 1/2 or 1");
    if (needs_k) sub->add_option("--k", opt.k, "index k of phi*Sk*S2")->required();
    sub->add_option("--max-terms", opt.max_terms, "cap on formal-sum size");
    sub->add_option("--threads", opt.threads, "worker threads");
    sub->add_option("--ell", opt.ell, "rank of sigma's group (background becomes explicit)");
    sub->add_option("--dim-rho", opt.dim_rho, "dimension of rho's L-parameter");
    sub->add_flag("--json", opt.as_json, "emit canonical JSON");
    if (takes_text) sub->add_option("input", opt.text, "input expression")->required();
    if (takes_word) sub->add_option("word", opt.text2, "target word")->required();
  };

  add_common(app.add_subcommand("a2l", "A-parameter to L-parameter"), false, true, false);
  add_common(app.add_subcommand("swap", "interchange the two SL(2) factors"), false, true, false);
  add_common(app.add_subcommand("is-image", "invert the A->L map if possible"), false, true, false);
  add_common(app.add_subcommand("basepoint", "Langlands data of the base point"), true, false, false);
  add_common(app.add_subcommand("dual", "dual parameter from the case tables"), true, false, false);
  add_common(app.add_subcommand("dual-data", "explicit dual Langlands data"), true, false, false);
  add_common(app.add_subcommand("jacquet", "minimal-Levi Jacquet module"), false, true, false);
  add_common(app.add_subcommand("mult", "multiplicity of a word in a Jacquet module"), false, true,
             true);
  add_common(app.add_subcommand("closure", "move closure of a word"), false, true, false);
  add_common(app.add_subcommand("verify", "check the recorded multiplicity-one claims"), false,
             false, false);
  add_common(app.add_subcommand("symmetry", "is the dual parameter the swapped one?"), true, false,
             false);
  app.get_subcommand("verify")->add_option("--max-m", opt.max_m, "largest m to check");

  try {
    app.parse(argc, argv);
    return dispatch(app.get_subcommands().front()->get_name(), opt);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const aubert::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
