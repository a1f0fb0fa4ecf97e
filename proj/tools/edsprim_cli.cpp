// Command-line front end. Talks to the library exclusively through the C API
// in edsprim.h; --json prints the library's deterministic JSON verbatim,
// otherwise a short human-readable rendering of the same document.
//
// Exit codes: 0 = checks pass / verdict computed, 1 = a check failed,
// 2 = usage or input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <string>

#include "edsprim.h"

namespace {

using nlohmann::json;

struct CtxGuard {
  edsp_ctx* ctx = edsp_ctx_new();
  ~CtxGuard() { edsp_ctx_free(ctx); }
};

struct OutGuard {
  char* s = nullptr;
  ~OutGuard() { edsp_string_free(s); }
};

int fail_with(edsp_ctx* ctx, edsp_status st, bool as_json) {
  const char* kind = "internal";
  switch (st) {
    case EDSP_EINVAL: kind = "invalid-argument"; break;
    case EDSP_ENOTONCURVE: kind = "point-not-on-curve"; break;
    case EDSP_ETORSION: kind = "torsion-point"; break;
    case EDSP_EUNSUPPORTED: kind = "unsupported-index"; break;
    case EDSP_EPRECISION: kind = "precision-unreachable"; break;
    case EDSP_EHYPOTHESIS: kind = "hypothesis-not-met"; break;
    default: break;
  }
  if (as_json) {
    json err;
    err["error"]["kind"] = kind;
    err["error"]["detail"] = edsp_ctx_last_error(ctx);
    std::cout << err.dump() << "\n";
  } else {
    std::cerr << "error (" << kind << "): " << edsp_ctx_last_error(ctx) << "\n";
  }
  return 2;
}

void print_kv(const json& j, std::initializer_list<const char*> keys) {
  for (const char* k : keys)
    if (j.contains(k)) std::cout << k << " = " << j[k].dump() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"elliptic divisibility sequences on y^2 = x^3 + a x: terms, primitive divisors, heights, criteria"};
  app.require_subcommand(1);

  bool as_json = false;
  std::string precision, cache_dir, threads, trial_bound, config_path = "edsprim.conf";
  app.add_flag("--json", as_json, "emit the library's JSON document");
  app.add_option("--precision", precision, "mantissa bits for heights/criteria");
  app.add_option("--cache", cache_dir, "polynomial cache directory");
  app.add_option("--threads", threads, "worker threads for searches");
  app.add_option("--trial-bound", trial_bound, "witness-prime trial division bound");
  app.add_option("--config", config_path, "key = value config file (flags override)");

  std::string a_opt, x_opt, y_opt;
  long n_opt = 0;

  auto* eds = app.add_subcommand("eds", "sequence term A_n/B_n and g_n");
  eds->add_option("--a", a_opt)->required();
  eds->add_option("--x", x_opt)->required();
  eds->add_option("--y", y_opt)->required();
  eds->add_option("--n", n_opt)->required();

  auto* primdiv = app.add_subcommand("primdiv", "primitive-divisor report for B_n");
  primdiv->add_option("--a", a_opt)->required();
  primdiv->add_option("--x", x_opt)->required();
  primdiv->add_option("--y", y_opt)->required();
  primdiv->add_option("--n", n_opt)->required();

  bool graded = false;
  auto* divp = app.add_subcommand("divpoly", "division polynomial p_n");
  divp->add_option("--n", n_opt)->required();
  divp->add_option("--a", a_opt);
  divp->add_flag("--graded", graded, "homogeneous (X, Y) = (x^2, a) form");

  auto* psiq = app.add_subcommand("psiq", "quotient polynomial Psi_n(X, Y)");
  psiq->add_option("--n", n_opt)->required();

  double target_error = 1e-6;
  auto* height = app.add_subcommand("height", "canonical height with certified error");
  height->add_option("--a", a_opt)->required();
  height->add_option("--x", x_opt)->required();
  height->add_option("--y", y_opt)->required();
  height->add_option("--error", target_error, "target error radius");

  std::string check;
  auto* crit = app.add_subcommand("criteria", "inequality decision engine");
  crit->add_option("--check", check, "dis1|pari|2mk|eq11|m")->required();
  crit->add_option("--n", n_opt)->required();
  crit->add_option("--a", a_opt, "specific a; omit for every |a| >= 2");

  bool knumeric = false, kbound = false;
  auto* kconst = app.add_subcommand("kconst", "torsion-separation constant K_n");
  kconst->add_option("--n", n_opt)->required();
  kconst->add_flag("--numeric", knumeric, "certified numeric roots (2 <= n <= 17)");
  kconst->add_flag("--bound", kbound, "closed-form lower bound");

  auto* search = app.add_subcommand("search-exceptional", "bounded exceptional-point search");

  long box = 100, cap = 434;
  auto* thue = app.add_subcommand("thue-box", "box search for Psi_n(X,Y) = +-2^k");
  thue->add_option("--n", n_opt)->default_val(30);
  thue->add_option("--box", box);
  thue->add_option("--cap", cap, "exponent cap");

  auto* verify = app.add_subcommand("verify-paper", "reproduce the bundled findings");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  CtxGuard guard;
  edsp_ctx* ctx = guard.ctx;

  // config file first (if present), then flag overrides
  {
    std::FILE* f = std::fopen(config_path.c_str(), "r");
    if (f) {
      char line[512];
      while (std::fgets(line, sizeof line, f)) {
        std::string s(line);
        auto hash = s.find('#');
        if (hash != std::string::npos) s = s.substr(0, hash);
        auto eq = s.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string t) {
          size_t b = t.find_first_not_of(" \t\r\n");
          size_t e2 = t.find_last_not_of(" \t\r\n");
          return b == std::string::npos ? std::string() : t.substr(b, e2 - b + 1);
        };
        std::string k = trim(s.substr(0, eq)), v = trim(s.substr(eq + 1));
        if (!k.empty() && !v.empty()) edsp_ctx_set_option(ctx, k.c_str(), v.c_str());
      }
      std::fclose(f);
    }
  }
  if (!precision.empty()) edsp_ctx_set_option(ctx, "precision", precision.c_str());
  if (!cache_dir.empty()) edsp_ctx_set_option(ctx, "cache", cache_dir.c_str());
  if (!threads.empty()) edsp_ctx_set_option(ctx, "threads", threads.c_str());
  if (!trial_bound.empty()) edsp_ctx_set_option(ctx, "trial-bound", trial_bound.c_str());

  OutGuard out;
  edsp_status st = EDSP_OK;
  int rc = 0;

  if (eds->parsed()) {
    st = edsp_eds_term(ctx, a_opt.c_str(), x_opt.c_str(), y_opt.c_str(), n_opt, &out.s);
  } else if (primdiv->parsed()) {
    st = edsp_primdiv(ctx, a_opt.c_str(), x_opt.c_str(), y_opt.c_str(), n_opt, &out.s);
  } else if (divp->parsed()) {
    if (!graded && a_opt.empty()) {
      std::cerr << "divpoly: need --a or --graded\n";
      return 2;
    }
    st = edsp_divpoly(ctx, n_opt, a_opt.c_str(), graded ? 1 : 0, &out.s);
  } else if (psiq->parsed()) {
    st = edsp_psi_quotient(ctx, n_opt, &out.s);
  } else if (height->parsed()) {
    st = edsp_height(ctx, a_opt.c_str(), x_opt.c_str(), y_opt.c_str(), target_error, &out.s);
  } else if (crit->parsed()) {
    st = edsp_criteria(ctx, check.c_str(), n_opt, a_opt.empty() ? nullptr : a_opt.c_str(), &out.s);
  } else if (kconst->parsed()) {
    if (knumeric == kbound) {
      std::cerr << "kconst: pass exactly one of --numeric / --bound\n";
      return 2;
    }
    st = edsp_kconst(ctx, n_opt, knumeric ? 1 : 0, &out.s);
  } else if (search->parsed()) {
    st = edsp_search_exceptional(ctx, &out.s);
  } else if (thue->parsed()) {
    st = edsp_thue_box(ctx, n_opt, box, cap, &out.s);
  } else if (verify->parsed()) {
    st = edsp_verify_paper(ctx, &out.s);
  }

  if (st != EDSP_OK) return fail_with(ctx, st, as_json);

  json j = json::parse(out.s);
  if (as_json) {
    std::cout << out.s << "\n";
  } else if (verify->parsed()) {
    for (const auto& c : j["checks"]) {
      std::cout << (c["pass"].get<bool>() ? "PASS  " : "FAIL  ")
                << c["name"].get<std::string>();
      if (c.contains("detail")) std::cout << "  [" << c["detail"].get<std::string>() << "]";
      std::cout << "\n";
    }
    std::cout << (j["all_pass"].get<bool>() ? "all checks passed" : "SOME CHECKS FAILED")
              << "\n";
  } else if (divp->parsed() || psiq->parsed()) {
    std::cout << j["poly"].get<std::string>() << "\n";
  } else if (thue->parsed()) {
    std::cout << "hits: " << j["hits"].size()
              << "  only trivial: " << (j["onlyTrivialSolutions"].get<bool>() ? "yes" : "no")
              << "\n";
    for (const auto& h : j["hits"])
      std::cout << "  X=" << h["X"].dump() << " Y=" << h["Y"].dump() << " k=" << h["k"].dump()
                << (h["trivial"].get<bool>() ? " (trivial)" : " (NONTRIVIAL)") << "\n";
  } else if (search->parsed()) {
    std::cout << j["hits"].size() << " hits\n";
    for (const auto& h : j["hits"])
      std::cout << "  a=" << h["a"].dump() << " x=" << h["x"].dump() << " y=" << h["y"].dump()
                << " hhat=" << h["hhat"].get<std::string>() << "\n";
  } else {
    print_kv(j, {"n", "A", "B", "g", "delta", "hasPrimitive", "strippedCofactor", "witness",
                 "hhat", "errorRadius", "iterations", "naiveHeight", "check", "p", "m", "a",
                 "lhs", "rhs", "holds", "verdict", "value", "method"});
  }

  if (verify->parsed() && !j["all_pass"].get<bool>()) rc = 1;
  if (thue->parsed() && !j["onlyTrivialSolutions"].get<bool>()) rc = 1;
  return rc;
}
