#include "edsprim.h"

#include <cstring>
#include <cstdlib>
#include <memory>
#include <string>

#include "criteria/criteria.hpp"
#include "harness/cache.hpp"
#include "harness/config.hpp"
#include "harness/jsonfmt.hpp"
#include "harness/search.hpp"
#include "harness/verify.hpp"
#include "lattice/roots.hpp"
#include "psiq/psi_quotient.hpp"

using namespace edsp;

struct edsp_ctx {
  Options opt;
  std::string last_error;
};

namespace {

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

Rat parse_rat(const char* s) {
  if (!s || !*s) throw std::invalid_argument("empty rational");
  Rat r;
  if (mpq_set_str(r.get_mpq_t(), s, 10) != 0)
    throw std::invalid_argument(std::string("malformed rational: ") + s);
  r.canonicalize();
  return r;
}

Int parse_int(const char* s) {
  if (!s || !*s) throw std::invalid_argument("empty integer");
  Int v;
  if (mpz_set_str(v.get_mpz_t(), s, 10) != 0)
    throw std::invalid_argument(std::string("malformed integer: ") + s);
  return v;
}

EdsSequence make_sequence(const char* a, const char* x, const char* y) {
  Curve c = Curve::short_form(parse_int(a));
  CurvePoint p(parse_rat(x), parse_rat(y));
  return EdsSequence(std::move(c), std::move(p));
}

template <typename F>
edsp_status run(edsp_ctx* ctx, char** json_out, F&& body) {
  if (!ctx) return EDSP_EINVAL;
  if (json_out) *json_out = nullptr;
  try {
    Json j = body();
    if (json_out) *json_out = dup_string(dump_sorted(j));
    return EDSP_OK;
  } catch (const PointNotOnCurve& e) {
    ctx->last_error = e.what();
    return EDSP_ENOTONCURVE;
  } catch (const TorsionPoint& e) {
    ctx->last_error = e.what();
    return EDSP_ETORSION;
  } catch (const PrecisionUnreachable& e) {
    ctx->last_error = e.what();
    return EDSP_EPRECISION;
  } catch (const HypothesisNotMet& e) {
    ctx->last_error = e.what();
    return EDSP_EHYPOTHESIS;
  } catch (const InvalidIndex& e) {
    ctx->last_error = e.what();
    return EDSP_EUNSUPPORTED;
  } catch (const UnsupportedIndex& e) {
    ctx->last_error = e.what();
    return EDSP_EUNSUPPORTED;
  } catch (const std::invalid_argument& e) {
    ctx->last_error = e.what();
    return EDSP_EINVAL;
  } catch (const std::logic_error& e) {
    ctx->last_error = e.what();
    return EDSP_EINTERNAL;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return EDSP_EINTERNAL;
  }
}

Json criterion_json(const CriterionReport& rep) {
  Json j;
  j["check"] = rep.name;
  j["lhs"] = json_real(rep.lhs);
  j["rhs"] = json_real(rep.rhs);
  j["holds"] = rep.holds;
  j["verdict"] = rep.verdict == Verdict::RulesOutException ? "RulesOutException"
                                                           : "Inconclusive";
  return j;
}

}  // namespace

extern "C" {

edsp_ctx* edsp_ctx_new(void) { return new edsp_ctx; }

void edsp_ctx_free(edsp_ctx* ctx) { delete ctx; }

edsp_status edsp_ctx_set_option(edsp_ctx* ctx, const char* key, const char* value) {
  if (!ctx || !key || !value) return EDSP_EINVAL;
  try {
    std::string k = key;
    if (k == "precision") ctx->opt.precision = std::stol(value);
    else if (k == "cache") ctx->opt.cache_dir = value;
    else if (k == "threads") ctx->opt.threads = std::stoi(value);
    else if (k == "trial-bound") ctx->opt.trial_bound = std::stoul(value);
    else {
      ctx->last_error = "unknown option: " + k;
      return EDSP_EINVAL;
    }
    if (ctx->opt.precision < 64 || ctx->opt.precision > 1 << 20) {
      ctx->last_error = "precision out of range";
      return EDSP_EINVAL;
    }
    return EDSP_OK;
  } catch (const std::exception& e) {
    ctx->last_error = e.what();
    return EDSP_EINVAL;
  }
}

const char* edsp_ctx_last_error(const edsp_ctx* ctx) {
  return ctx ? ctx->last_error.c_str() : "null context";
}

void edsp_string_free(char* s) { std::free(s); }

const char* edsp_version(void) { return "0.1.0"; }

edsp_status edsp_eds_term(edsp_ctx* ctx, const char* a, const char* x,
                          const char* y, long n, char** json_out) {
  return run(ctx, json_out, [&]() {
    if (n < 1) throw InvalidIndex("n must be >= 1");
    EdsSequence seq = make_sequence(a, x, y);
    EdsTerm t = seq.term(static_cast<unsigned>(n));
    Json j;
    j["n"] = n;
    j["A"] = json_int(t.A);
    j["B"] = json_int(t.B);
    j["g"] = json_int(t.g);
    j["delta"] = seq.delta();
    return j;
  });
}

edsp_status edsp_primdiv(edsp_ctx* ctx, const char* a, const char* x,
                         const char* y, long n, char** json_out) {
  return run(ctx, json_out, [&]() {
    if (n < 1) throw InvalidIndex("n must be >= 1");
    EdsSequence seq = make_sequence(a, x, y);
    auto rep = seq.primitive_divisor(static_cast<unsigned>(n), ctx->opt.trial_bound);
    Json j;
    j["n"] = n;
    j["hasPrimitive"] = rep.has_primitive;
    j["strippedCofactor"] = json_int(rep.stripped_cofactor);
    if (rep.witness) j["witness"] = json_int(*rep.witness);
    j["B"] = json_int(seq.B(static_cast<unsigned>(n)));
    return j;
  });
}

edsp_status edsp_divpoly(edsp_ctx* ctx, long n, const char* a, int graded,
                         char** json_out) {
  return run(ctx, json_out, [&]() {
    if (n < 1) throw InvalidIndex("n must be >= 1");
    Json j;
    j["n"] = n;
    std::unique_ptr<PolyCache> cache;
    if (!ctx->opt.cache_dir.empty())
      cache = std::make_unique<PolyCache>(ctx->opt.cache_dir);
    if (graded) {
      std::string key = "GRADED " + std::to_string(n);
      HomogPoly h;
      if (cache) {
        auto hit = cache->load_homog(key);
        h = hit ? *hit : graded_p(static_cast<unsigned>(n));
        if (!hit) cache->store(key, h);
      } else {
        h = graded_p(static_cast<unsigned>(n));
      }
      j["graded"] = true;
      j["degree"] = h.degree();
      j["poly"] = h.str();
      Json coeffs = Json::array();
      for (const auto& cc : h.coeffs()) coeffs.push_back(json_int(cc));
      j["coefficients"] = coeffs;
    } else {
      Int av = parse_int(a);
      std::string key = "PSI " + std::to_string(n) + " " + av.get_str();
      IntPoly p;
      if (cache) {
        auto hit = cache->load_intpoly(key);
        p = hit ? *hit : psi(static_cast<unsigned>(n), av);
        if (!hit) cache->store(key, p);
      } else {
        p = psi(static_cast<unsigned>(n), av);
      }
      j["graded"] = false;
      j["a"] = json_int(av);
      j["degree"] = p.degree();
      j["poly"] = p.str();
      Json coeffs = Json::array();
      for (const auto& cc : p.coeffs()) coeffs.push_back(json_int(cc));
      j["coefficients"] = coeffs;
    }
    return j;
  });
}

edsp_status edsp_psi_quotient(edsp_ctx* ctx, long n, char** json_out) {
  return run(ctx, json_out, [&]() {
    if (n < 3) throw InvalidIndex("psi quotient needs n >= 3");
    std::unique_ptr<PolyCache> cache;
    if (!ctx->opt.cache_dir.empty())
      cache = std::make_unique<PolyCache>(ctx->opt.cache_dir);
    std::string key = "PSI_QUOTIENT " + std::to_string(n);
    HomogPoly q;
    if (cache) {
      auto hit = cache->load_homog(key);
      q = hit ? *hit : psi_quotient(static_cast<unsigned>(n)).poly;
      if (!hit) cache->store(key, q);
    } else {
      q = psi_quotient(static_cast<unsigned>(n)).poly;
    }
    Json j;
    j["n"] = n;
    j["degree"] = q.degree();
    j["poly"] = q.str();
    Json coeffs = Json::array();
    for (const auto& cc : q.coeffs()) coeffs.push_back(json_int(cc));
    j["coefficients"] = coeffs;
    return j;
  });
}

edsp_status edsp_height(edsp_ctx* ctx, const char* a, const char* x,
                        const char* y, double target_error, char** json_out) {
  return run(ctx, json_out, [&]() {
    Curve c = Curve::short_form(parse_int(a));
    CurvePoint p(parse_rat(x), parse_rat(y));
    auto est = canonical_height(c, p, target_error, 18,
                                static_cast<mpfr_prec_t>(ctx->opt.precision));
    Json j;
    j["hhat"] = json_real(est.value);
    j["errorRadius"] = json_real(est.error_radius);
    j["iterations"] = est.iterations;
    j["naiveHeight"] = json_int(naive_height(p.x()));
    return j;
  });
}

edsp_status edsp_criteria(edsp_ctx* ctx, const char* check, long n, const char* a,
                          char** json_out) {
  return run(ctx, json_out, [&]() -> Json {
    if (!check) throw std::invalid_argument("check name required");
    std::string ck = check;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(ctx->opt.precision);
    if (ck == "dis1" || ck == "pari") {
      if (n < 5) throw InvalidIndex("n must be >= 5");
      CriterionReport rep;
      Json j;
      if (a && *a) {
        Int av = parse_int(a);
        auto low = hhat_lower_bound(av, prec);
        rep = decide_5m(av, static_cast<unsigned>(n), low.value, prec);
        j["a"] = json_int(av);
      } else {
        rep = decide_5m_range(static_cast<unsigned>(n), Int(2), Int(0), prec);
        j["a"] = "all |a| >= 2";
      }
      Json r = criterion_json(rep);
      r["n"] = n;
      for (auto& [k, val] : j.items()) r[k] = val;
      return r;
    }
    if (ck == "2mk" || ck == "eq11" || ck == "m") {
      auto spf = smallest_prime_factor(Int(n), 1'000'000);
      if (!spf) throw std::invalid_argument("n must be > 1");
      long p = spf->get_si();
      long m = n / p;
      CriterionReport rep;
      if (ck == "2mk") rep = decide_mp(p, m, std::nullopt, prec);
      else if (ck == "eq11") rep = check_eq11(p, m, prec);
      else rep = check_m_bound(p, m, prec);
      Json r = criterion_json(rep);
      r["n"] = n;
      r["p"] = p;
      r["m"] = m;
      return r;
    }
    throw std::invalid_argument("unknown check: " + ck);
  });
}

edsp_status edsp_kconst(edsp_ctx* ctx, long n, int numeric, char** json_out) {
  return run(ctx, json_out, [&]() {
    if (n < 2) throw InvalidIndex("K_n needs n >= 2");
    SeparationConstant k = numeric
        ? K_numeric(static_cast<unsigned>(n),
                    static_cast<mpfr_prec_t>(std::max(256L, ctx->opt.precision)))
        : K_lower_bound(static_cast<unsigned>(n),
                        static_cast<mpfr_prec_t>(ctx->opt.precision));
    Json j;
    j["n"] = n;
    j["value"] = json_real(k.value);
    j["method"] = k.method == SeparationMethod::NumericRoots ? "NumericRoots" : "PaperBound";
    return j;
  });
}

edsp_status edsp_search_exceptional(edsp_ctx* ctx, char** json_out) {
  return run(ctx, json_out, [&]() {
    auto res = search_exceptional_35(ctx->opt.threads);
    Json hits = Json::array();
    for (const auto& h : res.hits) {
      Json e;
      e["a"] = json_int(h.a);
      e["x"] = json_rat(h.x);
      e["y"] = json_rat(h.y);
      e["hhat"] = Real::of(h.hhat, 64).str(17);
      e["threshold"] = Real::of(h.threshold, 64).str(17);
      hits.push_back(e);
    }
    Json j;
    j["aBound"] = res.a_bound;
    j["hits"] = hits;
    j["candidatesChecked"] = res.candidates_checked;
    return j;
  });
}

edsp_status edsp_thue_box(edsp_ctx* ctx, long n, long box, long exponent_cap,
                          char** json_out) {
  return run(ctx, json_out, [&]() {
    if (n < 3 || box < 1 || exponent_cap < 0)
      throw std::invalid_argument("thue_box: need n >= 3, box >= 1, cap >= 0");
    auto hits = thue_box_search(static_cast<unsigned>(n), box,
                                static_cast<unsigned>(exponent_cap), ctx->opt.threads);
    Json arr = Json::array();
    bool nontrivial = false;
    for (const auto& h : hits) {
      Json e;
      e["X"] = json_int(h.X);
      e["Y"] = json_int(h.Y);
      e["k"] = h.k;
      e["trivial"] = h.trivial;
      nontrivial |= !h.trivial;
      arr.push_back(e);
    }
    Json j;
    j["n"] = n;
    j["box"] = box;
    j["exponentCap"] = exponent_cap;
    j["hits"] = arr;
    j["onlyTrivialSolutions"] = !nontrivial;
    return j;
  });
}

edsp_status edsp_verify_paper(edsp_ctx* ctx, char** json_out) {
  return run(ctx, json_out, [&]() {
    auto checks = verify_paper_examples(ctx->opt.threads);
    return verify_report_json(checks);
  });
}

}  // extern "C"
