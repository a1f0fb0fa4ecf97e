#include "harness/verify.hpp"

#include <sstream>

#include "criteria/criteria.hpp"
#include "harness/fixtures.hpp"
#include "harness/search.hpp"
#include "lattice/roots.hpp"
#include "psiq/psi_quotient.hpp"

namespace edsp {

namespace {

void add(std::vector<CheckResult>& v, std::string name, bool pass, std::string detail = "") {
  v.push_back({std::move(name), pass, std::move(detail)});
}

}  // namespace

std::vector<CheckResult> verify_paper_examples(int threads) {
  std::vector<CheckResult> v;

  // B39: no primitive divisor on the Ingram curve
  {
    const Fixture& f = fixture("b39_ingram");
    EdsSequence seq(f.curve(), f.curve_point());
    auto rep = seq.primitive_divisor(39);
    add(v, "b39_no_primitive_divisor", !rep.has_primitive,
        "stripped=" + rep.stripped_cofactor.get_str());
  }

  // B35 on E_{-12}, (6,12): primitive, 139 divides the stripped cofactor
  {
    const Fixture& f = fixture("e_minus12_p6");
    EdsSequence seq(f.curve(), f.curve_point());
    auto rep = seq.primitive_divisor(35);
    bool d139 = rep.has_primitive &&
                mpz_divisible_ui_p(rep.stripped_cofactor.get_mpz_t(), 139);
    add(v, "b35_primitive_divisor_139", d139,
        rep.witness ? "witness=" + rep.witness->get_str() : "no witness below bound");
  }

  // exceptional search: exactly the four known points
  {
    auto res = search_exceptional_35(threads);
    bool ok = res.hits.size() == 4;
    if (ok) {
      auto h = [&](size_t i, long a, long x) {
        return res.hits[i].a == a && res.hits[i].x == Rat(x);
      };
      ok = h(0, -12, -2) && h(1, -12, 6) && h(2, 180, 6) && h(3, 180, 30);
    }
    std::ostringstream os;
    for (auto& hh : res.hits) os << "(" << hh.a.get_str() << "," << hh.x.get_str() << ") ";
    add(v, "exceptional_search_hits", ok, os.str());
  }

  // Psi_3 closed form and deg Psi_30
  {
    auto q3 = psi_quotient(3);
    HomogPoly expect(2, {Int(-1), Int(6), Int(3)});
    add(v, "psi_quotient_3_closed_form", q3.poly == expect, q3.poly.str());
    add(v, "psi_quotient_30_degree_144", psi_quotient(30).poly.degree() == 144);
  }

  // h/j closed forms up to 13
  {
    bool ok = true;
    for (unsigned k = 1; k <= 6; ++k) {
      Int h2k = psi(2 * k, Int(-1)).eval(Int(1));
      Int h2k1 = psi(2 * k + 1, Int(-1)).eval(Int(1));
      Int expect_h2k = (k % 2 ? 1 : -1) * Int(static_cast<long>(k));
      mpz_mul_2exp(expect_h2k.get_mpz_t(), expect_h2k.get_mpz_t(), k * k);
      Int expect_h2k1 = Int(k % 2 ? -1 : 1);
      mpz_mul_2exp(expect_h2k1.get_mpz_t(), expect_h2k1.get_mpz_t(), k * (k + 1));
      ok &= h2k == expect_h2k && h2k1 == expect_h2k1;
      Int j2k = psi(2 * k, Int(1)).eval(Int(0));
      Int j2k1 = psi(2 * k + 1, Int(1)).eval(Int(0));
      ok &= j2k == (k % 2 ? 1 : -1) * Int(2L * k) && j2k1 == Int(k % 2 ? -1 : 1);
    }
    add(v, "hj_closed_forms", ok);
  }

  // K3 and K13 numerics
  {
    auto k3 = K_numeric(3);
    double kv = k3.value.to_double();
    add(v, "K3_in_[0.78,0.79]", kv >= 0.78 && kv <= 0.79, k3.value.str(8));
    auto k13 = K_numeric(13);
    add(v, "K13_at_least_0.04", k13.value.to_double() >= 0.04, k13.value.str(8));
  }

  // residual list: 85 pairs, 13 survivors
  {
    auto list = exceptional_residual_list();
    int surv = 0;
    for (auto& c : list) surv += c.survives_eq11;
    add(v, "residual_cases_85_13",
        list.size() == 85 && surv == 13,
        std::to_string(list.size()) + " pairs, " + std::to_string(surv) + " survivors");
  }

  // decision pipeline reaches a verdict on the small-case grid
  {
    bool ok = true;
    for (unsigned n : {5u, 10u, 15u, 30u, 35u}) {
      for (long a = -50; a <= 50; ++a) {
        if (a == 0 || !is_fourth_power_free(Int(a))) continue;
        auto low = hhat_lower_bound(Int(a));
        auto rep = decide_5m(Int(a), n, low.value);
        (void)rep;  // a verdict (either value) must be produced without throwing
      }
    }
    add(v, "decide_5m_grid_verdicts", ok);
  }

  return v;
}

Json verify_report_json(const std::vector<CheckResult>& checks) {
  Json arr = Json::array();
  bool all = true;
  for (const auto& c : checks) {
    Json j;
    j["name"] = c.name;
    j["pass"] = c.pass;
    if (!c.detail.empty()) j["detail"] = c.detail;
    arr.push_back(j);
    all &= c.pass;
  }
  Json out;
  out["all_pass"] = all;
  out["checks"] = arr;
  return out;
}

}  // namespace edsp
