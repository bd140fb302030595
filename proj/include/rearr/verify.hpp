#ifndef REARR_VERIFY_HPP
#define REARR_VERIFY_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "rearr/battery.hpp"
#include "rearr/hardy.hpp"
#include "rearr/lorentz.hpp"
#include "rearr/sampled.hpp"
#include "rearr/symmetrize.hpp"

namespace rearr {

/// Battery maximum of (int |f - mean|^p dmu)^{1/p} / int |grad f| dmu;
/// constant members are skipped.  A lower bound on the true constant.
double poincare_constant(const std::vector<SampledFunction>& battery, double p);

struct TheoremAPointwise {
  double ratio_b = 0.0;  // sup_t t^{1/p-1} [(f-r)** - (f-r)*](t) / int_0^t |grad f|*
  double ratio_c = 0.0;  // sup_t int_0^t s^{1/p-1} [(f-r)** - (f-r)*] ds / int_0^t |grad f|*
  double r_f = 0.0;
  std::vector<CurvePoint> curve_b, curve_c;
};
TheoremAPointwise theorem_a_pointwise(const SampledFunction& f, double p);

/// || s^{1/p-1} [(f-r)**(s) - (f-r)*(s)] ||_X / || grad f ||_X(Omega).
double theorem_a_norm(const SampledFunction& f, double p, const RISpaceSpec& space);
/// The numerator alone (used by the norm-identity check).
double theorem_a_norm_numerator(const SampledFunction& f, double p, const RISpaceSpec& space);

struct GNResult {
  double strong = 0.0;  // max ||f - mean||_{L^{p,1}} / ||grad f||_{L^1}
  double weak = 0.0;    // max ||f - mean||_{L^{p,inf}} / ||grad f||_{L^1}
  bool weak_le_strong = true;
};
GNResult gn_sharp_constant(const std::vector<SampledFunction>& battery, double p);

struct TeoBResult {
  double c_i = 0.0;    // ||f||_Y vs ||s^{-1/n}(f**-f*)||_X + ||f||_L1 over monotone steps
  double c_ii = 0.0;   // Hardy operator X -> Y over nonnegative steps
  double c_iii = 0.0;  // ||u - mean||_Y(Omega) vs ||grad u||_X(Omega) over radial test functions
};
TeoBResult theorem_b_roundtrip(const RISpaceSpec& x_space, const RISpaceSpec& y_space,
                               std::shared_ptr<const GridDomain> dom, std::size_t battery_size,
                               std::uint64_t seed);

struct HarDemoResult {
  HardyParams params;
  double poincare_coarse = 0.0, poincare_fine = 0.0, drift = 0.0;
  CriterionResult criterion;
  double fitted_exponent = 0.0;
  double paper_exponent = 0.0;
};
/// The s-John "inequality holds, Hardy criterion fails" juxtaposition.
HarDemoResult proposition_har_demo(int n, double s, double t, int res_coarse, int res_fine,
                                   std::size_t battery_size, std::uint64_t seed);

struct VerifyConfig {
  std::uint64_t seed = 20240611;
  int res_coarse = 64;
  int res_fine = 128;
  int interval_resolution = 1 << 21;  // closed-form corollary case
  std::size_t battery = 20;
  std::size_t modulus_battery = 6;  // batteries driving shift sweeps stay small
  double p = 2.0;
  double har_s = 1.5;
  double har_t = 1.2;
  std::vector<std::string> shapes{"square", "disk"};
  std::vector<std::string> checks;  // empty = all
  std::string out_dir = "out";

  static VerifyConfig defaults();
  static VerifyConfig from_file(const std::string& path);  // key = value lines
};

struct VerificationReport {
  nlohmann::ordered_json json;
  bool all_pass = false;
  int records = 0;
};

/// Runs every harness from the config, writes report.json plus one CSV per
/// ratio curve into out_dir, and returns the report.  Per-check errors are
/// collected as failing records, not thrown.
VerificationReport run_full_report(const VerifyConfig& config);

}  // namespace rearr

#endif
