#include "rearr/majorize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "rearr/piecewise_power.hpp"

namespace rearr {

namespace {

constexpr double kInfinity = std::numeric_limits<double>::infinity();

bool is_zero(const StepFunction& f) {
  for (double v : f.values())
    if (v != 0.0) return false;
  return true;
}

void require_nonnegative(const StepFunction& f, const char* who) {
  if (!f.nonnegative()) throw std::invalid_argument(std::string(who) + ": must be nonnegative");
}

std::vector<double> merged_breakpoints(const StepFunction& f, const StepFunction& g) {
  std::vector<double> out(f.breakpoints().begin(), f.breakpoints().end());
  out.insert(out.end(), g.breakpoints().begin(), g.breakpoints().end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// sup over t of P(t)/Q(t) where both are prefix integrals of nonnegative
// steps: the ratio is monotone between breakpoints, so breakpoints plus the
// t -> 0 limit are enough.
double prefix_ratio_sup(const StepFunction& num, const StepFunction& den) {
  const double n0 = num.values()[0], d0 = den.values()[0];
  double best = n0 == 0.0 ? 0.0 : (d0 > 0.0 ? n0 / d0 : kInfinity);
  for (double t : merged_breakpoints(num, den)) {
    if (t <= 0.0) continue;
    const double p = num.prefix_integral(t), q = den.prefix_integral(t);
    if (q > 0.0)
      best = std::max(best, p / q);
    else if (p > 0.0)
      return kInfinity;
  }
  return best;
}

}  // namespace

IntervalFamily::IntervalFamily(std::vector<std::array<double, 2>> intervals) : iv_(std::move(intervals)) {
  if (iv_.empty()) throw std::invalid_argument("IntervalFamily: need at least one interval");
  double prev_b = 0.0;
  for (std::size_t i = 0; i < iv_.size(); ++i) {
    const double a = iv_[i][0], b = iv_[i][1];
    if (!(a > 0.0) || !(a < b))
      throw std::invalid_argument("IntervalFamily: intervals must satisfy 0 < a < b");
    if (!(a >= prev_b))
      throw std::invalid_argument("IntervalFamily: intervals must be ordered and disjoint");
    if (!(b <= 1.0))
      throw std::invalid_argument("IntervalFamily: ambient interval is (0,1]");
    prev_b = b;
  }
}

double IntervalFamily::total_length() const {
  double acc = 0.0;
  for (const auto& ab : iv_) acc += ab[1] - ab[0];
  return acc;
}

double IntervalFamily::log_sum_from(std::size_t j) const {
  double acc = 0.0;
  for (std::size_t i = j; i < iv_.size(); ++i) acc += std::log(iv_[i][1] / iv_[i][0]);
  return acc;
}

HypothesisConstants check_hypotheses(const StepFunction& g, const StepFunction& h) {
  require_nonnegative(g, "check_hypotheses: g");
  require_nonnegative(h, "check_hypotheses: h");
  HypothesisConstants out;
  if (is_zero(g)) return out;
  if (is_zero(h)) {
    out.C1 = out.C2 = kInfinity;
    return out;
  }
  const MonotoneStep hstar = rearrange_step(h);
  const PiecewiseTwoPower hss = maximal_average(hstar);

  // (h1): g(t) <= C1 h**(t).  On a refined piece g is constant and h** is
  // nonincreasing, so the ratio peaks at the right endpoint.
  double c1 = 0.0;
  for (double t : merged_breakpoints(g, hstar.step())) {
    if (t <= 0.0) continue;
    const double hv = hss.value_at(t);
    const double gv = g.value_at(t);
    if (hv > 0.0)
      c1 = std::max(c1, gv / hv);
    else if (gv > 0.0)
      c1 = kInfinity;
  }
  out.C1 = c1;
  out.C2 = prefix_ratio_sup(g, hstar.step());
  return out;
}

double majorization_constant(const StepFunction& g, const StepFunction& h) {
  require_nonnegative(g, "majorization_constant: g");
  require_nonnegative(h, "majorization_constant: h");
  if (is_zero(g)) return 0.0;
  if (is_zero(h)) return kInfinity;
  return prefix_ratio_sup(rearrange_step(g).step(), rearrange_step(h).step());
}

namespace {

double family_integral(const StepFunction& g, const IntervalFamily& fam, std::size_t from,
                       double a_override) {
  double acc = 0.0;
  for (std::size_t i = from; i < fam.size(); ++i) {
    const double a = i == from && a_override >= 0.0 ? a_override : fam.a(i);
    acc += g.prefix_integral(fam.b(i)) - g.prefix_integral(a);
  }
  return acc;
}

double hstar_prefix(const StepFunction& h, double s) {
  const MonotoneStep hstar = rearrange_step(h);
  return hstar.prefix_integral(std::min(1.0, s));
}

}  // namespace

MajorizationCertificate interval_bound_certificate(const StepFunction& g, const StepFunction& h,
                                                   const IntervalFamily& family) {
  const HypothesisConstants hc = check_hypotheses(g, h);
  if (!std::isfinite(hc.C1) || !std::isfinite(hc.C2))
    throw std::invalid_argument("interval_bound_certificate: hypotheses do not hold");
  MajorizationCertificate cert;
  cert.C1 = hc.C1;
  cert.C2 = hc.C2;
  const double cmax = std::max(hc.C1, hc.C2);
  const double total_len = family.total_length();
  const double L1 = family.log_sum_from(0);

  if (L1 <= 1.0) {
    cert.branch = MajorizationCertificate::Branch::direct_j1;
    cert.j0 = 0;
    cert.c_j0 = family.a(0);
    cert.log_sum = L1;
    const double lhs = family_integral(g, family, 0, -1.0);
    cert.sub_bounds.push_back({"dd_at_j1", lhs, hc.C1 * (1.0 + L1) * hstar_prefix(h, total_len)});
    cert.sub_bounds.push_back({"final_4c", lhs, 4.0 * cmax * hstar_prefix(h, total_len)});
    return cert;
  }

  cert.branch = MajorizationCertificate::Branch::split_j0;
  std::size_t j0 = family.size();  // largest j with log-sum from j exceeding 1
  for (std::size_t j = family.size(); j-- > 0;) {
    if (family.log_sum_from(j) > 1.0) {
      j0 = j;
      break;
    }
  }
  if (j0 == family.size())
    throw std::logic_error("interval_bound_certificate: no admissible j0");
  const double tail = family.log_sum_from(j0 + 1);
  const double sj0 = family.log_sum_from(j0);
  double c = family.a(j0);
  if (sj0 > 2.0) {
    // bisect log(b_j0/c) + tail = 2; the left side is decreasing in c
    double lo = family.a(j0), hi = family.b(j0);
    for (int it = 0; it < 60; ++it) {
      const double mid = 0.5 * (lo + hi);
      const double val = std::log(family.b(j0) / mid) + tail;
      (val > 2.0 ? lo : hi) = mid;
    }
    c = hi;  // log sum at or just below 2, still above 1
  }
  cert.j0 = j0;
  cert.c_j0 = c;
  cert.log_sum = std::log(family.b(j0) / c) + tail;

  double split_len = family.b(j0) - c;
  for (std::size_t i = j0 + 1; i < family.size(); ++i) split_len += family.b(i) - family.a(i);

  // head: everything strictly below c_j0 via (h2), then (aa1)
  double head_lhs = family_integral(g, family, 0, -1.0) - family_integral(g, family, j0, c);
  cert.sub_bounds.push_back({"head_h2", head_lhs, hc.C2 * hstar_prefix(h, c)});
  cert.sub_bounds.push_back({"head_aa1", hc.C2 * hstar_prefix(h, c), hc.C2 * hstar_prefix(h, split_len)});
  // tail: the (dd) bound at j0 with a_j0 replaced by c_j0, log sum <= 2
  const double tail_lhs = family_integral(g, family, j0, c);
  cert.sub_bounds.push_back({"tail_dd", tail_lhs, 3.0 * hc.C1 * hstar_prefix(h, split_len)});
  cert.sub_bounds.push_back(
      {"final_4c", family_integral(g, family, 0, -1.0), 4.0 * cmax * hstar_prefix(h, total_len)});
  return cert;
}

CertificateAudit verify_certificate(const MajorizationCertificate& cert, const StepFunction& g,
                                    const StepFunction& h, const IntervalFamily& family) {
  constexpr double kRel = 1e-9;
  const HypothesisConstants hc = check_hypotheses(g, h);
  if (!std::isfinite(hc.C1) || !std::isfinite(hc.C2)) return {false, "hypotheses"};
  const double L1 = family.log_sum_from(0);

  if (cert.branch == MajorizationCertificate::Branch::direct_j1) {
    if (L1 > 1.0 + 1e-12) return {false, "direct_branch_condition"};
  } else {
    if (cert.j0 >= family.size()) return {false, "j0_range"};
    if (cert.c_j0 < family.a(cert.j0) - 1e-15 || cert.c_j0 > family.b(cert.j0) + 1e-15)
      return {false, "c_j0_range"};
    const double ls = std::log(family.b(cert.j0) / cert.c_j0) + family.log_sum_from(cert.j0 + 1);
    if (!(ls > 1.0) || !(ls <= 2.0 + 1e-12)) return {false, "dd1"};
    if (std::abs(ls - cert.log_sum) > 1e-9 * std::max(1.0, std::abs(ls)))
      return {false, "log_sum_mismatch"};
    double split_len = family.b(cert.j0) - cert.c_j0;
    for (std::size_t i = cert.j0 + 1; i < family.size(); ++i)
      split_len += family.b(i) - family.a(i);
    if (!(cert.c_j0 < split_len)) return {false, "aa1"};
  }

  for (const auto& sb : cert.sub_bounds) {
    double lhs = 0.0, rhs = 0.0;
    const double cmax = std::max(hc.C1, hc.C2);
    if (sb.name == "dd_at_j1") {
      lhs = family_integral(g, family, 0, -1.0);
      rhs = hc.C1 * (1.0 + L1) * hstar_prefix(h, family.total_length());
    } else if (sb.name == "final_4c") {
      lhs = family_integral(g, family, 0, -1.0);
      rhs = 4.0 * cmax * hstar_prefix(h, family.total_length());
    } else if (sb.name == "head_h2" || sb.name == "head_aa1" || sb.name == "tail_dd") {
      double split_len = family.b(cert.j0) - cert.c_j0;
      for (std::size_t i = cert.j0 + 1; i < family.size(); ++i)
        split_len += family.b(i) - family.a(i);
      if (sb.name == "head_h2") {
        lhs = family_integral(g, family, 0, -1.0) - family_integral(g, family, cert.j0, cert.c_j0);
        rhs = hc.C2 * hstar_prefix(h, cert.c_j0);
      } else if (sb.name == "head_aa1") {
        lhs = hc.C2 * hstar_prefix(h, cert.c_j0);
        rhs = hc.C2 * hstar_prefix(h, split_len);
      } else {
        lhs = family_integral(g, family, cert.j0, cert.c_j0);
        rhs = 3.0 * hc.C1 * hstar_prefix(h, split_len);
      }
    } else {
      return {false, "unknown_bound_" + sb.name};
    }
    const double tol = kRel * std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (std::abs(lhs - sb.lhs) > tol || std::abs(rhs - sb.rhs) > tol)
      return {false, sb.name + "_mismatch"};
    if (lhs > rhs + tol) return {false, sb.name};
  }
  return {true, ""};
}

}  // namespace rearr
