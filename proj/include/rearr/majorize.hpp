#ifndef REARR_MAJORIZE_HPP
#define REARR_MAJORIZE_HPP

#include <array>
#include <string>
#include <vector>

#include "rearr/step_function.hpp"

namespace rearr {

/// Ordered disjoint intervals 0 < a_1 < b_1 <= a_2 < ... < b_m <= 1.
/// The ambient interval is (0,1]; functions are extended by zero beyond 1,
/// so families are kept inside the unit interval.
class IntervalFamily {
 public:
  explicit IntervalFamily(std::vector<std::array<double, 2>> intervals);

  std::size_t size() const noexcept { return iv_.size(); }
  double a(std::size_t i) const { return iv_[i][0]; }
  double b(std::size_t i) const { return iv_[i][1]; }
  const std::vector<std::array<double, 2>>& intervals() const noexcept { return iv_; }

  double total_length() const;
  // sum over i >= j of log(b_i / a_i)
  double log_sum_from(std::size_t j) const;

 private:
  std::vector<std::array<double, 2>> iv_;
};

struct HypothesisConstants {
  double C1 = 0.0;  // sup_t g(t) / h**(t)
  double C2 = 0.0;  // sup_t (prefix of g) / (prefix of h*)
};

/// Exact suprema over the piece structure; infinite when h vanishes but g
/// does not.
HypothesisConstants check_hypotheses(const StepFunction& g, const StepFunction& h);

/// sup_t (integral of g* over (0,t]) / (integral of h* over (0,t]).
double majorization_constant(const StepFunction& g, const StepFunction& h);

struct SubBound {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct MajorizationCertificate {
  enum class Branch { direct_j1, split_j0 };
  Branch branch = Branch::direct_j1;
  std::size_t j0 = 0;     // split branch only
  double c_j0 = 0.0;      // in [a_j0, b_j0]
  double log_sum = 0.0;   // log(b_j0/c_j0) + tail; in (1,2] on the split branch
  double C1 = 0.0, C2 = 0.0;
  std::vector<SubBound> sub_bounds;
};

/// Constructive witness that sum_i int_{a_i}^{b_i} g <= 4 max(C1,C2) *
/// int_0^{sum(b_i - a_i)} h*.  Direct branch when the total log sum is <= 1;
/// otherwise picks the largest admissible j0 and bisects c_j0 so the log sum
/// lands at the upper end of (1,2].
MajorizationCertificate interval_bound_certificate(const StepFunction& g, const StepFunction& h,
                                                   const IntervalFamily& family);

struct CertificateAudit {
  bool ok = true;
  std::string violated;  // name of the first failed inequality
};

/// Recomputes every inequality in the certificate from scratch.
CertificateAudit verify_certificate(const MajorizationCertificate& cert, const StepFunction& g,
                                    const StepFunction& h, const IntervalFamily& family);

}  // namespace rearr

#endif
