#include "rearr/lorentz.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace rearr {

namespace {

void check_pq(double p, double q) {
  if (!(p >= 1.0)) throw std::invalid_argument("lorentz_norm: p must be >= 1");
  if (!(q >= 1.0)) throw std::invalid_argument("lorentz_norm: q must be >= 1");
}

PiecewiseTwoPower as_two_power(const MonotoneStep& f) {
  std::vector<double> bp(f.breakpoints().begin(), f.breakpoints().end());
  std::vector<double> a(f.values().begin(), f.values().end());
  std::vector<double> b(f.pieces(), 0.0);
  return PiecewiseTwoPower(std::move(bp), std::move(a), std::move(b), 1.0);
}

}  // namespace

double lorentz_norm(const MonotoneStep& f, double p, double q, LorentzFlavor flavor) {
  check_pq(p, q);
  if (flavor == LorentzFlavor::classical) {
    if (std::isinf(p)) {
      if (!std::isinf(q))
        throw std::invalid_argument(
            "lorentz_norm: classical flavor with p = inf requires q = inf "
            "(the (inf,q) functional is only defined through oscillations)");
      return f.values().empty() ? 0.0 : f.values()[0];
    }
    return weighted_norm(as_two_power(f), 1.0 / p, q);
  }
  const double w = std::isinf(p) ? 0.0 : 1.0 / p;
  return weighted_norm(oscillation(f), w, q);
}

RISpaceSpec RISpaceSpec::lebesgue(double p) {
  if (!(p >= 1.0)) throw std::invalid_argument("RISpaceSpec: lebesgue exponent must be >= 1");
  RISpaceSpec s;
  s.family = Family::lebesgue;
  s.p = p;
  s.q = p;
  return s;
}

RISpaceSpec RISpaceSpec::lorentz(double p, double q, LorentzFlavor flavor) {
  check_pq(p, q);
  if (std::isinf(p) && !std::isinf(q) && flavor == LorentzFlavor::classical)
    throw std::invalid_argument("RISpaceSpec: classical (inf,q) with q < inf is not normable");
  RISpaceSpec s;
  s.family = Family::lorentz;
  s.p = p;
  s.q = q;
  s.flavor = flavor;
  return s;
}

RISpaceSpec RISpaceSpec::sup() {
  RISpaceSpec s;
  s.family = Family::sup_norm;
  s.p = kInf;
  s.q = kInf;
  return s;
}

RISpaceSpec RISpaceSpec::parse(const std::string& text) {
  auto lower = text;
  for (char& c : lower) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower == "l1") return lebesgue(1.0);
  if (lower == "l2") return lebesgue(2.0);
  if (lower == "linf" || lower == "sup") return sup();
  auto parse_num = [](const std::string& s) {
    if (s == "inf") return kInf;
    return std::stod(s);
  };
  std::vector<std::string> parts;
  std::stringstream ss(lower);
  std::string tok;
  while (std::getline(ss, tok, ':')) parts.push_back(tok);
  if (parts.size() == 2 && parts[0] == "lp") return lebesgue(parse_num(parts[1]));
  if (parts.size() == 4 && parts[0] == "lorentz") {
    LorentzFlavor fl;
    if (parts[3] == "classical")
      fl = LorentzFlavor::classical;
    else if (parts[3] == "osc" || parts[3] == "oscillation")
      fl = LorentzFlavor::oscillation;
    else
      throw std::invalid_argument("RISpaceSpec: unknown flavor '" + parts[3] + "'");
    return lorentz(parse_num(parts[1]), parse_num(parts[2]), fl);
  }
  throw std::invalid_argument("RISpaceSpec: cannot parse '" + text + "'");
}

double RISpaceSpec::norm(const MonotoneStep& fstar) const {
  switch (family) {
    case Family::lebesgue:
      if (std::isinf(p)) return fstar.values().empty() ? 0.0 : fstar.values()[0];
      // (int (t^{1/p} f*)^p dt/t)^{1/p} == (int f*^p dt)^{1/p}
      return lorentz_norm(fstar, p, p, LorentzFlavor::classical);
    case Family::lorentz:
      return lorentz_norm(fstar, p, q, flavor);
    case Family::sup_norm:
      return fstar.values().empty() ? 0.0 : fstar.values()[0];
  }
  return 0.0;
}

double RISpaceSpec::fundamental(double s) const {
  if (!(s > 0.0) || s > 1.0)
    throw std::invalid_argument("fundamental: measure must lie in (0,1]");
  switch (family) {
    case Family::lebesgue:
      return std::isinf(p) ? 1.0 : std::pow(s, 1.0 / p);
    case Family::sup_norm:
      return 1.0;
    case Family::lorentz:
      // the exact norm of an indicator of measure s
      return norm(rearrange_step(StepFunction::indicator(s)));
  }
  return 0.0;
}

std::string RISpaceSpec::label() const {
  auto num = [](double x) {
    if (std::isinf(x)) return std::string("inf");
    std::ostringstream o;
    o << x;
    return o.str();
  };
  switch (family) {
    case Family::lebesgue:
      return "L" + num(p);
    case Family::sup_norm:
      return "Linf";
    case Family::lorentz:
      return std::string("L(") + num(p) + "," + num(q) + ")" +
             (flavor == LorentzFlavor::oscillation ? "osc" : "");
  }
  return "?";
}

}  // namespace rearr
