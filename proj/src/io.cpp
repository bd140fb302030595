#include "rearr/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "rearr/parallel.hpp"
#include "rearr/piecewise_power.hpp"

namespace rearr {

namespace par {
namespace {
bool g_enabled = true;
}
bool enabled() noexcept { return g_enabled; }
void set_enabled(bool on) noexcept { g_enabled = on; }
}  // namespace par

ordered_json step_to_json(const StepFunction& f) {
  ordered_json j;
  j["breakpoints"] = std::vector<double>(f.breakpoints().begin(), f.breakpoints().end());
  j["values"] = std::vector<double>(f.values().begin(), f.values().end());
  return j;
}

StepFunction step_from_json(const ordered_json& j) {
  if (!j.contains("breakpoints") || !j.contains("values"))
    throw std::invalid_argument("step_from_json: need 'breakpoints' and 'values'");
  return StepFunction(j.at("breakpoints").get<std::vector<double>>(),
                      j.at("values").get<std::vector<double>>());
}

ordered_json sampled_to_json(const SampledFunction& f) {
  const GridDomain& d = f.domain();
  ordered_json j;
  j["shape"] = shape_name(d.shape());
  j["param"] = d.param();
  j["n"] = d.dim();
  j["resolution"] = d.resolution();
  j["spacing"] = d.spacing();
  j["sigma"] = d.sigma();
  j["anchor"] = std::vector<double>{d.anchor()[0], d.anchor()[1]};
  ordered_json cells = ordered_json::array();
  for (const auto& c : d.cells()) {
    ordered_json cj;
    cj["center"] = d.dim() == 2 ? std::vector<double>{c.center[0], c.center[1]}
                                : std::vector<double>{c.center[0]};
    cj["measure"] = c.measure;
    cells.push_back(std::move(cj));
  }
  j["cells"] = std::move(cells);
  j["values"] = f.values();
  return j;
}

SampledFunction sampled_from_json(const ordered_json& j) {
  const Shape shape = shape_from_name(j.at("shape").get<std::string>());
  const double param = j.value("param", 0.0);
  const int resolution = j.at("resolution").get<int>();
  auto dom = GridDomain::make(shape, resolution, param);
  const auto& cells = j.at("cells");
  if (cells.size() != dom->size())
    throw std::invalid_argument("sampled_from_json: cell count does not match the grid rebuilt "
                                "from (shape, resolution, param)");
  auto values = j.at("values").get<std::vector<double>>();
  return SampledFunction(std::move(dom), std::move(values));
}

void write_text_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    if (!out) throw std::runtime_error("short write: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("cannot rename into place: " + path);
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string format_double(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[64];
  // shortest representation that round-trips
  for (int prec = 1; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::string rearrangement_csv(const MonotoneStep& f, const std::vector<double>& t_grid) {
  const PiecewiseTwoPower avg = maximal_average(f);
  std::ostringstream out;
  out << "t,fstar,fstarstar,oscillation\n";
  for (double t : t_grid) {
    const double fs = f.value_at(t), fss = avg.value_at(t);
    out << format_double(t) << ',' << format_double(fs) << ',' << format_double(fss) << ','
        << format_double(fss - fs) << '\n';
  }
  return out.str();
}

std::string curve_csv(const std::vector<CsvRow>& rows) {
  std::ostringstream out;
  out << "t,lhs,rhs,ratio\n";
  for (const auto& r : rows)
    out << format_double(r.t) << ',' << format_double(r.lhs) << ',' << format_double(r.rhs)
        << ',' << format_double(r.ratio) << '\n';
  return out.str();
}

}  // namespace rearr
