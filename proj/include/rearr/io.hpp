#ifndef REARR_IO_HPP
#define REARR_IO_HPP

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "rearr/grid_domain.hpp"
#include "rearr/sampled.hpp"
#include "rearr/step_function.hpp"

namespace rearr {

using ordered_json = nlohmann::ordered_json;

ordered_json step_to_json(const StepFunction& f);
StepFunction step_from_json(const ordered_json& j);

/// {"shape","param","n","resolution","spacing","sigma","anchor","cells",
///  "values"}; parsing rebuilds the grid from (shape, resolution, param) and
/// checks it against the serialized cells, so adjacency is always available.
ordered_json sampled_to_json(const SampledFunction& f);
SampledFunction sampled_from_json(const ordered_json& j);

void write_text_atomic(const std::string& path, const std::string& content);
std::string read_text(const std::string& path);

/// CSV with header "t,fstar,fstarstar,oscillation" on the given grid.
std::string rearrangement_csv(const MonotoneStep& f, const std::vector<double>& t_grid);

struct CsvRow {
  double t, lhs, rhs, ratio;
};
std::string curve_csv(const std::vector<CsvRow>& rows);

std::string format_double(double x);  // shortest round-trip formatting

}  // namespace rearr

#endif
