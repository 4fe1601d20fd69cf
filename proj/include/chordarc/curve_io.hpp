#pragma once

#include <string>

#include "chordarc/curve.hpp"

namespace chordarc {

// Curve file schema:
//   { "dimension": n, "smooth_sampling": bool,
//     "components": [ { "closed": bool, "vertices": [[x,y,...], ...] } ] }
Curve read_curve_json(const std::string& text);
Curve load_curve_file(const std::string& path);

std::string write_curve_json(const Curve& curve);
void save_curve_file(const Curve& curve, const std::string& path);

}  // namespace chordarc
