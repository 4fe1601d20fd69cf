#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "chordarc/curve.hpp"

namespace chordarc {
namespace zoo {

struct ZooSpec {
    std::string name;
    std::map<std::string, double> params;
    int n = 512;
};

// Generators: circle(R), ellipse(a,b), square(side), stadium(radius,straight),
// helix(radius,pitch,turns), hopf, wedge_hull(theta), trefoil.
Curve make(const ZooSpec& spec);

// Analytic values known for a generator, used by tests and the acceptance
// suite. Throws NoKnownValues for specs outside the table.
struct ExpectedValues {
    std::optional<double> delta, delta_opp, r, c1, c2;
    std::vector<std::pair<double, double>> tau_by_b;
    std::vector<std::pair<double, double>> sigma_by_k;
};
ExpectedValues expected_values(const ZooSpec& spec);

std::vector<std::string> generator_names();

}  // namespace zoo
}  // namespace chordarc
