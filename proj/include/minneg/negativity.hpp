#pragma once

#include <array>

namespace minneg {

/// Which pipeline produced a NegativityReport.
enum class Method { Minors, Eigen };

struct NegativityReport {
    std::array<double, 4> roots;  // ascending; quartic roots or eigenvalues
    double lambda_min;            // == roots[0]
    double negativity;            // >= 0; 0 for separable states
    Method method;
};

}  // namespace minneg
