#pragma once

#include <array>
#include <string>

#include "minneg/eigen_oracle.hpp"
#include "minneg/minors.hpp"

namespace minneg {

struct AnalysisOptions {
    double tolerance = 1e-10;                   // Sylvester verdict tolerance
    Subsystem transpose_side = Subsystem::A;    // which factor is transposed
};

/// Everything both pipelines say about one state. `minors`, `coefficients`,
/// `roots` and the verdict describe the partial transpose over the chosen
/// side; the two negativities must agree within 1e-8 for the analysis to
/// count as successful.
struct AnalysisReport {
    Subsystem transpose_side;
    double tolerance;
    MinorSet minors;
    CharPolyCoefficients coefficients;
    std::array<double, 4> roots;
    double negativity_minor_path;
    double negativity_eigen_path;
    double agreement;  // |negativity_minor_path - negativity_eigen_path|
    SeparabilityVerdict verdict;
    double negative_minor_sum;
};

/// Runs both negativity paths on rho's partial transpose and assembles the
/// report. Propagates numerical errors from either path.
AnalysisReport analyze(const DensityMatrix& rho, const AnalysisOptions& opt = {});

/// Label of the l-th order-k minor, e.g. "m2_4".
std::string minor_label(int order, int index);

/// Machine-readable JSON rendering with stable key names.
std::string render_json(const AnalysisReport& r);

/// Aligned human-readable rendering.
std::string render_pretty(const AnalysisReport& r);

}  // namespace minneg
