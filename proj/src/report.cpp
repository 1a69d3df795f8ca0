#include "minneg/report.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <sstream>

#include <json.hpp>

namespace minneg {

namespace {

using json = nlohmann::ordered_json;

std::string shortest(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

void for_each_minor(const MinorSet& m,
                    const std::function<void(int, int, double)>& fn) {
    for (int l = 0; l < 4; ++l) fn(1, l + 1, m.order1[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 6; ++l) fn(2, l + 1, m.order2[static_cast<std::size_t>(l)]);
    for (int l = 0; l < 4; ++l) fn(3, l + 1, m.order3[static_cast<std::size_t>(l)]);
    fn(4, 1, m.order4);
}

}  // namespace

std::string minor_label(int order, int index) {
    return "m" + std::to_string(order) + "_" + std::to_string(index);
}

AnalysisReport analyze(const DensityMatrix& rho, const AnalysisOptions& opt) {
    const Mat4 pt = partial_transpose(rho.matrix(), opt.transpose_side);

    AnalysisReport r;
    r.transpose_side = opt.transpose_side;
    r.tolerance = opt.tolerance;
    r.minors = principal_minors(pt);
    r.coefficients = minor_sums(r.minors);
    r.roots = quartic_real_roots(r.coefficients);
    r.negativity_minor_path = std::max(0.0, -r.roots[0]);

    const NegativityReport eigen = negativity_eigen(rho);
    r.negativity_eigen_path = eigen.negativity;
    r.agreement = std::abs(r.negativity_minor_path - r.negativity_eigen_path);

    r.verdict = sylvester_separable(pt, opt.tolerance);
    r.negative_minor_sum = negative_minor_sum(pt);
    return r;
}

std::string render_json(const AnalysisReport& r) {
    json j;
    j["input_valid"] = true;
    j["transpose_side"] = r.transpose_side == Subsystem::A ? "A" : "B";
    j["tolerance"] = r.tolerance;

    json minors;
    for_each_minor(r.minors, [&](int order, int index, double value) {
        minors[minor_label(order, index)] = value;
    });
    j["minors"] = std::move(minors);

    j["coefficients"] = {{"s1", r.coefficients.s1},
                         {"s2", r.coefficients.s2},
                         {"s3", r.coefficients.s3},
                         {"s4", r.coefficients.s4}};
    j["roots"] = r.roots;
    j["negativity_minors"] = r.negativity_minor_path;
    j["negativity_eigen"] = r.negativity_eigen_path;
    j["agreement"] = r.agreement;
    j["verdict"] = r.verdict.separable ? "separable" : "entangled";

    json negs = json::array();
    for (const NegativeMinor& nm : r.verdict.negative_minors)
        negs.push_back({{"label", minor_label(nm.order, nm.index)},
                        {"order", nm.order},
                        {"index", nm.index},
                        {"value", nm.value}});
    j["negative_minors"] = std::move(negs);
    j["negative_minor_sum"] = r.negative_minor_sum;

    return j.dump(2) + "\n";
}

std::string render_pretty(const AnalysisReport& r) {
    std::ostringstream out;
    const char* side = r.transpose_side == Subsystem::A ? "A" : "B";
    out << "input                valid density matrix\n";
    out << "transpose side       " << side << "\n";
    out << "verdict              " << (r.verdict.separable ? "separable" : "entangled")
        << "  (tolerance " << shortest(r.tolerance) << ")\n";
    out << "negativity (minors)  " << shortest(r.negativity_minor_path) << "\n";
    out << "negativity (eigen)   " << shortest(r.negativity_eigen_path) << "\n";
    out << "path agreement       " << shortest(r.agreement) << "\n";
    out << "negative minor sum   " << shortest(r.negative_minor_sum) << "\n";
    out << "\ncharacteristic polynomial  x^4 - s1 x^3 + s2 x^2 - s3 x + s4\n";
    out << "  s1 = " << shortest(r.coefficients.s1) << "\n";
    out << "  s2 = " << shortest(r.coefficients.s2) << "\n";
    out << "  s3 = " << shortest(r.coefficients.s3) << "\n";
    out << "  s4 = " << shortest(r.coefficients.s4) << "\n";
    out << "roots (ascending)    ";
    for (int i = 0; i < 4; ++i)
        out << shortest(r.roots[static_cast<std::size_t>(i)]) << (i < 3 ? "  " : "\n");
    out << "\nprincipal minors of the partial transpose\n";
    for_each_minor(r.minors, [&](int order, int index, double value) {
        out << "  " << minor_label(order, index) << " = " << shortest(value);
        if (value < -r.tolerance) out << "   [negative]";
        out << "\n";
    });
    return out.str();
}

}  // namespace minneg
