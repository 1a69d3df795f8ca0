#include "minneg/commands.hpp"

#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "minneg/eigen_oracle.hpp"
#include "minneg/matrix_file.hpp"
#include "minneg/minors.hpp"
#include "minneg/report.hpp"
#include "minneg/states.hpp"

namespace minneg::cli {

namespace {

constexpr double kAgreementTol = 1e-8;

const char* kUsage =
    "usage: minneg <command> [flags]\n"
    "\n"
    "commands:\n"
    "  analyze <file> [--tolerance T] [--transpose_side A|B] [--pretty]\n"
    "      Separability verdict and negativity of the matrix in <file>,\n"
    "      computed by the minor pipeline and cross-checked by the\n"
    "      eigenvalue pipeline. JSON report on stdout (--pretty for an\n"
    "      aligned view).\n"
    "  gen bell --kind phi+|phi-|psi+|psi- [--out F]\n"
    "  gen werner --p P [--out F]\n"
    "  gen product [--seed S] [--out F]\n"
    "  gen random [--seed S] [--out F]\n"
    "  gen separable [--terms K] [--seed S] [--out F]\n"
    "      Write a benchmark state as a matrix file (stdout when --out is\n"
    "      omitted).\n"
    "  sweep werner --p-start A --p-end B --steps N [--out F]\n"
    "      CSV of both negativities over a uniform grid of Werner states.\n"
    "  bench [--trials N] [--seed S]\n"
    "      Time the minor pipeline against the eigenvalue pipeline on N\n"
    "      random states and report the worst disagreement.\n"
    "\n"
    "exit codes: 0 ok, 1 usage/input error, 2 invalid density matrix,\n"
    "            3 cross-check failure\n";

std::string shortest(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

// Flag map: every flag takes one value except the boolean --pretty switch.
// Keys outside `allowed` are rejected.
struct Flags {
    std::map<std::string, std::string> values;
    bool pretty = false;

    std::optional<std::string> get(const std::string& key) const {
        auto it = values.find(key);
        if (it == values.end()) return std::nullopt;
        return it->second;
    }
};

std::optional<Flags> parse_flags(const std::vector<std::string>& args, std::size_t start,
                                 const std::vector<const char*>& allowed,
                                 std::ostream& err) {
    const auto is_allowed = [&](const std::string& key) {
        for (const char* a : allowed)
            if (key == a) return true;
        return false;
    };
    Flags f;
    for (std::size_t i = start; i < args.size(); ++i) {
        const std::string& a = args[i];
        if (a.rfind("--", 0) != 0) {
            err << "minneg: unexpected argument \"" << a << "\"\n";
            return std::nullopt;
        }
        const std::string key = a.substr(2);
        if (!is_allowed(key)) {
            err << "minneg: unknown flag " << a << " for this command\n";
            return std::nullopt;
        }
        if (key == "pretty") {
            f.pretty = true;
            continue;
        }
        if (i + 1 >= args.size()) {
            err << "minneg: flag " << a << " needs a value\n";
            return std::nullopt;
        }
        f.values[key] = args[++i];
    }
    return f;
}

std::optional<double> parse_double(const std::string& s) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    double v = 0.0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end || !std::isfinite(v)) return std::nullopt;
    return v;
}

std::optional<std::uint64_t> parse_u64(const std::string& s) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    std::uint64_t v = 0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
    return v;
}

std::optional<long> parse_long(const std::string& s) {
    const char* begin = s.data();
    const char* end = begin + s.size();
    long v = 0;
    auto res = std::from_chars(begin, end, v);
    if (res.ec != std::errc() || res.ptr != end) return std::nullopt;
    return v;
}

// Writes text to --out (or stdout when absent); false on IO failure.
bool emit(const std::optional<std::string>& path, const std::string& text,
          std::ostream& out, std::ostream& err) {
    if (!path) {
        out << text;
        return true;
    }
    std::ofstream file(*path);
    if (!file) {
        err << "minneg: cannot open \"" << *path << "\" for writing\n";
        return false;
    }
    file << text;
    file.flush();
    if (!file) {
        err << "minneg: failed writing \"" << *path << "\"\n";
        return false;
    }
    return true;
}

int cmd_analyze(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    if (args.size() < 2 || args[1].rfind("--", 0) == 0) {
        err << "minneg: analyze needs a matrix file path\n";
        return kExitUsage;
    }
    const std::string path = args[1];
    auto flags = parse_flags(args, 2, {"tolerance", "transpose_side", "pretty"}, err);
    if (!flags) return kExitUsage;

    AnalysisOptions opt;
    if (auto t = flags->get("tolerance")) {
        auto v = parse_double(*t);
        if (!v || *v < 0.0) {
            err << "minneg: bad --tolerance \"" << *t << "\"\n";
            return kExitUsage;
        }
        opt.tolerance = *v;
    }
    if (auto s = flags->get("transpose_side")) {
        if (*s == "A")
            opt.transpose_side = Subsystem::A;
        else if (*s == "B")
            opt.transpose_side = Subsystem::B;
        else {
            err << "minneg: --transpose_side must be A or B\n";
            return kExitUsage;
        }
    }

    MatrixFile file;
    try {
        file = MatrixFile::load_path(path);
    } catch (const ParseError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitUsage;
    }

    // Validation failures propagate to run(), which maps them to exit code 2.
    const DensityMatrix rho = validate_density(file.matrix);

    AnalysisReport report;
    try {
        report = analyze(rho, opt);
    } catch (const Error& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitCrossCheck;
    }

    out << (flags->pretty ? render_pretty(report) : render_json(report));
    if (report.agreement > kAgreementTol) {
        err << "minneg: negativity paths disagree by " << shortest(report.agreement)
            << " (limit " << shortest(kAgreementTol) << ")\n";
        return kExitCrossCheck;
    }
    return kExitOk;
}

int cmd_gen(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.size() < 2) {
        err << "minneg: gen needs a family (bell|werner|product|random|separable)\n";
        return kExitUsage;
    }
    const std::string family = args[1];
    std::vector<const char*> allowed;
    if (family == "bell")
        allowed = {"kind", "out"};
    else if (family == "werner")
        allowed = {"p", "out"};
    else if (family == "product" || family == "random")
        allowed = {"seed", "out"};
    else if (family == "separable")
        allowed = {"terms", "seed", "out"};
    else {
        err << "minneg: unknown family \"" << family << "\"\n";
        return kExitUsage;
    }
    auto flags = parse_flags(args, 2, allowed, err);
    if (!flags) return kExitUsage;

    std::uint64_t seed = 0;
    if (auto s = flags->get("seed")) {
        auto v = parse_u64(*s);
        if (!v) {
            err << "minneg: bad --seed \"" << *s << "\" (need a 64-bit unsigned decimal)\n";
            return kExitUsage;
        }
        seed = *v;
    }

    Mat4 matrix;
    try {
        if (family == "bell") {
            auto kind = flags->get("kind");
            if (!kind) {
                err << "minneg: gen bell needs --kind phi+|phi-|psi+|psi-\n";
                return kExitUsage;
            }
            BellKind k;
            if (*kind == "phi+")
                k = BellKind::PhiPlus;
            else if (*kind == "phi-")
                k = BellKind::PhiMinus;
            else if (*kind == "psi+")
                k = BellKind::PsiPlus;
            else if (*kind == "psi-")
                k = BellKind::PsiMinus;
            else {
                err << "minneg: unknown bell kind \"" << *kind << "\"\n";
                return kExitUsage;
            }
            matrix = bell_state(k).matrix();
        } else if (family == "werner") {
            auto p = flags->get("p");
            if (!p) {
                err << "minneg: gen werner needs --p\n";
                return kExitUsage;
            }
            auto v = parse_double(*p);
            if (!v) {
                err << "minneg: bad --p \"" << *p << "\"\n";
                return kExitUsage;
            }
            matrix = werner_state(*v).matrix();
        } else if (family == "product") {
            Rng rng(seed);
            const Mat2 a = random_pure_qubit(rng);
            const Mat2 b = random_pure_qubit(rng);
            matrix = product_state(a, b).matrix();
        } else if (family == "random") {
            matrix = random_density(seed).matrix();
        } else if (family == "separable") {
            long terms = 3;
            if (auto t = flags->get("terms")) {
                auto v = parse_long(*t);
                if (!v || *v < 1) {
                    err << "minneg: bad --terms \"" << *t << "\"\n";
                    return kExitUsage;
                }
                terms = *v;
            }
            matrix = random_separable(static_cast<int>(terms), seed).state.matrix();
        }
    } catch (const InvalidParameterError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitUsage;
    }

    MatrixFile file;
    file.matrix = matrix;
    return emit(flags->get("out"), file.to_string(), out, err) ? kExitOk : kExitUsage;
}

int cmd_sweep(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
    if (args.size() < 2 || args[1] != "werner") {
        err << "minneg: sweep supports only the werner family\n";
        return kExitUsage;
    }
    auto flags = parse_flags(args, 2, {"p-start", "p-end", "steps", "out"}, err);
    if (!flags) return kExitUsage;

    auto need = [&](const char* key) -> std::optional<double> {
        auto s = flags->get(key);
        if (!s) {
            err << "minneg: sweep werner needs --" << key << "\n";
            return std::nullopt;
        }
        auto v = parse_double(*s);
        if (!v) err << "minneg: bad --" << key << " \"" << *s << "\"\n";
        return v;
    };
    auto p_start = need("p-start");
    if (!p_start) return kExitUsage;
    auto p_end = need("p-end");
    if (!p_end) return kExitUsage;
    auto steps_s = flags->get("steps");
    if (!steps_s) {
        err << "minneg: sweep werner needs --steps\n";
        return kExitUsage;
    }
    auto steps = parse_long(*steps_s);
    if (!steps || *steps < 2) {
        err << "minneg: --steps must be an integer >= 2\n";
        return kExitUsage;
    }
    if (!(0.0 <= *p_start && *p_start <= *p_end && *p_end <= 1.0)) {
        err << "minneg: need 0 <= p-start <= p-end <= 1\n";
        return kExitUsage;
    }

    std::ostringstream csv;
    csv << "p,negativity_minors,negativity_eigen,separable\n";
    const long n = *steps;
    for (long i = 0; i < n; ++i) {
        // Uniform grid including both endpoints.
        const double p = *p_start + (*p_end - *p_start) *
                                        (static_cast<double>(i) / static_cast<double>(n - 1));
        const DensityMatrix rho = werner_state(p);
        const NegativityReport via_minors = negativity_minors(rho);
        const NegativityReport via_eigen = negativity_eigen(rho);
        const SeparabilityVerdict verdict =
            sylvester_separable(partial_transpose(rho.matrix(), Subsystem::A));
        csv << shortest(p) << ',' << shortest(via_minors.negativity) << ','
            << shortest(via_eigen.negativity) << ','
            << (verdict.separable ? "true" : "false") << '\n';
    }
    return emit(flags->get("out"), csv.str(), out, err) ? kExitOk : kExitUsage;
}

int cmd_bench(const std::vector<std::string>& args, std::ostream& out,
              std::ostream& err) {
    auto flags = parse_flags(args, 1, {"trials", "seed"}, err);
    if (!flags) return kExitUsage;

    long trials = 10000;
    if (auto t = flags->get("trials")) {
        auto v = parse_long(*t);
        if (!v || *v < 1) {
            err << "minneg: --trials must be an integer >= 1\n";
            return kExitUsage;
        }
        trials = *v;
    }
    std::uint64_t seed = 0;
    if (auto s = flags->get("seed")) {
        auto v = parse_u64(*s);
        if (!v) {
            err << "minneg: bad --seed \"" << *s << "\"\n";
            return kExitUsage;
        }
        seed = *v;
    }

    const std::size_t n = static_cast<std::size_t>(trials);

    // Inputs are prepared up front; generation and the partial transpose are
    // excluded from the timed regions.
    std::vector<Mat4> pts;
    pts.reserve(n);
    Rng rng(seed);
    for (std::size_t i = 0; i < n; ++i)
        pts.push_back(partial_transpose(random_density(rng).matrix(), Subsystem::A));

    std::vector<double> via_minors(n), via_eigen(n);

    // Touch every input once so both timed loops start warm.
    double warm = 0.0;
    for (const Mat4& pt : pts) warm += pt.trace().real();

    using clock = std::chrono::steady_clock;

    const auto t0 = clock::now();
    for (std::size_t i = 0; i < n; ++i) {
        const auto roots = quartic_real_roots(minor_sums(principal_minors(pts[i])));
        via_minors[i] = std::max(0.0, -roots[0]);
    }
    const auto t1 = clock::now();

    warm = 0.0;
    for (const Mat4& pt : pts) warm += pt.trace().real();

    const auto t2 = clock::now();
    for (std::size_t i = 0; i < n; ++i) {
        const EigenDecomposition ed = eigvalsh4(pts[i]);
        double abs_sum = 0.0;
        for (double ev : ed.eigenvalues) abs_sum += std::abs(ev);
        via_eigen[i] = std::max(0.0, (abs_sum - 1.0) / 2.0);
    }
    const auto t3 = clock::now();

    double max_disagreement = 0.0;
    double mean_negativity = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        max_disagreement = std::max(max_disagreement, std::abs(via_minors[i] - via_eigen[i]));
        mean_negativity += via_minors[i];
    }
    mean_negativity /= static_cast<double>(n);

    const auto ms = [](clock::duration d) {
        return std::chrono::duration<double, std::milli>(d).count();
    };
    const double minors_ms = ms(t1 - t0);
    const double eigen_ms = ms(t3 - t2);
    const double per_minors = minors_ms * 1e6 / static_cast<double>(n);
    const double per_eigen = eigen_ms * 1e6 / static_cast<double>(n);

    char line[160];
    out << "trials: " << trials << "\n";
    out << "seed: " << seed << "\n";
    out << "path         total_ms     per_state_ns\n";
    std::snprintf(line, sizeof(line), "minors   %12.3f %16.1f\n", minors_ms, per_minors);
    out << line;
    std::snprintf(line, sizeof(line), "eigen    %12.3f %16.1f\n", eigen_ms, per_eigen);
    out << line;
    out << "mean_negativity: " << shortest(mean_negativity) << "\n";
    out << "max_disagreement: " << shortest(max_disagreement) << "\n";

    if (max_disagreement > kAgreementTol) {
        err << "minneg: negativity paths disagree by " << shortest(max_disagreement)
            << " (limit " << shortest(kAgreementTol) << ")\n";
        return kExitCrossCheck;
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    if (args.empty() || args[0] == "help" || args[0] == "--help" || args[0] == "-h") {
        (args.empty() ? err : out) << kUsage;
        return args.empty() ? kExitUsage : kExitOk;
    }
    const std::string& cmd = args[0];
    try {
        if (cmd == "analyze") return cmd_analyze(args, out, err);
        if (cmd == "gen") return cmd_gen(args, out, err);
        if (cmd == "sweep") return cmd_sweep(args, out, err);
        if (cmd == "bench") return cmd_bench(args, out, err);
    } catch (const NotFiniteError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const NotHermitianError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const TraceNotOneError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const NotPsdError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitInvalidState;
    } catch (const ParseError& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error& e) {
        err << "minneg: " << e.what() << "\n";
        return kExitCrossCheck;
    }
    err << "minneg: unknown command \"" << cmd << "\"\n\n" << kUsage;
    return kExitUsage;
}

}  // namespace minneg::cli
