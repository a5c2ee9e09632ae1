#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "pmolp/core.hpp"
#include "pmolp/efftest.hpp"
#include "pmolp/enumerate.hpp"
#include "pmolp/error.hpp"
#include "pmolp/io.hpp"
#include "pmolp/oracle.hpp"
#include "pmolp/scalarize.hpp"

namespace pmolp::cli {

enum ExitCode : int {
    kOk = 0,
    kParse = 2,
    kDimension = 3,
    kSolver = 4,
    kSizeCap = 5,
};

struct Options {
    std::string matrix_path;
    std::string format = "auto";
    Tolerances tol;
    std::uint64_t seed = 1;
    bool json = false;
    std::optional<std::size_t> max_support;
    bool allow_large_n = false;

    std::vector<std::string> points;
    std::string weights;
    bool oracle = false;
    std::size_t density = 10;
    std::size_t trials = 0;
};

namespace detail {

inline CriteriaMatrix load(const Options& o) {
    io::MatrixFormat f = io::MatrixFormat::Auto;
    if (o.format == "json") {
        f = io::MatrixFormat::Json;
    } else if (o.format == "csv") {
        f = io::MatrixFormat::Csv;
    }
    return io::load_matrix(o.matrix_path, f);
}

inline SimplexPoint point_for(const CriteriaMatrix& c, const std::string& literal,
                              const Tolerances& tol) {
    auto x = io::parse_point(literal, tol);
    if (x.size() != c.columns()) {
        throw DimensionMismatch("point '" + literal + "' has " + std::to_string(x.size()) +
                                " components, matrix has " + std::to_string(c.columns()) +
                                " columns");
    }
    return x;
}

inline void cmd_test(const Options& o, std::ostream& out) {
    EfficiencyTester tester(load(o), o.tol);
    // Parse every point first so a bad one fails before any output.
    std::vector<SimplexPoint> xs;
    for (const auto& p : o.points) xs.push_back(point_for(tester.matrix(), p, o.tol));
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const auto r = tester.decide(xs[i]);
        if (o.json) {
            out << io::report_json(r) << '\n';
        } else {
            if (i) out << '\n';
            out << io::report_text(r);
        }
    }
}

inline void cmd_enumerate(const Options& o, std::ostream& out) {
    EfficiencyTester tester(load(o), o.tol);
    const auto s = enumerate_faces(tester, {o.max_support, o.allow_large_n});
    if (!o.oracle) {
        out << (o.json ? io::structure_json(s) + "\n" : io::structure_text(s));
        return;
    }

    // Cross-check each vertex and each scanned face barycenter.
    const auto& c = tester.matrix();
    const std::size_t n = c.columns();
    struct Row {
        SupportPattern support;
        Verdict decided;
        Verdict oracle;
    };
    std::vector<Row> rows;
    auto check = [&](const SupportPattern& sp) {
        const auto x = barycenter(sp, n);
        rows.push_back({sp, tester.decide(x).verdict, oracle::dominance_lp_verdict(c, x, o.tol)});
    };
    for (std::size_t j = 0; j < n; ++j) check(SupportPattern::single(j, n));
    const std::size_t hi = o.max_support ? std::min(*o.max_support, n - 1) : n - 1;
    for_each_pattern(n, 2, hi, check);
    std::size_t disagreements = 0;
    for (const auto& r : rows) disagreements += r.decided != r.oracle;

    if (o.json) {
        std::string js = io::structure_json(s);
        js.pop_back();
        js += ",\"oracle\":[";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i) js += ',';
            js += "{\"support\":" + io::json_indices(rows[i].support.indices()) +
                  ",\"verdict\":" + io::json_string(to_string(rows[i].decided)) +
                  ",\"oracle\":" + io::json_string(to_string(rows[i].oracle)) +
                  ",\"agree\":" + (rows[i].decided == rows[i].oracle ? "true" : "false") + "}";
        }
        js += "],\"disagreements\":" + std::to_string(disagreements) + "}";
        out << js << '\n';
    } else {
        out << io::structure_text(s);
        for (const auto& r : rows) {
            out << "oracle:     " << io::text_indices(r.support.indices()) << ' '
                << to_string(r.decided) << " / " << to_string(r.oracle)
                << (r.decided == r.oracle ? "" : "  DISAGREE") << '\n';
        }
        out << "disagreements: " << disagreements << '\n';
    }
}

inline void cmd_check_full(const Options& o, std::ostream& out) {
    const auto f = check_full(load(o), o.tol);
    if (o.json) {
        out << "{\"full\":" << (f.full ? "true" : "false") << ",\"certificate\":"
            << (f.certificate ? io::json_numbers(f.certificate->values()) : "null") << "}\n";
    } else {
        out << "full:        " << (f.full ? "true" : "false") << '\n';
        out << "certificate: " << (f.certificate ? io::text_numbers(f.certificate->values()) : "none")
            << '\n';
    }
}

inline void cmd_scalarize(const Options& o, std::ostream& out) {
    const auto c = load(o);
    const auto w = io::parse_weights(o.weights);
    const auto d = weighted_objective(c, w);
    const auto j = argmax_set(d, o.tol);
    const auto s = SolutionSetDescriptor::from_argmax(j, c.columns());
    if (o.json) {
        out << "{\"coeffs\":" << io::json_numbers(d.coeffs)
            << ",\"dmax\":" << io::format_number(d.dmax)
            << ",\"argmax\":" << io::json_indices(j.indices())
            << ",\"solution_set\":{\"kind\":" << io::json_string(to_string(s.kind))
            << ",\"support\":" << io::json_indices(s.support.indices()) << "}"
            << ",\"positive_weights\":" << (w.strictly_positive() ? "true" : "false") << "}\n";
    } else {
        out << "coeffs:       " << io::text_numbers(d.coeffs) << '\n';
        out << "dmax:         " << io::format_number(d.dmax) << '\n';
        out << "argmax:       " << io::text_indices(j.indices()) << '\n';
        out << "solution set: " << to_string(s.kind) << ' ' << io::text_indices(s.support.indices())
            << '\n';
    }
}

inline void cmd_bicheck(const Options& o, std::ostream& out) {
    const bool ok = bicriterion_full_check(load(o), o.tol);
    if (o.json) {
        out << "{\"bicriterion_full\":" << (ok ? "true" : "false") << "}\n";
    } else {
        out << "bicriterion full: " << (ok ? "true" : "false") << '\n';
    }
}

inline void cmd_plot3(const Options& o, std::ostream& out) {
    EfficiencyTester tester(load(o), o.tol);
    if (tester.matrix().columns() != 3) {
        throw DimensionMismatch("plot3 needs a matrix with exactly 3 columns");
    }
    if (o.density == 0) throw InvalidInput("density must be at least 1");
    const std::size_t m = o.density;
    const double dm = static_cast<double>(m);
    out << "x1,x2,x3,verdict\n";
    for (std::size_t a = 0; a <= m; ++a) {
        for (std::size_t b = 0; a + b <= m; ++b) {
            const std::vector<double> x{static_cast<double>(a) / dm, static_cast<double>(b) / dm,
                                        static_cast<double>(m - a - b) / dm};
            const auto r = tester.decide(SimplexPoint(x, o.tol));
            out << io::format_number(x[0]) << ',' << io::format_number(x[1]) << ','
                << io::format_number(x[2]) << ',' << to_string(r.verdict) << '\n';
        }
    }
}

inline void cmd_oracle(const Options& o, std::ostream& out) {
    const auto c = load(o);
    std::vector<SimplexPoint> xs;
    for (const auto& p : o.points) xs.push_back(point_for(c, p, o.tol));
    for (const auto& x : xs) {
        const auto r = oracle::dominance_lp(c, x, o.tol);
        std::optional<SimplexPoint> sampled;
        if (o.trials > 0) sampled = oracle::sample_dominators(c, x, o.trials, o.seed, o.tol);
        const std::vector<double> pt(x.coords().begin(), x.coords().end());
        if (o.json) {
            out << "{\"point\":" << io::json_numbers(pt)
                << ",\"verdict\":" << io::json_string(to_string(r.verdict))
                << ",\"slack\":" << io::format_number(r.slack);
            if (o.trials > 0) {
                out << ",\"sampled_dominator\":";
                if (sampled) {
                    out << io::json_numbers({sampled->coords().begin(), sampled->coords().end()});
                } else {
                    out << "null";
                }
            }
            out << "}\n";
        } else {
            out << "point:   " << io::text_numbers(pt) << '\n';
            out << "verdict: " << to_string(r.verdict) << '\n';
            out << "slack:   " << io::format_number(r.slack) << '\n';
            if (o.trials > 0) {
                out << "sampled dominator: "
                    << (sampled ? io::text_numbers({sampled->coords().begin(), sampled->coords().end()})
                                : std::string("none found"))
                    << '\n';
            }
        }
    }
}

}  // namespace detail

/// Runs the command line and returns the process exit code.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Efficiency analysis for multiple-objective linear programs over the "
                 "probability simplex"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol-x", o.tol.x, "zero threshold for point components")
        ->capture_default_str();
    app.add_option("--tol-d", o.tol.d, "tie threshold for objective coefficients")
        ->capture_default_str();
    app.add_option("--tol-lp", o.tol.lp, "simplex pivot and feasibility tolerance")
        ->capture_default_str();
    app.add_option("--seed", o.seed, "seed for the dominator sampler")->capture_default_str();
    app.add_flag("--json", o.json, "emit structured JSON instead of text");
    app.add_option("--max-support", o.max_support, "largest face size to scan");
    app.add_flag("--allow-large-n", o.allow_large_n, "permit face enumeration for n > 16");
    app.add_option("--format", o.format, "matrix file format")
        ->check(CLI::IsMember({"auto", "json", "csv"}))
        ->capture_default_str();

    auto matrix_arg = [&](CLI::App* sub) {
        sub->add_option("matrix", o.matrix_path, "criteria matrix file (.json or csv)")->required();
    };

    auto* test = app.add_subcommand("test", "decide efficiency of one or more points");
    matrix_arg(test);
    test->add_option("-p,--point", o.points, "comma-separated point, e.g. 0.5,0.5,0")
        ->required();

    auto* enumerate = app.add_subcommand("enumerate", "efficient vertices and open faces");
    matrix_arg(enumerate);
    enumerate->add_flag("--oracle", o.oracle, "cross-check every verdict with the dominance LP");

    auto* full = app.add_subcommand("check-full", "whether every feasible point is efficient");
    matrix_arg(full);

    auto* scal = app.add_subcommand("scalarize", "weighted objective and its argmax set");
    matrix_arg(scal);
    scal->add_option("-w,--weights", o.weights, "comma-separated weights")->required();

    auto* bi = app.add_subcommand("bicheck", "closed-form full-efficiency check for k = 2");
    matrix_arg(bi);

    auto* plot = app.add_subcommand("plot3", "verdict grid over the simplex for n = 3");
    matrix_arg(plot);
    plot->add_option("--density", o.density, "grid subdivisions per edge")->capture_default_str();

    auto* orc = app.add_subcommand("oracle", "dominance-LP verdict only");
    matrix_arg(orc);
    orc->add_option("-p,--point", o.points, "comma-separated point")->required();
    orc->add_option("--trials", o.trials, "also sample this many points looking for a dominator");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kParse;
    }

    try {
        o.tol.validate();
        if (test->parsed()) {
            detail::cmd_test(o, out);
        } else if (enumerate->parsed()) {
            detail::cmd_enumerate(o, out);
        } else if (full->parsed()) {
            detail::cmd_check_full(o, out);
        } else if (scal->parsed()) {
            detail::cmd_scalarize(o, out);
        } else if (bi->parsed()) {
            detail::cmd_bicheck(o, out);
        } else if (plot->parsed()) {
            detail::cmd_plot3(o, out);
        } else if (orc->parsed()) {
            detail::cmd_oracle(o, out);
        }
    } catch (const DimensionMismatch& e) {
        err << "error: " << e.what() << '\n';
        return kDimension;
    } catch (const SolverFailure& e) {
        err << "error: " << e.what() << '\n';
        return kSolver;
    } catch (const SizeCapExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kSizeCap;
    } catch (const InvalidInput& e) {
        err << "error: " << e.what() << '\n';
        return kParse;
    }
    return kOk;
}

}  // namespace pmolp::cli
