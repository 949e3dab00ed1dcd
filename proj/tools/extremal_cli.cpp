// Command-line front end: evaluates the extremal-metric functional values of
// the individual families, exports geodesic traces, and runs the full
// verification harness with machine-readable output.
//
// Exit codes: 0 success / all verified, 1 verification violation,
// 2 invalid arguments or domain error.

#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "extremal/bipolar.hpp"
#include "extremal/bounds.hpp"
#include "extremal/clifford.hpp"
#include "extremal/geodesic.hpp"
#include "extremal/lawson.hpp"
#include "extremal/otsuki.hpp"
#include "extremal/serialize.hpp"
#include "extremal/verify.hpp"

namespace {

using namespace extremal;

struct OutputOptions {
    std::string format = "human";
    int precision = 12;
};

void print_records(const std::vector<ExtremalRecord>& records,
                   const OutputOptions& opt) {
    if (opt.format == "json") {
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const auto& rec : records) arr.push_back(to_json(rec));
        std::cout << (records.size() == 1 ? to_json(records.front()).dump(2)
                                          : arr.dump(2))
                  << "\n";
    } else if (opt.format == "csv") {
        std::cout << csv_header << "\n";
        for (const auto& rec : records)
            std::cout << to_csv_row(rec, opt.precision) << "\n";
    } else {
        bool first = true;
        for (const auto& rec : records) {
            if (!first) std::cout << "\n";
            first = false;
            std::cout << to_human(rec, opt.precision);
        }
    }
}

void print_bound(const SupLowerBound& bound, const OutputOptions& opt) {
    if (opt.format == "json") {
        std::cout << nlohmann::ordered_json{{"topology", to_string(bound.topology)},
                                            {"n", bound.n},
                                            {"value", bound.value}}
                         .dump(2)
                  << "\n";
    } else if (opt.format == "csv") {
        std::cout << "topology,n,value\n"
                  << to_string(bound.topology) << "," << bound.n << ","
                  << format_double(bound.value, opt.precision) << "\n";
    } else {
        const char* formula = bound.topology == Topology::Torus
                                  ? "8*pi*(n-1+pi/sqrt(3))"
                                  : "8*pi*(n-1)+12*pi*E(2*sqrt(2)/3)";
        std::cout << "sup Lambda_" << bound.n << "(" << to_string(bound.topology)
                  << ") >= " << format_double(bound.value, opt.precision) << "   ["
                  << formula << "]\n";
    }
}

void write_trace_csv(const GeodesicTrace& trace, const std::string& path) {
    std::ofstream out(path, std::ios::binary);  // LF line endings everywhere
    if (!out) throw std::invalid_argument("cannot open output file: " + path);
    out << "s,phi,theta\n";
    // decimate to at most 10^4 rows
    const std::size_t n = trace.samples.size();
    const std::size_t stride = n > 10000 ? (n + 9999) / 10000 : 1;
    for (std::size_t i = 0; i < n; i += stride) {
        const auto& smp = trace.samples[i];
        out << format_double(smp.s, 17) << "," << format_double(smp.phi, 17) << ","
            << format_double(smp.theta, 17) << "\n";
    }
    if ((n - 1) % stride != 0) {
        const auto& smp = trace.samples.back();
        out << format_double(smp.s, 17) << "," << format_double(smp.phi, 17) << ","
            << format_double(smp.theta, 17) << "\n";
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Eigenvalue-functional values of known extremal metrics on the "
                 "torus and Klein bottle, with non-maximality verification"};
    app.require_subcommand(1);

    OutputOptions opt;
    app.add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "human"}))
        ->capture_default_str();
    app.add_option("--precision", opt.precision, "Printed digits")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();

    long long p = 0, q = 0, m = 0, k = 0, n = 0;
    long long max_q = 30, max_m = 100, max_r2 = 10000;
    double tol = 1e-12;
    std::string surface, out_path;

    auto* otsuki_cmd = app.add_subcommand("otsuki", "Otsuki torus O_{p/q}");
    auto* otsuki_p = otsuki_cmd->add_option("--p", p, "numerator");
    auto* otsuki_q = otsuki_cmd->add_option("--q", q, "denominator");
    auto* otsuki_enum =
        otsuki_cmd->add_subcommand("enumerate", "List valid parameters");
    otsuki_enum->add_option("--max-q", max_q, "largest denominator")->required();

    auto* lawson_cmd = app.add_subcommand("lawson", "Lawson tau-surface tau_{m,k}");
    lawson_cmd->add_option("--m", m, "m")->required();
    lawson_cmd->add_option("--k", k, "k")->required();

    auto* bipolar_cmd = app.add_subcommand("bipolar", "Bipolar surfaces");
    bipolar_cmd->require_subcommand(1);
    auto* bip_lawson = bipolar_cmd->add_subcommand("lawson", "tau~_{m,k}");
    bip_lawson->add_option("--m", m, "m")->required();
    bip_lawson->add_option("--k", k, "k")->required();
    auto* bip_otsuki = bipolar_cmd->add_subcommand("otsuki", "O~_{p/q}");
    bip_otsuki->add_option("--p", p, "numerator")->required();
    bip_otsuki->add_option("--q", q, "denominator")->required();

    auto* clifford_cmd =
        app.add_subcommand("clifford", "Clifford torus extremal indices");
    clifford_cmd->add_option("--max-r2", max_r2, "largest r^2")->required();

    auto* bounds_cmd = app.add_subcommand("bounds", "Lower bound for sup Lambda_n");
    bounds_cmd->add_option("--surface", surface, "torus|klein")
        ->required()
        ->check(CLI::IsMember({"torus", "klein"}));
    bounds_cmd->add_option("--n", n, "functional index")->required();

    auto* geodesic_cmd =
        app.add_subcommand("geodesic", "Trace the closed geodesic of O_{p/q}");
    geodesic_cmd->add_option("--p", p, "numerator")->required();
    geodesic_cmd->add_option("--q", q, "denominator")->required();
    geodesic_cmd->add_option("--out", out_path, "CSV output path (s,phi,theta)")
        ->required();

    auto* verify_cmd =
        app.add_subcommand("verify", "Run the full non-maximality harness");
    verify_cmd->add_option("--max-q", max_q, "Otsuki denominator limit")
        ->capture_default_str();
    verify_cmd->add_option("--max-m", max_m, "Lawson m limit")->capture_default_str();
    verify_cmd->add_option("--max-r2", max_r2, "Clifford r^2 limit")
        ->capture_default_str();
    verify_cmd->add_option("--tol", tol, "equality-case tolerance")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (otsuki_cmd->parsed()) {
            if (otsuki_enum->parsed()) {
                std::vector<ExtremalRecord> records;
                for (const auto& param : enumerate_parameters(max_q))
                    records.push_back(otsuki_lambda(param));
                print_records(records, opt);
            } else {
                if (!*otsuki_p || !*otsuki_q)
                    throw std::invalid_argument("otsuki: --p and --q are required");
                print_records({otsuki_lambda(OtsukiParameter::checked(p, q))}, opt);
            }
        } else if (lawson_cmd->parsed()) {
            print_records({lawson_lambda(LawsonParameter::checked(m, k))}, opt);
        } else if (bip_lawson->parsed()) {
            print_records({bipolar_lawson_record(LawsonParameter::checked(m, k))}, opt);
        } else if (bip_otsuki->parsed()) {
            print_records({bipolar_otsuki_record(OtsukiParameter::checked(p, q))}, opt);
        } else if (clifford_cmd->parsed()) {
            print_records(clifford_records(max_r2), opt);
        } else if (bounds_cmd->parsed()) {
            print_bound(sup_bound(surface == "torus" ? Topology::Torus
                                                     : Topology::KleinBottle,
                                  n),
                        opt);
        } else if (geodesic_cmd->parsed()) {
            const auto param = OtsukiParameter::checked(p, q);
            const auto angle = solve_parameter(param);
            const auto trace = trace_geodesic(angle, param);
            write_trace_csv(trace, out_path);
            std::cout << "trace: " << trace.samples.size() << " samples, length "
                      << format_double(trace.length, opt.precision) << ", "
                      << (trace.closed ? "closed" : "NOT closed") << " (mismatch "
                      << format_double(trace.mismatch, 3) << ")\n";
        } else if (verify_cmd->parsed()) {
            const VerifyLimits limits{max_q, max_m, max_r2};
            const auto rep = report(verify_all(limits), sweep_properties(), tol);
            if (opt.format == "json") {
                std::cout << to_json(rep).dump(2) << "\n";
            } else if (opt.format == "csv") {
                std::cout << csv_header << "\n";
                for (const auto& rec : rep.records)
                    std::cout << to_csv_row(rec, opt.precision) << "\n";
            } else {
                std::cout << rep.records.size() << " records, " << rep.sweeps.size()
                          << " sweeps\n";
                for (const auto& sw : rep.sweeps)
                    std::cout << "sweep " << sw.name << ": "
                              << (sw.pass ? "pass" : "FAIL") << " (worst margin "
                              << format_double(sw.worst_margin, 6) << " at "
                              << format_double(sw.worst_location, 6) << ")\n";
                for (const auto& v : rep.violations) std::cout << "VIOLATION: " << v << "\n";
                std::cout << "verdict: " << (rep.pass ? "pass" : "fail") << "\n";
            }
            for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
            return rep.pass ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
