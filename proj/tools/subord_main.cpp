// Command-line front end: extremal constants, domain geometry, sufficient
// condition checks, parameter-region scans, implication verification and the
// operator identity check. Emits JSON or CSV artifacts; floating output is
// rounded to 9 significant digits so identical invocations produce identical
// bytes.
//
// Exit codes: 0 success (or condition holds / zero violations),
//             1 condition fails or verification found violations,
//             2 usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "subord/admissibility.hpp"
#include "subord/conditions.hpp"
#include "subord/serialization.hpp"
#include "subord/verifier.hpp"

namespace {

using subord::Json;
using subord::round9;

struct CommonOpts {
    std::string out;
    std::string format; // per-command default when empty
};

// --h names a majorant domain, so help stays long-form only everywhere
CLI::App* make_subcommand(CLI::App& app, const std::string& name, const std::string& desc) {
    CLI::App* cmd = app.add_subcommand(name, desc);
    cmd->set_help_flag("--help", "print help");
    return cmd;
}

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--out", opts.out, "write output to a file instead of stdout");
    cmd->add_option("--format", opts.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

void write_output(const CommonOpts& opts, const std::string& text) {
    if (opts.out.empty()) {
        std::fputs(text.c_str(), stdout);
        return;
    }
    std::ofstream f(opts.out, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + opts.out + " for writing");
    f << text;
}

std::string format_of(const CommonOpts& opts, const char* dflt) {
    return opts.format.empty() ? dflt : opts.format;
}

std::string csv_num(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", x);
    return buf;
}

subord::TargetDomain domain_from_flags(const std::string& name, double C, double D) {
    subord::DomainKind kind;
    if (!subord::parse_domain_kind(name, kind))
        throw CLI::ValidationError("--domain", "unknown domain '" + name + "'");
    return subord::TargetDomain::of_kind(kind, C, D);
}

subord::TheoremId theorem_from_flags(const std::string& target, int order, const std::string& h,
                                     std::optional<double> C, std::optional<double> D) {
    subord::Target tgt;
    if (target == "sine") tgt = subord::Target::Sine;
    else if (target == "petal") tgt = subord::Target::Petal;
    else throw CLI::ValidationError("--target", "must be sine or petal");
    subord::DomainKind h_kind;
    if (!subord::parse_domain_kind(h, h_kind))
        throw CLI::ValidationError("--h", "unknown domain '" + h + "'");
    std::optional<std::pair<double, double>> jan;
    if (h_kind == subord::DomainKind::Janowski) {
        if (!C || !D) throw CLI::ValidationError("--h", "janowski requires --C and --D");
        jan = std::make_pair(*C, *D);
    }
    return subord::TheoremId(tgt, order, h_kind, jan);
}

int run_constants(const CommonOpts& opts) {
    const subord::AdmissibilityProfile profile = subord::nu_constants(subord::Target::Sine);
    const double r0 = subord::solve_r0();
    if (format_of(opts, "json") == "json") {
        Json j{{"nu0", round9(profile.nu0)},
               {"nu1", round9(profile.nu1)},
               {"r0", round9(r0)},
               {"sinh1", round9(std::sinh(1.0))},
               {"e_minus_1", round9(std::numbers::e - 1.0)},
               {"half_pi", round9(std::numbers::pi / 2.0)},
               {"sqrt2", round9(std::sqrt(2.0))},
               {"e", round9(std::numbers::e)}};
        write_output(opts, j.dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "name,value\n"
           << "nu0," << csv_num(profile.nu0) << "\n"
           << "nu1," << csv_num(profile.nu1) << "\n"
           << "r0," << csv_num(r0) << "\n"
           << "sinh1," << csv_num(std::sinh(1.0)) << "\n"
           << "e_minus_1," << csv_num(std::numbers::e - 1.0) << "\n"
           << "half_pi," << csv_num(std::numbers::pi / 2.0) << "\n"
           << "sqrt2," << csv_num(std::sqrt(2.0)) << "\n"
           << "e," << csv_num(std::numbers::e) << "\n";
        write_output(opts, os.str());
    }
    return 0;
}

int run_boundary(const CommonOpts& opts, const subord::TargetDomain& domain, int samples) {
    const std::vector<subord::Complex> pts = domain.boundary(samples);
    if (format_of(opts, "csv") == "csv") {
        std::ostringstream os;
        os << "theta,re,im\n";
        for (int k = 0; k < samples; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / samples;
            os << csv_num(theta) << "," << csv_num(pts[static_cast<size_t>(k)].real()) << ","
               << csv_num(pts[static_cast<size_t>(k)].imag()) << "\n";
        }
        write_output(opts, os.str());
    } else {
        Json points = Json::array();
        for (int k = 0; k < samples; ++k) {
            const double theta = 2.0 * std::numbers::pi * k / samples;
            points.push_back(Json::array({round9(theta), round9(pts[static_cast<size_t>(k)].real()),
                                          round9(pts[static_cast<size_t>(k)].imag())}));
        }
        Json j{{"domain", domain.name()}, {"samples", samples}, {"points", std::move(points)}};
        write_output(opts, j.dump(2) + "\n");
    }
    return 0;
}

int run_enclosing_disk(const CommonOpts& opts, const subord::TargetDomain& domain) {
    const subord::EnclosingDisk disk = domain.enclosing_disk();
    if (format_of(opts, "json") == "json") {
        write_output(opts, subord::to_json(disk).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "center_re,center_im,radius\n"
           << csv_num(disk.center.real()) << "," << csv_num(disk.center.imag()) << ","
           << csv_num(disk.radius) << "\n";
        write_output(opts, os.str());
    }
    return 0;
}

int run_check(const CommonOpts& opts, const subord::ConditionReport& report) {
    if (format_of(opts, "json") == "json") {
        write_output(opts, subord::to_json(report).dump(2) + "\n");
    } else {
        std::ostringstream os;
        os << "lhs,rhs,margin,holds\n"
           << csv_num(report.lhs) << "," << csv_num(report.rhs) << "," << csv_num(report.margin)
           << "," << (report.holds ? 1 : 0) << "\n";
        write_output(opts, os.str());
    }
    return report.holds ? 0 : 1;
}

int run_scan(const CommonOpts& opts, const std::vector<subord::ScanCell>& cells) {
    if (format_of(opts, "csv") == "csv") {
        std::ostringstream os;
        os << "beta1,beta2,margin,holds\n";
        for (const subord::ScanCell& c : cells)
            os << csv_num(c.beta1) << "," << csv_num(c.beta2) << "," << csv_num(c.margin) << ","
               << (c.holds ? 1 : 0) << "\n";
        write_output(opts, os.str());
    } else {
        Json rows = Json::array();
        for (const subord::ScanCell& c : cells)
            rows.push_back(Json{{"beta1", round9(c.beta1)},
                                {"beta2", round9(c.beta2)},
                                {"margin", round9(c.margin)},
                                {"holds", c.holds}});
        write_output(opts, Json{{"cells", std::move(rows)}}.dump(2) + "\n");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical toolkit for second/third-order differential subordination"};
    app.set_help_flag("--help", "print help");
    app.require_subcommand(1);

    // constants
    CommonOpts constants_opts;
    CLI::App* constants = make_subcommand(app, "constants", "extremal constants as JSON/CSV");
    add_common(constants, constants_opts);

    // boundary
    CommonOpts boundary_opts;
    std::string boundary_domain = "sine";
    int boundary_samples = 256;
    double bC = 1.0, bD = 0.0;
    CLI::App* boundary = make_subcommand(app, "boundary", "sample a target-domain boundary curve");
    boundary->add_option("--domain", boundary_domain, "target domain name")->required();
    boundary->add_option("--samples", boundary_samples, "number of samples (>= 8)")
        ->check(CLI::Range(8, 1 << 22));
    boundary->add_option("--C", bC, "janowski C");
    boundary->add_option("--D", bD, "janowski D");
    add_common(boundary, boundary_opts);

    // enclosing-disk
    CommonOpts disk_opts;
    std::string disk_domain = "sine";
    double dC = 1.0, dD = 0.0;
    CLI::App* disk = make_subcommand(app, "enclosing-disk", "smallest covering disk about 1");
    disk->add_option("--domain", disk_domain, "target domain name")->required();
    disk->add_option("--C", dC, "janowski C");
    disk->add_option("--D", dD, "janowski D");
    add_common(disk, disk_opts);

    // check
    CommonOpts check_opts;
    std::string check_target = "sine", check_h;
    int check_order = 2;
    double cb1 = 0.0, cb2 = 0.0;
    std::optional<double> cb3, cC, cD;
    int check_m = 2, check_k = 2;
    CLI::App* check = make_subcommand(app, "check", "evaluate one sufficient condition");
    check->add_option("--target", check_target, "sine or petal")->required();
    check->add_option("--order", check_order, "2 or 3")->required()->check(CLI::Range(2, 3));
    check->add_option("--h", check_h, "majorant domain name")->required();
    check->add_option("--beta1", cb1)->required();
    check->add_option("--beta2", cb2)->required();
    check->add_option("--beta3", cb3);
    check->add_option("--m", check_m);
    check->add_option("--k", check_k);
    check->add_option("--C", cC, "janowski C");
    check->add_option("--D", cD, "janowski D");
    add_common(check, check_opts);

    // scan
    CommonOpts scan_opts;
    std::string scan_target = "sine", scan_h;
    int scan_order = 2, scan_resolution = 32;
    double sb1min = 0.0, sb1max = 10.0, sb2min = 0.0, sb2max = 5.0, sb3 = 0.0;
    std::optional<double> sC, sD;
    int scan_m = 2, scan_k = 2;
    CLI::App* scan = make_subcommand(app, "scan", "raster scan of a condition margin");
    scan->add_option("--target", scan_target)->required();
    scan->add_option("--order", scan_order)->required()->check(CLI::Range(2, 3));
    scan->add_option("--h", scan_h)->required();
    scan->add_option("--beta1-min", sb1min);
    scan->add_option("--beta1-max", sb1max);
    scan->add_option("--beta2-min", sb2min);
    scan->add_option("--beta2-max", sb2max);
    scan->add_option("--resolution", scan_resolution)->check(CLI::Range(2, 4096));
    scan->add_option("--beta3", sb3);
    scan->add_option("--m", scan_m);
    scan->add_option("--k", scan_k);
    scan->add_option("--C", sC, "janowski C");
    scan->add_option("--D", sD, "janowski D");
    add_common(scan, scan_opts);

    // verify
    CommonOpts verify_opts;
    std::string verify_target = "sine", verify_h, verify_family = "all";
    int verify_order = 2;
    double vb1 = 0.0, vb2 = 0.0;
    std::optional<double> vb3, vC, vD;
    int verify_m = 2, verify_k = 2;
    double vradius = 0.99;
    int vradial = 64, vangular = 512;
    CLI::App* verify = make_subcommand(app, "verify", "premise/conclusion implication test");
    verify->add_option("--target", verify_target)->required();
    verify->add_option("--order", verify_order)->required()->check(CLI::Range(2, 3));
    verify->add_option("--h", verify_h)->required();
    verify->add_option("--beta1", vb1)->required();
    verify->add_option("--beta2", vb2)->required();
    verify->add_option("--beta3", vb3);
    verify->add_option("--m", verify_m);
    verify->add_option("--k", verify_k);
    verify->add_option("--C", vC, "janowski C");
    verify->add_option("--D", vD, "janowski D");
    verify->add_option("--family", verify_family, "linear, quadratic, scaled or all");
    verify->add_option("--radius", vradius, "grid radius")->check(CLI::Range(0.01, 0.999));
    verify->add_option("--radial-steps", vradial)->check(CLI::Range(1, 4096));
    verify->add_option("--angular-steps", vangular)->check(CLI::Range(16, 65536));
    add_common(verify, verify_opts);

    // identity
    CommonOpts identity_opts;
    std::string identity_which = "sf";
    int identity_trials = 100, identity_degree = 12;
    unsigned int identity_seed = 20240811;
    double identity_tolerance = 1e-9;
    double ib1 = 1.0, ib2 = 1.0, ib3 = 1.0;
    CLI::App* identity = make_subcommand(app, "identity", "two-route operator comparison");
    identity->add_option("--which", identity_which, "sf or thetaf")
        ->check(CLI::IsMember({"sf", "thetaf"}));
    identity->add_option("--trials", identity_trials)->check(CLI::Range(1, 1000000));
    identity->add_option("--degree", identity_degree)->check(CLI::Range(2, 64));
    identity->add_option("--seed", identity_seed);
    identity->add_option("--tolerance", identity_tolerance);
    identity->add_option("--beta1", ib1);
    identity->add_option("--beta2", ib2);
    identity->add_option("--beta3", ib3);
    add_common(identity, identity_opts);

    try {
        app.parse(argc, argv);

        if (constants->parsed()) return run_constants(constants_opts);

        if (boundary->parsed())
            return run_boundary(boundary_opts, domain_from_flags(boundary_domain, bC, bD),
                                boundary_samples);

        if (disk->parsed())
            return run_enclosing_disk(disk_opts, domain_from_flags(disk_domain, dC, dD));

        if (check->parsed()) {
            const subord::TheoremId id = theorem_from_flags(check_target, check_order, check_h, cC, cD);
            const subord::OperatorParams params =
                check_order == 3 ? subord::OperatorParams::third_order(cb1, cb2, cb3.value_or(0.0))
                                 : subord::OperatorParams::second_order(cb1, cb2);
            if (check_order == 3 && !cb3)
                throw CLI::ValidationError("--beta3", "required for order 3");
            return run_check(check_opts,
                             subord::evaluate_condition(id, params, subord::MKPair(check_m, check_k)));
        }

        if (scan->parsed()) {
            const subord::TheoremId id = theorem_from_flags(scan_target, scan_order, scan_h, sC, sD);
            return run_scan(scan_opts,
                            subord::region_scan(id, sb1min, sb1max, sb2min, sb2max, scan_resolution,
                                                sb3, subord::MKPair(scan_m, scan_k)));
        }

        if (verify->parsed()) {
            const subord::TheoremId id =
                theorem_from_flags(verify_target, verify_order, verify_h, vC, vD);
            if (verify_order == 3 && !vb3)
                throw CLI::ValidationError("--beta3", "required for order 3");
            const subord::OperatorParams params =
                verify_order == 3 ? subord::OperatorParams::third_order(vb1, vb2, *vb3)
                                  : subord::OperatorParams::second_order(vb1, vb2);
            std::vector<subord::FamilySpec> families;
            if (verify_family == "all") {
                families = {subord::FamilySpec::linear(), subord::FamilySpec::quadratic(),
                            subord::FamilySpec::scaled_target()};
            } else {
                subord::FamilyKind kind;
                if (!subord::parse_family_kind(verify_family, kind))
                    throw CLI::ValidationError("--family", "unknown family '" + verify_family + "'");
                subord::FamilySpec spec;
                if (kind == subord::FamilyKind::Linear) spec = subord::FamilySpec::linear();
                else if (kind == subord::FamilyKind::Quadratic) spec = subord::FamilySpec::quadratic();
                else spec = subord::FamilySpec::scaled_target();
                families = {spec};
            }
            const subord::GridSpec grid{vradius, vradial, vangular};
            const subord::ImplicationReport report = subord::implication_test(
                id, params, families, grid, subord::MKPair(verify_m, verify_k));
            write_output(verify_opts, subord::to_json(report).dump(2) + "\n");
            return report.violations.empty() ? 0 : 1;
        }

        if (identity->parsed()) {
            const subord::IdentityKind which =
                identity_which == "sf" ? subord::IdentityKind::Sf : subord::IdentityKind::Thetaf;
            const subord::OperatorParams params =
                which == subord::IdentityKind::Sf
                    ? subord::OperatorParams::second_order(ib1, ib2)
                    : subord::OperatorParams::third_order(ib1, ib2, ib3);
            subord::IdentityReport report =
                subord::identity_test(which, identity_trials, identity_degree, identity_seed, params);
            Json j = subord::to_json(report);
            j["tolerance"] = round9(identity_tolerance);
            const bool pass = report.max_deviation < identity_tolerance;
            j["pass"] = pass;
            write_output(identity_opts, j.dump(2) + "\n");
            return pass ? 0 : 1;
        }
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const subord::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
