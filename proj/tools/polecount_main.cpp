// polecount: resonance (scattering-pole) distributions for the sphere and
// the transparent obstacle, and the sharp counting constant A_{S^{n-1}}.

#include "polecount/constants.hpp"
#include "polecount/counting.hpp"
#include "polecount/olver.hpp"
#include "polecount/records.hpp"
#include "polecount/sphere.hpp"
#include "polecount/transparent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

using nlohmann::ordered_json;
using namespace polecount;

constexpr const char* kVersion = "0.1.0";

void emit(const ordered_json& j, const std::string& out_path)
{
    if (out_path.empty()) {
        std::cout << j.dump(2) << '\n';
    } else {
        std::ofstream os(out_path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open output file: " + out_path);
        os << j.dump(2) << '\n';
    }
}

void write_csv(const std::vector<ResonanceRecord>& recs, const std::string& path,
               bool with_family)
{
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("cannot open output file: " + path);
    write_records_csv(os, recs, with_family);
}

void check_common(int n, double r0, double tol)
{
    if (n < 3 || n % 2 == 0) throw CLI::ValidationError("--n must be odd and >= 3");
    if (r0 <= 0.0) throw CLI::ValidationError("--radius must be > 0");
    if (tol < 1e-12 || tol > 1e-3) throw CLI::ValidationError("--tol must be in [1e-12, 1e-3]");
}

ordered_json config_json(const char* cmd, int n, double r0, double rmax, double tol)
{
    ordered_json j;
    j["subcommand"] = cmd;
    j["n"] = n;
    j["radius"] = r0;
    if (rmax > 0.0) j["rmax"] = rmax;
    j["tol"] = tol;
    return j;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"scattering-pole counting for the sphere and the transparent obstacle"};
    app.require_subcommand(1);

    int n = 3;
    double r0 = 1.0, rmax = 10.0, c = 0.5, tol = 1e-8, rr = 1.01, rtarget = 0.0;
    int samples = 512;
    std::string out, emit_zeros, input;

    auto add_common = [&](CLI::App* sub, bool with_rmax) {
        sub->add_option("--n", n, "odd dimension, >= 3")->capture_default_str();
        sub->add_option("--radius", r0, "interface radius R0")->capture_default_str();
        if (with_rmax) sub->add_option("--rmax", rmax, "count |lambda| < rmax")->capture_default_str();
        sub->add_option("--tol", tol, "quadrature tolerance")->capture_default_str();
        sub->add_option("--out", out, "write the JSON summary here (default: stdout)");
    };

    auto* cmd_const = app.add_subcommand("constant", "compute tau_n and A_{S^{n-1}} by two routes");
    add_common(cmd_const, false);

    auto* cmd_sphere = app.add_subcommand("sphere-count", "exact sphere resonances below rmax");
    add_common(cmd_sphere, true);
    cmd_sphere->add_option("--emit-zeros", emit_zeros, "write the zeros as CSV");

    auto* cmd_trans = app.add_subcommand("transparent-count", "transparent-obstacle zeros below rmax");
    add_common(cmd_trans, true);
    cmd_trans->add_option("--c", c, "interior wave speed, > 0 and != 1")->capture_default_str();
    cmd_trans->add_option("--emit-zeros", emit_zeros, "write the zeros as CSV (family column)");

    auto* cmd_approx = app.add_subcommand("approx-resonances", "Olver approximations to the sphere resonances");
    add_common(cmd_approx, true);
    cmd_approx->add_option("--emit-zeros", emit_zeros, "write the approximations as CSV");

    auto* cmd_compare = app.add_subcommand("counting-compare", "N, M, Weyl reference and the gap bound from a zeros CSV");
    add_common(cmd_compare, false);
    cmd_compare->add_option("--R", rr, "reference ball radius R > R0")->capture_default_str();
    cmd_compare->add_option("--r", rtarget, "evaluation radius")->required();
    cmd_compare->add_option("--in", input, "zeros CSV produced by sphere-count/transparent-count")->required();

    auto* cmd_eye = app.add_subcommand("eye-boundary", "sample the eye-domain boundary curve");
    cmd_eye->add_option("--samples", samples, "number of samples")->capture_default_str();
    cmd_eye->add_option("--out", out, "write CSV here (default: stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_const->parsed()) {
            check_common(n, r0, tol);
            const ConstantReport rep = constant_report(n, std::max(tol, 1e-9));
            ordered_json j;
            j["config"] = config_json("constant", n, r0, 0.0, tol);
            j["version"] = kVersion;
            j["tau_n"] = rep.tau_n;
            j["a_area"] = rep.a_area;
            j["a_boundary"] = rep.a_boundary;
            j["radial_integral"] = rep.radial_integral;
            ordered_json res;
            for (const auto& [k, v] : rep.identity_residuals) res[k] = v;
            j["identity_residuals"] = res;
            emit(j, out);
        } else if (cmd_sphere->parsed()) {
            check_common(n, r0, tol);
            if (rmax <= 0.0) throw CLI::ValidationError("--rmax must be > 0");
            const auto recs = sphere_table(n, r0, rmax);
            long long total = 0;
            int max_l = 0;
            for (const auto& r : recs) {
                total += r.multiplicity;
                max_l = std::max(max_l, r.l);
            }
            if (!emit_zeros.empty()) write_csv(recs, emit_zeros, false);
            ordered_json j;
            j["config"] = config_json("sphere-count", n, r0, rmax, tol);
            j["version"] = kVersion;
            j["total"] = total;
            j["distinct_zeros"] = recs.size();
            j["max_l"] = max_l;
            j["achieved_tolerances"] = {{"root_residual_rel", 1e-9}};
            emit(j, out);
        } else if (cmd_trans->parsed()) {
            check_common(n, r0, tol);
            if (rmax <= 0.0) throw CLI::ValidationError("--rmax must be > 0");
            if (!(c > 0.0) || c == 1.0) throw CLI::ValidationError("--c must be > 0 and != 1");
            const auto recs = transparent_table(n, c, r0, rmax);
            long long total = 0, n_boundary = 0, n_interior = 0;
            for (const auto& r : recs) {
                total += r.multiplicity;
                if (r.family == Family::transparent_boundary) n_boundary += r.multiplicity;
                else n_interior += r.multiplicity;
            }
            if (!emit_zeros.empty()) write_csv(recs, emit_zeros, true);
            ordered_json j;
            j["config"] = config_json("transparent-count", n, r0, rmax, tol);
            j["config"]["c"] = c;
            j["version"] = kVersion;
            j["total"] = total;
            j["boundary_family"] = n_boundary;
            j["interior_family"] = n_interior;
            j["distinct_zeros"] = recs.size();
            j["achieved_tolerances"] = {{"root_residual_rel", 1e-10}};
            emit(j, out);
        } else if (cmd_approx->parsed()) {
            check_common(n, r0, tol);
            if (rmax <= 0.0) throw CLI::ValidationError("--rmax must be > 0");
            std::vector<ResonanceRecord> recs;
            for (int l = 0;; ++l) {
                const HalfIntOrder nu = HalfIntOrder::from_ln(l, n);
                if (0.6627 * nu.nu() - 6.0 > rmax * r0) break;
                const long long mult = multiplicity_m(l, n);
                for (const cplx& z : olver_approx_resonances(nu))
                    if (std::abs(z) / r0 < rmax)
                        recs.push_back({l, nu, z / r0, mult, Family::sphere_olver});
            }
            long long total = 0;
            for (const auto& r : recs) total += r.multiplicity;
            if (!emit_zeros.empty()) write_csv(recs, emit_zeros, true);
            ordered_json j;
            j["config"] = config_json("approx-resonances", n, r0, rmax, tol);
            j["version"] = kVersion;
            j["total"] = total;
            j["distinct_zeros"] = recs.size();
            emit(j, out);
        } else if (cmd_compare->parsed()) {
            check_common(n, r0, tol);
            if (rtarget <= 0.0) throw CLI::ValidationError("--r must be > 0");
            if (!(rr > r0)) throw CLI::ValidationError("--R must exceed --radius");
            std::ifstream is(input);
            if (!is) throw std::runtime_error("cannot open input file: " + input);
            const auto recs = read_records_csv(is);
            const CountingFunction cf = make_counting(recs, n);
            const double a_sharp = a_boundary(n);
            const GapResult gap = theorem2_gap(cf, n, r0, rr, rtarget, a_sharp);
            ordered_json j;
            j["config"] = config_json("counting-compare", n, r0, 0.0, tol);
            j["config"]["R"] = rr;
            j["version"] = kVersion;
            j["r"] = rtarget;
            j["N"] = count_N(cf, rtarget);
            j["M"] = regularized_M(cf, rtarget);
            j["weyl"] = weyl_ball_count(n, rr, rtarget);
            j["lhs"] = gap.lhs;
            j["rhs"] = gap.rhs;
            emit(j, out);
        } else if (cmd_eye->parsed()) {
            if (samples < 2) throw CLI::ValidationError("--samples must be >= 2");
            const EyeBoundary eb = eye_boundary(samples);
            std::ostream* os = &std::cout;
            std::ofstream file;
            if (!out.empty()) {
                file.open(out, std::ios::binary);
                if (!file) throw std::runtime_error("cannot open output file: " + out);
                os = &file;
            }
            *os << "t,re,im\n";
            for (const auto& s : eb.samples)
                *os << format_double(s.t) << ',' << format_double(s.z.real()) << ','
                    << format_double(s.z.imag()) << '\n';
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return 3;
    }
    return 0;
}
