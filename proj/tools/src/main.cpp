#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "abcframe/dynamics.hpp"
#include "abcframe/errors.hpp"
#include "abcframe/sampling.hpp"
#include "abcframe_cli/number_expr.hpp"
#include "abcframe_cli/pipelines.hpp"
#include "abcframe_cli/region_sweep.hpp"
#include "abcframe_cli/report.hpp"

using namespace abcframe;
using namespace abcframe::cli;

namespace {

constexpr int kExitFrame = 0;
constexpr int kExitError = 1;
constexpr int kExitNotFrame = 3;

struct TripleArgs {
    std::string a, b = "1", c, context;
    bool json = false;

    void attach(CLI::App* cmd, bool need_c = true) {
        cmd->add_option("--a", a, "lattice step a, e.g. 13/17 or pi/4")->required();
        cmd->add_option("--b", b, "lattice step b")->capture_default_str();
        auto* copt = cmd->add_option("--c", c, "window length c, e.g. 23-11*pi/2");
        if (need_c) copt->required();
        cmd->add_option("--context", context, "rational, pi or sqrt:D (default: inferred from the inputs)");
        cmd->add_flag("--json", json, "emit JSON");
    }

    ContextPtr ctx(const std::vector<std::string>& extra = {}) const {
        if (!context.empty()) return context_from_name(context);
        std::vector<std::string> all{a, b, c};
        all.insert(all.end(), extra.begin(), extra.end());
        return infer_context(all);
    }
};

struct SweepArgs {
    std::string amin = "0", amax = "2", cmin = "0", cmax = "6", step_c = "1/20", out, csv;
    std::int64_t qmax = 10;
    unsigned threads = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--qmax", qmax, "largest denominator of a")->capture_default_str();
        cmd->add_option("--amin", amin, "a range is (amin, amax]")->capture_default_str();
        cmd->add_option("--amax", amax)->capture_default_str();
        cmd->add_option("--cmin", cmin, "c samples are cmin + k*step-c < cmax, k >= 1")->capture_default_str();
        cmd->add_option("--cmax", cmax)->capture_default_str();
        cmd->add_option("--step-c", step_c)->capture_default_str();
        cmd->add_option("--threads", threads, "worker count, 0 for all cores")->capture_default_str();
    }
};

Rational rational_arg(const std::string& text, const char* flag) {
    auto r = parse_number(text, NumberContext::rational()).as_rational();
    if (!r) throw UnsupportedRange(std::string(flag) + " must be rational");
    return *r;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

std::optional<InvariantSetReport> invariant_set_if_defined(const NormalizedTriple& nt) {
    if (!nt.maps_defined()) return std::nullopt;
    try {
        return compute_S(nt);
    } catch (const RegionUnsupported&) {
        return std::nullopt;
    }
}

void print_witness(const FrameDecision& d) {
    auto w = witness_json(d.witness);
    if (!w.is_null()) std::cout << "witness: " << w.dump() << '\n';
}

int run_classify(const TripleArgs& args) {
    auto ctx = args.ctx();
    ExactReal a = parse_number(args.a, ctx), b = parse_number(args.b, ctx), c = parse_number(args.c, ctx);
    auto t0 = std::chrono::steady_clock::now();
    FrameDecision d = classify(a, b, c);
    Timings t;
    t.classify_ms = ms_since(t0);
    if (args.json) {
        t0 = std::chrono::steady_clock::now();
        auto rep = invariant_set_if_defined(normalize(a, b, c));
        t.invariant_set_ms = ms_since(t0);
        std::cout << classify_report(d, rep, t).dump(2) << '\n';
    } else {
        std::cout << to_string(d.verdict) << " (region " << to_string(d.region) << ")\n";
        print_witness(d);
    }
    return d.verdict == Verdict::Frame ? kExitFrame : kExitNotFrame;
}

int run_invariant_set(const TripleArgs& args) {
    auto ctx = args.ctx();
    NormalizedTriple nt = normalize(parse_number(args.a, ctx), parse_number(args.b, ctx), parse_number(args.c, ctx));
    InvariantSetReport rep = compute_S(nt);
    auto j = invariant_set_report(nt, rep);
    if (args.json) {
        std::cout << j.dump(2) << '\n';
        return 0;
    }
    std::cout << "S = " << rep.S.to_string() << '\n' << "|S| = " << j["measure"].get<std::string>() << '\n';
    if (rep.S.empty()) return 0;
    std::cout << "D = " << compute_D(nt, rep.S).to_string() << '\n'
              << "Ya = " << rep.ya->to_string() << '\n'
              << "theta = " << rep.theta->to_string() << '\n'
              << "marks = " << j["marks"].dump() << '\n';
    if (!j["extras"].is_null()) std::cout << "extras = " << j["extras"].dump() << '\n';
    return 0;
}

int run_sampling(const TripleArgs& args) {
    auto ctx = args.ctx();
    auto d = sampling_stable(parse_number(args.a, ctx), parse_number(args.b, ctx), parse_number(args.c, ctx));
    if (args.json) {
        std::cout << sampling_report(d).dump(2) << '\n';
    } else {
        std::cout << (d.stable ? "stable" : "unstable") << " (" << to_string(d.route) << ")\n";
    }
    return 0;
}

int run_orbit(const TripleArgs& args, const std::string& t_text, std::int64_t steps) {
    auto ctx = args.ctx({t_text});
    NormalizedTriple nt = normalize(parse_number(args.a, ctx), parse_number(args.b, ctx), parse_number(args.c, ctx));
    auto orbit = forward_orbit(nt, parse_number(t_text, ctx), steps);
    if (args.json) {
        ordered_json out = ordered_json::array();
        for (const auto& x : orbit) out.push_back(x.to_string());
        std::cout << out.dump(2) << '\n';
    } else {
        for (std::size_t i = 0; i < orbit.size(); ++i) std::cout << i << ' ' << orbit[i].to_string() << '\n';
    }
    return 0;
}

int run_region_plot(const SweepArgs& args) {
    SweepSpec spec;
    spec.q_max = args.qmax;
    spec.a_min = rational_arg(args.amin, "--amin");
    spec.a_max = rational_arg(args.amax, "--amax");
    spec.c_min = rational_arg(args.cmin, "--cmin");
    spec.c_max = rational_arg(args.cmax, "--cmax");
    spec.step_c = rational_arg(args.step_c, "--step-c");
    spec.threads = args.threads;
    SweepGrid grid = region_sweep(spec);

    auto emit = [&](const std::string& path, bool ppm) {
        std::ofstream os(path, std::ios::binary);
        if (!os) throw std::runtime_error("cannot open " + path);
        ppm ? write_ppm(os, grid) : write_csv(os, grid);
    };
    bool ppm = args.out.size() >= 4 && args.out.compare(args.out.size() - 4, 4, ".ppm") == 0;
    emit(args.out, ppm);
    if (!args.csv.empty()) emit(args.csv, false);
    std::cerr << grid.a_values.size() << " x " << grid.c_values.size() << " cells written to " << args.out << '\n';
    return 0;
}

int run_selftest(std::int64_t qmax, std::int64_t cmax, unsigned threads) {
    auto triples = agreement_triples(qmax, cmax);
    auto checks = run_agreement(triples, threads);
    std::size_t bad = 0;
    for (const auto& ck : checks) {
        if (ck.agree()) continue;
        ++bad;
        std::cout << "disagreement a=" << ck.nt.a.to_string() << " c=" << ck.nt.c.to_string()
                  << " closed-form=" << to_string(ck.closed_form) << " dynamics=" << to_string(ck.dynamics)
                  << " grid=" << to_string(ck.grid) << '\n';
    }
    std::cout << checks.size() << " triples, " << bad << " disagreements\n";
    return bad == 0 ? 0 : kExitError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Frame classification for Gabor systems of characteristic-function windows"};
    app.require_subcommand(1);

    TripleArgs cls, inv, smp, orb;
    cls.attach(app.add_subcommand("classify", "frame verdict; exit 0 Frame, 3 NotFrame, 1 error"));
    inv.attach(app.add_subcommand("invariant-set", "invariant set S, D and surgery data"));
    smp.attach(app.add_subcommand("sampling", "stability of sampling on t0 + aZ"));
    auto* orbit_cmd = app.add_subcommand("orbit", "residues mod a of a forward orbit");
    orb.attach(orbit_cmd);
    std::string t_text = "0";
    std::int64_t steps = 20;
    orbit_cmd->add_option("--t", t_text, "start point")->capture_default_str();
    orbit_cmd->add_option("--steps", steps, "number of steps")->capture_default_str();

    SweepArgs sweep;
    auto* plot_cmd = app.add_subcommand("region-plot", "classify a grid of (a, c) with b = 1");
    sweep.attach(plot_cmd);
    plot_cmd->add_option("--out", sweep.out, "output path; .ppm gives a P6 image, anything else CSV")->required();
    plot_cmd->add_option("--csv", sweep.csv, "also write the CSV mirror here");

    auto* self_cmd = app.add_subcommand("selftest", "cross-check the three pipelines on a rational sweep");
    std::int64_t self_q = 8, self_c = 8;
    unsigned self_threads = 0;
    self_cmd->add_option("--qmax", self_q, "largest denominator")->capture_default_str();
    self_cmd->add_option("--cmax", self_c, "c ranges over (1, cmax)")->capture_default_str();
    self_cmd->add_option("--threads", self_threads)->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitError;
    }

    try {
        if (app.got_subcommand("classify")) return run_classify(cls);
        if (app.got_subcommand("invariant-set")) return run_invariant_set(inv);
        if (app.got_subcommand("sampling")) return run_sampling(smp);
        if (app.got_subcommand("orbit")) return run_orbit(orb, t_text, steps);
        if (app.got_subcommand("region-plot")) return run_region_plot(sweep);
        if (app.got_subcommand("selftest")) return run_selftest(self_q, self_c, self_threads);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitError;
    }
    return kExitError;
}
