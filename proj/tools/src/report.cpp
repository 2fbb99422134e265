#include "abcframe_cli/report.hpp"

#include <variant>

namespace abcframe::cli {

namespace {

ordered_json exact(const std::optional<ExactReal>& x) { return x ? ordered_json(x->to_string()) : ordered_json(); }

ordered_json named_values(const std::vector<NamedValue>& values) {
    ordered_json out = ordered_json::object();
    for (const auto& nv : values) out[nv.name] = nv.value.to_string();
    return out;
}

template <class... F>
struct overloaded : F... {
    using F::operator()...;
};

}  // namespace

ordered_json witness_json(const Witness& w) {
    return std::visit(
        overloaded{
            [](std::monostate) { return ordered_json(); },
            [](const GcdCondition& g) {
                return ordered_json{{"kind", "gcd"}, {"case", g.case_id}, {"rule", g.rule},
                                    {"values", named_values(g.values)}};
            },
            [](const IrrationalParams& p) {
                return ordered_json{{"kind", "irrational"}, {"d1", p.d1}, {"d2", p.d2}, {"m", p.m},
                                    {"e_count", p.e_count}};
            },
            [](const RationalParams& p) {
                return ordered_json{{"kind", "rational"}, {"case", p.case_id}, {"d1", p.d1},   {"d2", p.d2},
                                    {"d3", p.d3},         {"d4", p.d4},        {"n", p.n},     {"delta", exact(p.delta)},
                                    {"e_count", p.e_count}, {"values", named_values(p.values)}};
            },
            [](const RecursionPair& r) {
                return ordered_json{{"kind", "recursion"},
                                    {"c_lower", r.c_lower.to_string()},
                                    {"c_upper", r.c_upper.to_string()},
                                    {"lower", decision_json(*r.lower)},
                                    {"upper", decision_json(*r.upper)}};
            },
        },
        w);
}

ordered_json decision_json(const FrameDecision& d) {
    return ordered_json{{"verdict", to_string(d.verdict)},
                        {"region", std::string(to_string(d.region))},
                        {"witness", witness_json(d.witness)}};
}

ordered_json set_json(const PeriodicSet& s) {
    ordered_json out = ordered_json::array();
    for (const auto& iv : s.intervals()) out.push_back({iv.lo.to_string(), iv.hi.to_string()});
    return out;
}

ordered_json marks_json(const MarkSet& m) {
    ordered_json out = ordered_json::object();
    out["generator"] = exact(m.generator);
    out["order"] = m.order ? ordered_json(*m.order) : ordered_json();
    ordered_json rot = ordered_json::array();
    for (const auto& x : m.rotation_marks) rot.push_back(x.to_string());
    ordered_json holes = ordered_json::array();
    for (const auto& x : m.hole_marks) holes.push_back(x.to_string());
    out["rotation"] = rot;
    out["holes"] = holes;
    return out;
}

ordered_json classify_report(const FrameDecision& d, const std::optional<InvariantSetReport>& rep,
                             const Timings& t) {
    ordered_json out = decision_json(d);
    out["S"] = rep ? set_json(rep->S) : ordered_json();
    out["Ya"] = rep ? exact(rep->ya) : ordered_json();
    out["theta"] = rep ? exact(rep->theta) : ordered_json();
    out["marks"] = rep && !rep->S.empty() ? marks_json(rep->marks) : ordered_json();
    out["timings"] = {{"classify_ms", t.classify_ms}, {"invariant_set_ms", t.invariant_set_ms}};
    return out;
}

ordered_json invariant_set_report(const NormalizedTriple& nt, const InvariantSetReport& rep) {
    ordered_json out = ordered_json::object();
    out["S"] = set_json(rep.S);
    out["measure"] = rep.S.measure().to_string();
    out["D"] = rep.S.empty() ? ordered_json::array() : set_json(compute_D(nt, rep.S));
    out["Ya"] = exact(rep.ya);
    out["theta"] = exact(rep.theta);
    out["marks"] = rep.S.empty() ? ordered_json() : marks_json(rep.marks);
    if (rep.rational_extras) {
        const auto& x = *rep.rational_extras;
        out["extras"] = {{"n1", x.n1},
                         {"n2", x.n2},
                         {"delta", x.delta.to_string()},
                         {"delta_prime", x.delta_prime.to_string()},
                         {"h", x.h.to_string()}};
    } else {
        out["extras"] = nullptr;
    }
    ordered_json chain = ordered_json::array();
    for (const auto& step : rep.chain) {
        chain.push_back({{"index", step.index}, {"hole", set_json(step.hole)}, {"status", to_string(step.status)}});
    }
    out["chain"] = chain;
    return out;
}

ordered_json sampling_report(const SamplingDecision& d) {
    ordered_json out{{"stable", d.stable}, {"route", to_string(d.route)}};
    out["underlying"] = d.underlying ? decision_json(*d.underlying) : ordered_json();
    return out;
}

}  // namespace abcframe::cli
