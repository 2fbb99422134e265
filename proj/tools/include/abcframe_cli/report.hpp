#pragma once

#include <optional>

#include "abcframe/classifier.hpp"
#include "abcframe/dynamics.hpp"
#include "abcframe/sampling.hpp"
#include "json.hpp"

namespace abcframe::cli {

using nlohmann::ordered_json;

// Exact values become canonical expression strings; nothing is a float
// except the timings.
ordered_json witness_json(const Witness& w);
ordered_json decision_json(const FrameDecision& d);
ordered_json set_json(const PeriodicSet& s);
ordered_json marks_json(const MarkSet& m);

struct Timings {
    double classify_ms = 0;
    double invariant_set_ms = 0;
};

// {verdict, region, witness, S, Ya, theta, marks, timings}; S and the
// surgery fields are null when the maps are undefined for the triple.
ordered_json classify_report(const FrameDecision& d, const std::optional<InvariantSetReport>& rep,
                             const Timings& t);
// The full invariant-set report with D and the hole chain.
ordered_json invariant_set_report(const NormalizedTriple& nt, const InvariantSetReport& rep);
ordered_json sampling_report(const SamplingDecision& d);

}  // namespace abcframe::cli
