#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abcframe/classifier.hpp"

namespace abcframe::cli {

// Verdict from the invariant set alone: Frame when S or D is empty. Both
// emptiness of D and the measure identity are evaluated and must agree.
Verdict dynamics_verdict(const NormalizedTriple& nt);

struct PipelineCheck {
    NormalizedTriple nt;
    Verdict closed_form;
    Verdict dynamics;
    Verdict grid;
    bool agree() const { return closed_form == dynamics && dynamics == grid; }
};

// b = 1, reduced a = p/q < 1 with q <= q_max, on-grid c = k/q in (1, c_max),
// kept when the region is XII or XIII.
std::vector<NormalizedTriple> agreement_triples(std::int64_t q_max, std::int64_t c_max);

// All three verdicts for every triple; `threads` = 0 picks the hardware count.
std::vector<PipelineCheck> run_agreement(const std::vector<NormalizedTriple>& triples, unsigned threads = 0);

}  // namespace abcframe::cli
