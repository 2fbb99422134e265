#include "abcframe_cli/pipelines.hpp"

#include <numeric>

#include "abcframe/dynamics.hpp"
#include "abcframe/errors.hpp"
#include "abcframe/grid_oracle.hpp"
#include "abcframe_cli/parallel.hpp"

namespace abcframe::cli {

namespace {

Rational fraction(std::int64_t n, std::int64_t d) {
    Rational r{Integer(static_cast<long>(n)), Integer(static_cast<long>(d))};
    r.canonicalize();
    return r;
}

}  // namespace

Verdict dynamics_verdict(const NormalizedTriple& nt) {
    PeriodicSet s = compute_S(nt).S;
    if (s.empty()) return Verdict::Frame;
    bool d_empty = compute_D(nt, s).empty();
    if (d_empty != measure_identity(nt, s)) {
        throw OracleInconsistency("D and the measure identity disagree for c = " + nt.c.to_string());
    }
    return d_empty ? Verdict::Frame : Verdict::NotFrame;
}

std::vector<NormalizedTriple> agreement_triples(std::int64_t q_max, std::int64_t c_max) {
    auto ctx = NumberContext::rational();
    ExactReal one(Rational(1), ctx);
    std::vector<NormalizedTriple> out;
    for (std::int64_t q = 2; q <= q_max; ++q) {
        for (std::int64_t p = 1; p < q; ++p) {
            if (std::gcd(p, q) != 1) continue;
            ExactReal a(fraction(p, q), ctx);
            for (std::int64_t k = q + 1; k < c_max * q; ++k) {
                NormalizedTriple nt = normalize(a, one, ExactReal(fraction(k, q), ctx));
                RegionTag tag = region_tag(nt);
                if (tag == RegionTag::XII || tag == RegionTag::XIII) out.push_back(std::move(nt));
            }
        }
    }
    return out;
}

std::vector<PipelineCheck> run_agreement(const std::vector<NormalizedTriple>& triples, unsigned threads) {
    return parallel_map<PipelineCheck>(triples.size(), threads, [&](std::size_t i) {
        const auto& nt = triples[i];
        return PipelineCheck{nt, classify(nt).verdict, dynamics_verdict(nt), oracle_frame_decision(nt)};
    });
}

}  // namespace abcframe::cli
