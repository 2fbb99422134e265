#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "abcframe/triple.hpp"

namespace abcframe {

enum class Verdict { Frame, NotFrame };

const char* to_string(Verdict v);

struct NamedValue {
    std::string name;
    ExactReal value;
};

// A closed-form condition that decided the verdict (cases 1-5, or the p/q
// conditions of regions X and XI, which use case_id 10 and 11).
struct GcdCondition {
    int case_id;
    std::string rule;
    std::vector<NamedValue> values;
};

struct IrrationalParams {
    std::int64_t d1;
    std::int64_t d2;
    std::int64_t m;
    std::int64_t e_count;
};

// case 6 or 7: gcd test on c1 or c1 + b; case 8: the parameter search.
struct RationalParams {
    int case_id;
    std::int64_t d1 = 0, d2 = 0, d3 = 0, d4 = 0, n = 0;
    std::optional<ExactReal> delta;
    std::int64_t e_count = 0;
    std::vector<NamedValue> values;
};

struct FrameDecision;

struct RecursionPair {
    ExactReal c_lower;
    ExactReal c_upper;
    std::shared_ptr<const FrameDecision> lower;
    std::shared_ptr<const FrameDecision> upper;
};

using Witness = std::variant<std::monostate, GcdCondition, IrrationalParams, RationalParams, RecursionPair>;

struct FrameDecision {
    Verdict verdict;
    RegionTag region;
    Witness witness;
};

FrameDecision classify(const ExactReal& a, const ExactReal& b, const ExactReal& c);
FrameDecision classify(const NormalizedTriple& nt);

// Clause-by-clause evaluation of one (d1, d2) candidate for region XII.
struct IrrationalCandidate {
    std::int64_t d1, d2;
    ExactReal expr{};
    bool in_a_lattice = false;
    bool differs_from_a = false;
    bool sandwich = false;
    std::optional<std::int64_t> m{};
    std::int64_t e_count = 0;
    bool e_matches = false;

    bool nonempty_conditions() const { return in_a_lattice && sandwich && m && e_matches; }
    bool not_frame_conditions() const { return nonempty_conditions() && differs_from_a; }
};

IrrationalCandidate evaluate_irrational_candidate(const NormalizedTriple& nt, std::int64_t d1, std::int64_t d2);
std::optional<IrrationalParams> cond_XII(const NormalizedTriple& nt);

// Clause-by-clause evaluation of one (d1, d2, d3, d4) candidate for case 8.
struct RationalCandidate {
    std::int64_t d1, d2, d3, d4, n;
    bool block_on_grid = false;      // (a)
    bool x_in_a_lattice = false;     // (b)
    bool congruence = false;         // (c)
    bool gcd_is_a = false;           // (d)
    std::int64_t e_count = 0;
    bool e_matches = false;          // (e)
    std::optional<ExactReal> delta{};
    bool delta_in_range = false;     // (f)
    bool not_degenerate = false;     // (g)

    bool nonempty_conditions() const {
        return block_on_grid && x_in_a_lattice && congruence && gcd_is_a && e_matches && delta_in_range;
    }
    bool not_frame_conditions() const { return nonempty_conditions() && not_degenerate; }
};

RationalCandidate evaluate_rational_candidate(const NormalizedTriple& nt, std::int64_t d1, std::int64_t d2,
                                              std::int64_t d3, std::int64_t d4);
std::optional<RationalParams> cond_XIII(const NormalizedTriple& nt);

FrameDecision classify_off_grid(const NormalizedTriple& nt);

bool characterize_S_nonempty(const NormalizedTriple& nt);

}  // namespace abcframe
