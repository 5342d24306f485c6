#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rational.hpp"

namespace geodstab {

enum class RicciSign { positive, nonpositive, unknown };
enum class CurvatureComparison { le_rn, le_2rn, gt_2rn, unknown };

inline std::string ricci_str(RicciSign s) {
    switch (s) {
        case RicciSign::positive: return "positive";
        case RicciSign::nonpositive: return "nonpositive";
        default: return "unknown";
    }
}

inline RicciSign parse_ricci(const std::string& s) {
    if (s == "pos" || s == "positive") return RicciSign::positive;
    if (s == "nonpos" || s == "nonpositive") return RicciSign::nonpositive;
    if (s == "unknown") return RicciSign::unknown;
    throw error("unknown Ricci sign '" + s + "' (expected pos, nonpos or unknown)");
}

inline std::string comparison_str(CurvatureComparison c) {
    switch (c) {
        case CurvatureComparison::le_rn: return "le-rn";
        case CurvatureComparison::le_2rn: return "le-2rn";
        case CurvatureComparison::gt_2rn: return "gt-2rn";
        default: return "unknown";
    }
}

inline CurvatureComparison parse_comparison(const std::string& s) {
    if (s == "le-rn") return CurvatureComparison::le_rn;
    if (s == "le-2rn") return CurvatureComparison::le_2rn;
    if (s == "gt-2rn") return CurvatureComparison::gt_2rn;
    if (s == "unknown") return CurvatureComparison::unknown;
    throw error("unknown curvature comparison '" + s +
                "' (expected le-rn, le-2rn, gt-2rn or unknown)");
}

// Declared geometric hypotheses about a compact minimal Lagrangian
// submanifold N of a Kaehlerian manifold M. Nothing here is verified; the
// rules only compose the declarations. comparison relates the pulled-back
// ambient Ricci form to the intrinsic one.
struct LagrangianInputs {
    RicciSign ricci_ambient_sign = RicciSign::unknown;
    long long betti1 = 0;
    bool has_killing_field = false;
    CurvatureComparison comparison = CurvatureComparison::unknown;
    std::optional<bool> identity_map_stable;
};

enum class LagrangianVerdict { stable, unstable, undecided };

inline std::string lagrangian_verdict_str(LagrangianVerdict v) {
    switch (v) {
        case LagrangianVerdict::stable: return "stable";
        case LagrangianVerdict::unstable: return "unstable";
        default: return "undecided";
    }
}

struct LagrangianReport {
    LagrangianVerdict verdict = LagrangianVerdict::undecided;
    std::vector<std::string> rule_trace;
};

// Rule engine. Any unstable-rule firing together with any stable-rule is an
// input contradiction, reported as an error naming both.
inline LagrangianReport lagrangian_verdict(const LagrangianInputs& in) {
    if (in.betti1 < 0) throw error("betti1 must be nonnegative");
    std::vector<std::string> unstable_rules, stable_rules;
    if (in.ricci_ambient_sign == RicciSign::positive && in.betti1 > 0)
        unstable_rules.push_back("positive ambient Ricci with nonzero first Betti number");
    if (in.comparison == CurvatureComparison::gt_2rn && in.has_killing_field)
        unstable_rules.push_back("pulled-back Ricci exceeds twice the intrinsic one "
                                 "along a Killing field");
    if (in.ricci_ambient_sign == RicciSign::nonpositive)
        stable_rules.push_back("nonpositive ambient Ricci");
    if (in.comparison == CurvatureComparison::le_rn)
        stable_rules.push_back("pulled-back Ricci bounded by the intrinsic one");
    if (in.comparison == CurvatureComparison::le_2rn && in.identity_map_stable &&
        *in.identity_map_stable)
        stable_rules.push_back("pulled-back Ricci bounded by twice the intrinsic one "
                               "with a stable identity map");
    if (!unstable_rules.empty() && !stable_rules.empty())
        throw error("contradictory declarations: '" + unstable_rules.front() +
                    "' against '" + stable_rules.front() + "'");
    LagrangianReport r;
    if (!unstable_rules.empty()) {
        r.verdict = LagrangianVerdict::unstable;
        r.rule_trace = unstable_rules;
    } else if (!stable_rules.empty()) {
        r.verdict = LagrangianVerdict::stable;
        r.rule_trace = stable_rules;
    } else {
        r.rule_trace.push_back("no rule applies");
    }
    return r;
}

// Index grows at least with the first Betti number under the unstable-case
// hypotheses above.
inline long long index_lower_bound(long long betti1) {
    if (betti1 < 0) throw error("betti1 must be nonnegative");
    return betti1;
}

}  // namespace geodstab
