#pragma once

#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace minabc::bounds {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Affine integer combination of named parameters, c0 + sum coef*param.
struct Affine {
    double c0 = 0.0;
    std::map<std::string, double> lin;

    Affine() = default;
    Affine(double c) : c0(c) {}  // NOLINT: implicit constants are the point
    Affine(const char* name) { lin[name] = 1.0; }
    Affine operator+(double k) const {
        Affine a = *this;
        a.c0 += k;
        return a;
    }
    Affine operator-(double k) const { return *this + (-k); }
    Affine operator+(const Affine& o) const;
    Affine operator-(const Affine& o) const;
};

// coeff * sign * f(x, y); expressions are sums of such terms, kept as
// data so the whole catalog can be printed and audited.
struct Term {
    Affine coeff;
    int sign;  // +1 / -1
    Affine x, y;
};

struct BoundExpression {
    std::string id;
    std::vector<std::string> params;        // required finite parameters
    std::vector<std::string> limit_params;  // default to +infinity
    std::vector<Term> terms;
    std::string note;
};

using Params = std::map<std::string, double>;

const std::vector<BoundExpression>& catalog();
const BoundExpression& find(const std::string& id);

// Closed-form value; parameters listed as limit_params may be +inf (and
// default to it), in which case the analytic limit is returned.
double evaluate(const std::string& id, const Params& params);

// Same expression with infinities replaced by a large finite proxy,
// accumulated in long double; used by the limit-consistency tests.
double evaluate_proxy(const std::string& id, const Params& params, double proxy);

// Least integer in [lo, hi] where the expression goes negative, after a
// sampled monotonicity check over the range.
int smallest_negative_threshold(const std::string& id, const std::string& param,
                                int lo, int hi, const Params& fixed = {});

struct ProbeResult {
    bool nonincreasing = true;
    bool nondecreasing = true;
    std::optional<int> first_violation;  // grid point where both fail
};
ProbeResult monotonicity_probe(const std::string& id, const std::string& param,
                               int lo, int hi, const Params& fixed = {});

// The (k1,k2)-forbidden configuration lists, from direct evaluation.
struct ForbiddenRow {
    std::string context;  // "subtree", "subtree-b2b1", "tree", "tree-b2b1"
    int key;              // k2 for subtree cases, d(u) for whole-tree cases
    int min_k1;
    bool flagged = false;  // computed value disagrees with the reference list
};
std::vector<ForbiddenRow> forbidden_configuration_table();

// Every reference constant, with the parameters that reproduce it.
struct GoldenRow {
    std::string id;
    Params params;
    double expected;
    bool defect = false;        // reference value underivable; see note
    std::string note;
};
const std::vector<GoldenRow>& golden_rows();

struct GoldenOutcome {
    const GoldenRow* row;
    double actual;
    bool match;  // |actual - expected| <= 1e-6; defect rows report false
};
std::vector<GoldenOutcome> run_golden();

}  // namespace minabc::bounds
