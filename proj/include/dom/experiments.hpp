#ifndef DOM_EXPERIMENTS_HPP
#define DOM_EXPERIMENTS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dom/bounds.hpp"
#include "dom/graph.hpp"
#include "dom/greedy.hpp"
#include "dom/lp.hpp"
#include "dom/rational.hpp"
#include "dom/weighting.hpp"

namespace dom {

// One measured graph, one CSV row. Millisecond columns stay empty unless
// timings were requested: wall-clock values would break byte-identical
// reruns of the same command line.
struct TrialRecord {
    std::string label;
    long long n = 0;
    std::optional<std::uint64_t> seed;
    int delta = 0;
    int Delta = 0;
    std::optional<Rat> gamma_f;
    std::optional<int> gamma;
    std::optional<int> gamma_g;
    Rat frac_lo, frac_hi;
    double ratio_bound_up = 0.0;
    Rat cssf;
    bool chain_ok = false;
    std::optional<long> ms_lp, ms_exact, ms_greedy;

    std::string csv_row() const;
};

// label,n,seed,delta,Delta,gamma_f_exact,gamma_f_dec,gamma,gamma_g,frac_lo,
// frac_hi,ratio_bound,cssf_bound,chain_ok,ms_lp,ms_exact,ms_greedy
std::string csv_header();

struct ComputeOptions {
    bool want_gamma_f = true;
    bool want_gamma = true;
    bool want_gamma_g = true;
    bool force = false;                // ignore the exact-solver budget
    int brute_force_limit = 30;       // max n for the exhaustive method
    int branch_bound_limit = 150;     // max n for branch and bound
    long time_limit_ms = 60000;       // branch-and-bound wall-clock guard
    bool timings = false;
};

// Runs the requested solvers on one graph and verifies the inequality chain
// over whatever was measured. Throws BudgetExceeded when gamma is requested
// beyond the budget without force.
TrialRecord measure_graph(const std::string& label, const Graph& g, const ComputeOptions& opt);

struct SweepOptions {
    std::vector<int> n_list;
    int trials = 20;
    std::uint64_t master_seed = 0;
    Rat p = Rat(1, 2);
    bool with_gamma = true;
    bool timings = false;
};

// Trial (n, i) measures random_graph(n, derive_seed(master_seed, n, i), p).
// Trials run in parallel; records come back ordered by (n, trial index).
std::vector<TrialRecord> random_sweep(const SweepOptions& opt);

// Exact per-n aggregates of a sweep (rational means; ratios as doubles).
struct SweepAggregate {
    int n = 0;
    int trials = 0;
    Rat mean_gamma_f, min_gamma_f, max_gamma_f;
    double mean_gamma = 0.0;
    double mean_gamma_g = 0.0;
    double mean_gamma_over_gf = 0.0;
    double mean_gg_over_gamma = 0.0;
};

std::vector<SweepAggregate> aggregate_sweep(const std::vector<TrialRecord>& records);
std::string render_aggregates(const std::vector<SweepAggregate>& aggs);

struct BoundsTableRow {
    std::string label;
    long long n = 0;
    std::optional<int> gamma_g;
    std::optional<double> ratio_form;
    std::optional<Rat> cssf_form;
    std::string tighter;
    std::string error;  // per-row failure, empty on success
};

BoundsTableRow bounds_table_row(const std::string& label, const Graph& g);
std::string bounds_table_csv(const std::vector<BoundsTableRow>& rows);

// The shipped default sweep: clique chains t = 4..7, hairy cliques
// t in {4, 8, 16, 32}.
std::vector<std::pair<std::string, Graph>> default_bounds_sweep();

struct CertificationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Everything needed to audit one graph end to end: the LP pair with zero
// gap, the greedy trace, the scaled packing certificate with its slacks,
// and the per-vertex weight-sum audit. Construction re-verifies each part
// with the independent checkers and throws CertificationError naming the
// violated constraint on any mismatch.
struct CertificateBundle {
    FractionalSolution lp;
    GreedyTrace trace;
    VertexWeighting packing_cert;
    SlackReport packing_slacks;
    WeightAudit audit;

    std::string render() const;
};

CertificateBundle certify(const Graph& g);

}  // namespace dom

#endif
