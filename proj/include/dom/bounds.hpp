#ifndef DOM_BOUNDS_HPP
#define DOM_BOUNDS_HPP

#include <optional>
#include <string>

#include "dom/dreal.hpp"
#include "dom/graph.hpp"
#include "dom/rational.hpp"

namespace dom {

// (n/(1+Delta), n/(1+delta)) — the exact interval that must contain the
// fractional optimum.
std::pair<Rat, Rat> frac_sandwich(const Graph& g);

// n * (1 - prod_{i=1..delta+1} i*delta/(i*delta+1)), evaluated exactly.
// delta = 0 gives n (first factor is 0/1).
Rat cssf_product_bound(long long n, int delta);
Rat cssf_bound(const Graph& g);

// 1 + ln(1 + Delta), rounded up: a sound upper bound on the greedy/LP ratio.
DReal ratio_bound(const Graph& g);

// One graph's bound panel, with each inequality verdict recomputed from the
// stored operands. nullopt verdict = that check lacked a measured input.
struct BoundsReport {
    long long n = 0;
    int delta = 0;
    int Delta = 0;
    Rat frac_lower, frac_upper;
    double ratio_bound_up = 0.0;  // decimal rendering of the rounded-up bound
    Rat cssf;

    std::optional<Rat> gamma_f;
    std::optional<int> gamma;
    std::optional<int> gamma_g;

    std::optional<bool> lemma1_lower;  // n/(1+Delta) <= gamma_f
    std::optional<bool> lemma1_upper;  // gamma_f <= n/(1+delta)
    std::optional<bool> chain_low;     // gamma_f <= gamma
    std::optional<bool> chain_high;    // gamma <= gamma_g
    std::optional<bool> chain_outer;   // gamma_f <= gamma_g
    std::optional<bool> ratio_ok;      // gamma_g <= (1+ln(1+Delta)) * gamma_f
    std::optional<bool> cssf_ok;       // gamma_g <= cssf

    // True iff no verdict is false. Skipped checks (missing inputs) do not
    // count as failures; callers that need completeness check complete().
    bool passed() const;
    bool complete() const;

    std::string table() const;  // fixed-column text rendering
};

// Recomputes every inequality from scratch in exact or soundly rounded
// arithmetic. A false verdict means a measuring module produced an
// impossible value.
BoundsReport verify_chain(const Graph& g, const std::optional<Rat>& gamma_f,
                          std::optional<int> gamma, std::optional<int> gamma_g);

enum class TighterBound { ratio_form, cssf_form, tie };

struct GgBoundComparison {
    DReal ratio_form;   // (1 + ln(1+Delta)) * gamma_f, rounded up
    Rat cssf_form;      // the exact product bound
    TighterBound tighter;
};

// Compares the two constant-free upper bounds on the greedy number. The
// winner is decided soundly: the rounded-up ratio form must beat the exact
// product bound (or the rounded-down form must lose) before a side is named.
GgBoundComparison compare_gg_bounds(const Graph& g, const Rat& gamma_f);

const char* tighter_name(TighterBound t);

struct ExpectedPsets {
    double value;     // C(n,p) * (1 - 2^-p)^(n-p)
    double ln_value;  // its natural log, the reliable-sign quantity
};

// Evaluated in 256-bit arithmetic via logs, so the sign of ln(value) is
// dependable even when the value itself over- or underflows a double.
ExpectedPsets expected_dominating_psets(long long n, long long p);

}  // namespace dom

#endif
