#ifndef DOM_WEIGHTING_HPP
#define DOM_WEIGHTING_HPP

#include <vector>

#include "dom/exec.hpp"
#include "dom/graph.hpp"
#include "dom/rational.hpp"

namespace dom {

enum class Role { domination, packing };

// Exact-rational weight per vertex, each in [0,1], tagged with the side of
// the relaxation it claims to satisfy.
struct VertexWeighting {
    Role role;
    std::vector<Rat> weights;

    Rat total() const;
};

struct SlackReport {
    bool feasible;
    // slack(v) = sum(N[v]) - 1 for domination, 1 - sum(N[v]) for packing;
    // feasible iff every slack is >= 0.
    Rat min_slack;
    Rat max_slack;
    std::vector<int> violated;  // ascending
    std::vector<Rat> sums;      // closed-neighborhood sums, one per vertex
};

// Exact feasibility check. Throws std::invalid_argument when the weighting
// length mismatches the graph or a weight leaves [0,1].
SlackReport check_weighting(const Graph& g, const VertexWeighting& w, Exec exec = Exec::Auto);

}  // namespace dom

#endif
