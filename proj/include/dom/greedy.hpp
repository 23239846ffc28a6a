#ifndef DOM_GREEDY_HPP
#define DOM_GREEDY_HPP

#include <string>
#include <vector>

#include "dom/exec.hpp"
#include "dom/graph.hpp"
#include "dom/weighting.hpp"

namespace dom {

// Full record of one greedy run: the picked vertices, the set of vertices
// each step dominated for the first time, and the derived per-vertex weight
// 1/|newly_dominated[first_step[v]]|.
struct GreedyTrace {
    std::vector<int> picks;
    std::vector<std::vector<int>> newly_dominated;  // per step, ascending
    std::vector<int> first_step;                    // vertex -> 0-based step index
    std::vector<Rat> weight;                        // vertex -> weight

    int size() const { return static_cast<int>(picks.size()); }

    // Line-oriented: "step <k> pick <v> new <v1> <v2> ...", steps 1-based.
    std::string serialize() const;
};

// Iteratively picks the vertex covering the most not-yet-dominated vertices;
// ties go to the smallest index. Stops when every vertex is dominated.
GreedyTrace greedy_sequence(const Graph& g, Exec exec = Exec::Auto);

int gamma_g(const Graph& g);

// The trace weights scaled by 1/(1 + ln(1 + Delta)), rounded upward to
// dyadic rationals so that exact-rational feasibility of the result implies
// feasibility of the true scaled weighting. The returned weighting is a
// fractional packing whenever the trace is a genuine greedy trace of g.
VertexWeighting scaled_packing_certificate(const Graph& g, const GreedyTrace& trace);

struct WeightAudit {
    bool ok;
    int worst_vertex;            // argmax of the neighborhood weight sum
    Rat worst_sum;
    std::vector<int> violations; // vertices whose sum exceeds 1 + ln(1 + deg)
};

// Certifies, per vertex v, sum of trace weights over N[v] <= 1 + ln(1+deg(v)),
// with the right-hand side rounded down so a pass is sound.
WeightAudit audit_neighborhood_weights(const Graph& g, const GreedyTrace& trace);

}  // namespace dom

#endif
