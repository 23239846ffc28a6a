#ifndef DOM_LP_HPP
#define DOM_LP_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "dom/graph.hpp"
#include "dom/weighting.hpp"

namespace dom {

enum class LPSense { min_domination, max_packing };

// Closed-neighborhood incidence system N f >= 1 (domination) or N g <= 1
// (packing). N is symmetric with an all-ones diagonal, so the two programs
// are a primal/dual pair over the same matrix.
struct LPInstance {
    int n = 0;
    LPSense sense = LPSense::min_domination;
    std::vector<Bitset> rows;  // row v = N[v]

    std::vector<int> row_support(int v) const;  // ascending
};

// min sum f(v) s.t. N f >= 1, f >= 0. Upper bounds f <= 1 are omitted as
// redundant; the solution extractor clamps at 1 and the result is
// re-verified independently.
LPInstance build_lp(const Graph& g);

struct FractionalSolution {
    Rat value;               // the common optimum of both programs
    VertexWeighting primal;  // minimum fractional domination
    VertexWeighting dual;    // maximum fractional packing
    Rat duality_gap;         // primal total - dual total; 0 on every solve
    std::uint64_t pivots = 0;

    std::string serialize() const;  // exact rationals only, "num/den" form
};

inline constexpr int kLpVertexCap = 512;

// Exact-rational dense simplex. Pivots on the packing side, whose slack
// basis is feasible from the start, and reads the domination solution off
// the final objective row. Entering rule: most positive reduced cost with
// smallest-index tie-break, switching to Bland's rule during long
// degenerate streaks so cycling is impossible. Throws std::invalid_argument
// past vertex_cap.
FractionalSolution solve_gamma_f(const Graph& g, int vertex_cap = kLpVertexCap);

struct DualityAudit {
    bool ok;
    std::string violation;  // names the violated vertex/constraint when !ok
};

// Independent re-check of the certificate pair: primal feasibility, dual
// feasibility (both via check_weighting) and exact total equality. Shares
// no code with the solver's internal bookkeeping.
DualityAudit verify_strong_duality(const FractionalSolution& sol, const Graph& g);

}  // namespace dom

#endif
