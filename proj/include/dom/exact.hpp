#ifndef DOM_EXACT_HPP
#define DOM_EXACT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dom/exec.hpp"
#include "dom/graph.hpp"

namespace dom {

struct SizeCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class SolveMethod { exhaustive, branch_and_bound };

struct DominationResult {
    int value = 0;
    std::vector<int> witness;  // ascending; always verified dominating
    SolveMethod method = SolveMethod::exhaustive;
    bool proven_optimal = false;
    std::uint64_t nodes_explored = 0;

    // "gamma=<k> witness=<v1,v2,...> method=<m> optimal=<bool>"
    std::string serialize() const;
};

// Exhaustive search by subset size k = 1, 2, ...; returns the
// lexicographically least witness of the first feasible k. Requires
// n <= 30 unless size_cap bounds the enumeration; throws SizeCapExceeded
// when no dominating set of size <= size_cap exists.
DominationResult brute_force_gamma(const Graph& g, std::optional<int> size_cap = {},
                                   Exec exec = Exec::Auto);

// Exact branch and bound. Branches on an undominated vertex with the fewest
// remaining candidate dominators, trying candidates in decreasing
// new-coverage order and excluding each after its subtree; prunes with the
// counting bound ceil(undominated / (1 + Delta)). The greedy set seeds the
// incumbent; upper_hint, when valid, narrows the search further. Throws
// BudgetExceeded when time_limit elapses.
DominationResult branch_bound_gamma(const Graph& g, std::optional<int> upper_hint = {},
                                    std::optional<std::chrono::milliseconds> time_limit = {});

}  // namespace dom

#endif
