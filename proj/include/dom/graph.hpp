#ifndef DOM_GRAPH_HPP
#define DOM_GRAPH_HPP

#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dom/bitset.hpp"

namespace dom {

struct ParseError : std::runtime_error {
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line(line) {}
    int line;
};

// Immutable simple undirected graph on vertices 0..n-1. Index order is the
// vertex ordering every tie-break in this project refers to. All members
// are const after construction; instances are safe to share across threads.
class Graph {
public:
    // Validates: n >= 1, endpoints in range, no self-loops, no duplicate
    // edges (duplicates are an error, not a merge). Throws std::invalid_argument.
    static Graph from_edges(int n, std::vector<std::pair<int, int>> edges);

    // Edge-list document: first non-comment line "n m", then m lines "u v".
    // Lines whose first non-space character is '#' are comments. Errors carry
    // 1-based line numbers.
    static Graph parse(std::string_view text);
    static Graph load(const std::string& path);

    int n() const { return n_; }
    long long edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    // (delta, Delta)
    std::pair<int, int> degree_stats() const;

    // Sorted union of closed neighborhoods over the sequence. Throws on an
    // out-of-range index. N[v] always contains v.
    std::vector<int> closed_neighborhood(std::span<const int> vs) const;

    bool is_dominating(std::span<const int> s) const;
    bool is_dominating(const Bitset& s) const;

    // Edges with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Deterministic writer for the same format parse() reads.
    std::string to_edge_list() const;

private:
    Graph() = default;

    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

// One closed-neighborhood bitset per vertex; the row-set representation the
// solvers work on.
std::vector<Bitset> closed_rows(const Graph& g);

}  // namespace dom

#endif
