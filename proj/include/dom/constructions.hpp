#ifndef DOM_CONSTRUCTIONS_HPP
#define DOM_CONSTRUCTIONS_HPP

#include <cstdint>
#include <string>

#include "dom/graph.hpp"
#include "dom/rational.hpp"

namespace dom {

// Deterministic graph builders: same parameters always produce the same
// edge-list bytes.

// K_{2t} minus the perfect matching {2i, 2i+1}. (2t-2)-regular on 2t
// vertices; the non-neighbor of v is v ^ 1.
Graph matching_complement(int t);

inline constexpr long kTorusVertexCap = 100000;

// Strong power of matching_complement(t) on d = 2t-1 coordinates: vertices
// are d-tuples encoded little-endian in base 2t (coordinate i is digit i),
// tuples adjacent iff no coordinate pair is a matched pair. Regular of
// degree (2t-1)^d - 1 on (2t)^d vertices. Refuses to build past vertex_cap.
Graph torus_j(int t, long vertex_cap = kTorusVertexCap);

// Four independent hub vertices 0..3, then t cliques of sizes 4, 8, ...,
// 2^(t+1) laid out consecutively (clique c occupies [2^(c+2), 2^(c+3))).
// The vertex with local index l in a clique of size s is adjacent to hub
// floor(4l/s), so each hub sees one contiguous quarter of every clique and
// no two hubs share a neighbor. Order 2^(t+2). Requires t >= 4.
Graph clique_chain_h(int t);

// K_t on 0..t-1 plus pendant t+i attached to clique vertex i. Order 2t.
Graph hairy_clique(int t);

// G(n, p): pair (i, j), i < j, visited lexicographically, kept iff
// derive_seed(seed, i, j) < bernoulli_threshold(p). Requires 0 < p < 1.
Graph random_graph(int n, std::uint64_t seed, const Rat& p = Rat(1, 2));

struct ConstructionSpec {
    enum class Family { matching_complement, torus_j, clique_chain_h, hairy_clique, random };

    Family family;
    long param = 0;            // t, or n for the random family
    std::uint64_t seed = 0;    // random family only
    Rat probability = Rat(1, 2);
    long vertex_cap = kTorusVertexCap;

    // "matching-complement", "torus-j", ... as accepted by the CLI.
    static Family parse_family(const std::string& name);
    std::string label() const;
};

Graph build(const ConstructionSpec& spec);

}  // namespace dom

#endif
