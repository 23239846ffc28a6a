#include "dom/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "dom/rng.hpp"

namespace dom {

Graph matching_complement(int t) {
    if (t < 1) throw std::invalid_argument("matching_complement requires t >= 1");
    const int n = 2 * t;
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (v != (u ^ 1)) edges.push_back({u, v});
    return Graph::from_edges(n, std::move(edges));
}

Graph torus_j(int t, long vertex_cap) {
    if (t < 1) throw std::invalid_argument("torus_j requires t >= 1");
    const int d = 2 * t - 1;
    const int base = 2 * t;
    const long long cap = std::min<long long>(vertex_cap, 1LL << 30);
    long long n = 1;
    for (int i = 0; i < d; ++i) {
        n *= base;
        if (n > cap)
            throw std::invalid_argument("torus_j order (2t)^(2t-1) exceeds the vertex cap of " +
                                        std::to_string(vertex_cap));
    }

    // Tuples are little-endian base-(2t) digit strings: digit i of the
    // vertex index is coordinate i. Two distinct tuples are adjacent iff no
    // coordinate of one is the matched partner (digit ^ 1) of the other's.
    std::vector<int> digits(d), nb(d);
    std::vector<std::pair<int, int>> edges;
    for (long long u = 0; u < n; ++u) {
        long long rest = u;
        for (int i = 0; i < d; ++i) {
            digits[i] = static_cast<int>(rest % base);
            rest /= base;
        }
        // odometer over per-coordinate choices; choice k skips the partner
        std::vector<int> choice(d, 0);
        while (true) {
            long long v = 0;
            for (int i = d - 1; i >= 0; --i) {
                int w = choice[i] >= (digits[i] ^ 1) ? choice[i] + 1 : choice[i];
                nb[i] = w;
                v = v * base + w;
            }
            if (v > u) edges.push_back({static_cast<int>(u), static_cast<int>(v)});
            int i = 0;
            for (; i < d; ++i) {
                if (++choice[i] < base - 1) break;
                choice[i] = 0;
            }
            if (i == d) break;
        }
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph clique_chain_h(int t) {
    if (t < 4) throw std::invalid_argument("clique_chain_h requires t >= 4");
    const long long n = 1LL << (t + 2);
    if (n > (1LL << 30)) throw std::invalid_argument("clique_chain_h order too large");
    std::vector<std::pair<int, int>> edges;
    // clique c has size 2^(c+2) and occupies [2^(c+2), 2^(c+3))
    for (int c = 0; c < t; ++c) {
        const int s = 1 << (c + 2);
        const int start = s;
        for (int a = 0; a < s; ++a)
            for (int b = a + 1; b < s; ++b) edges.push_back({start + a, start + b});
        for (int l = 0; l < s; ++l) {
            int hub = 4 * l / s;
            edges.push_back({hub, start + l});
        }
    }
    return Graph::from_edges(static_cast<int>(n), std::move(edges));
}

Graph hairy_clique(int t) {
    if (t < 1) throw std::invalid_argument("hairy_clique requires t >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < t; ++u)
        for (int v = u + 1; v < t; ++v) edges.push_back({u, v});
    for (int i = 0; i < t; ++i) edges.push_back({i, t + i});
    return Graph::from_edges(2 * t, std::move(edges));
}

Graph random_graph(int n, std::uint64_t seed, const Rat& p) {
    if (n < 1) throw std::invalid_argument("random_graph requires n >= 1");
    const std::uint64_t threshold = bernoulli_threshold(p);
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (derive_seed(seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(j)) <
                threshold)
                edges.push_back({i, j});
    return Graph::from_edges(n, std::move(edges));
}

ConstructionSpec::Family ConstructionSpec::parse_family(const std::string& name) {
    if (name == "matching-complement") return Family::matching_complement;
    if (name == "torus-j") return Family::torus_j;
    if (name == "clique-chain-h") return Family::clique_chain_h;
    if (name == "hairy-clique") return Family::hairy_clique;
    if (name == "random") return Family::random;
    throw std::invalid_argument("unknown family: " + name);
}

std::string ConstructionSpec::label() const {
    switch (family) {
        case Family::matching_complement: return "matching-complement(t=" + std::to_string(param) + ")";
        case Family::torus_j: return "torus-j(t=" + std::to_string(param) + ")";
        case Family::clique_chain_h: return "clique-chain-h(t=" + std::to_string(param) + ")";
        case Family::hairy_clique: return "hairy-clique(t=" + std::to_string(param) + ")";
        case Family::random: return "random(n=" + std::to_string(param) + ")";
    }
    return "?";
}

Graph build(const ConstructionSpec& spec) {
    const int p = static_cast<int>(spec.param);
    switch (spec.family) {
        case ConstructionSpec::Family::matching_complement: return matching_complement(p);
        case ConstructionSpec::Family::torus_j: return torus_j(p, spec.vertex_cap);
        case ConstructionSpec::Family::clique_chain_h: return clique_chain_h(p);
        case ConstructionSpec::Family::hairy_clique: return hairy_clique(p);
        case ConstructionSpec::Family::random: return random_graph(p, spec.seed, spec.probability);
    }
    throw std::invalid_argument("unknown family");
}

}  // namespace dom
