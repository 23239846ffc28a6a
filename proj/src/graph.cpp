#include "dom/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>

namespace dom {

namespace {

bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t' || c == '\r') continue;
        return c == '#';
    }
    return true;  // blank
}

// Parses exactly `count` integers separated by whitespace, nothing else.
bool parse_ints(std::string_view line, int count, long long* out) {
    const char* p = line.data();
    const char* end = p + line.size();
    for (int k = 0; k < count; ++k) {
        while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
        auto [next, ec] = std::from_chars(p, end, out[k]);
        if (ec != std::errc() || next == p) return false;
        p = next;
    }
    while (p < end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
    return p == end;
}

}  // namespace

Graph Graph::from_edges(int n, std::vector<std::pair<int, int>> edges) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u == v) throw std::invalid_argument("self-loop");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    for (auto [u, v] : edges) {
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());
    g.m_ = static_cast<long long>(edges.size());
    return g;
}

Graph Graph::parse(std::string_view text) {
    std::vector<std::string_view> lines;
    for (std::size_t pos = 0; pos <= text.size();) {
        auto nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            if (pos < text.size()) lines.push_back(text.substr(pos));
            break;
        }
        lines.push_back(text.substr(pos, nl - pos));
        pos = nl + 1;
    }

    long long n = -1, m = -1;
    long long edges_read = 0;
    std::vector<std::pair<int, int>> edges;
    std::set<std::pair<int, int>> seen;

    for (std::size_t i = 0; i < lines.size(); ++i) {
        const int lineno = static_cast<int>(i) + 1;
        if (is_comment_or_blank(lines[i])) continue;
        if (n < 0) {
            long long hdr[2];
            if (!parse_ints(lines[i], 2, hdr))
                throw ParseError(lineno, "expected header \"n m\"");
            n = hdr[0];
            m = hdr[1];
            if (n < 1) throw ParseError(lineno, "vertex count must be at least 1");
            if (m < 0) throw ParseError(lineno, "negative edge count");
            continue;
        }
        if (edges_read == m)
            throw ParseError(lineno, "more edge lines than the declared m");
        long long uv[2];
        if (!parse_ints(lines[i], 2, uv))
            throw ParseError(lineno, "expected edge \"u v\"");
        long long u = uv[0], v = uv[1];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw ParseError(lineno, "vertex index out of range");
        if (u == v) throw ParseError(lineno, "self-loop");
        auto key = std::minmax(static_cast<int>(u), static_cast<int>(v));
        if (!seen.insert({key.first, key.second}).second)
            throw ParseError(lineno, "duplicate edge");
        edges.push_back({key.first, key.second});
        ++edges_read;
    }
    if (n < 0) throw ParseError(static_cast<int>(lines.size()) + 1, "missing header \"n m\"");
    if (edges_read != m)
        throw ParseError(static_cast<int>(lines.size()) + 1,
                         "declared m=" + std::to_string(m) + " but found " +
                             std::to_string(edges_read) + " edges");
    return from_edges(static_cast<int>(n), std::move(edges));
}

Graph Graph::load(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse(ss.str());
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_[u];
    return std::binary_search(nb.begin(), nb.end(), v);
}

std::pair<int, int> Graph::degree_stats() const {
    int lo = n_, hi = 0;
    for (int v = 0; v < n_; ++v) {
        int d = degree(v);
        lo = std::min(lo, d);
        hi = std::max(hi, d);
    }
    return {lo, hi};
}

std::vector<int> Graph::closed_neighborhood(std::span<const int> vs) const {
    Bitset acc(n_);
    for (int v : vs) {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
        acc.set(v);
        for (int u : adj_[v]) acc.set(u);
    }
    return acc.minus(Bitset(n_));
}

bool Graph::is_dominating(std::span<const int> s) const {
    Bitset acc(n_);
    for (int v : s) {
        if (v < 0 || v >= n_) throw std::out_of_range("vertex index out of range");
        acc.set(v);
        for (int u : adj_[v]) acc.set(u);
    }
    return acc.count() == n_;
}

bool Graph::is_dominating(const Bitset& s) const {
    Bitset acc(n_);
    s.for_each_set([&](int v) {
        acc.set(v);
        for (int u : adj_[v]) acc.set(u);
    });
    return acc.count() == n_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.push_back({u, v});
    return out;  // adjacency is sorted, so this is lexicographic already
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << ' ' << m_ << '\n';
    for (auto [u, v] : edges()) out << u << ' ' << v << '\n';
    return out.str();
}

std::vector<Bitset> closed_rows(const Graph& g) {
    std::vector<Bitset> rows(g.n(), Bitset(g.n()));
    for (int v = 0; v < g.n(); ++v) {
        rows[v].set(v);
        for (int u : g.neighbors(v)) rows[v].set(u);
    }
    return rows;
}

}  // namespace dom
