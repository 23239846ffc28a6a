#include "dom/weighting.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dom {

Rat VertexWeighting::total() const {
    Rat t(0);
    for (const auto& w : weights) t += w;
    return t;
}

namespace {

Rat neighborhood_sum(const Graph& g, const std::vector<Rat>& w, int v) {
    Rat s = w[v];
    for (int u : g.neighbors(v)) s += w[u];
    return s;
}

}  // namespace

SlackReport check_weighting(const Graph& g, const VertexWeighting& w, Exec exec) {
    const int n = g.n();
    if (static_cast<int>(w.weights.size()) != n)
        throw std::invalid_argument("weighting length does not match vertex count");
    for (const auto& x : w.weights)
        if (sgn(x) < 0 || x > 1) throw std::invalid_argument("weight outside [0,1]");

    SlackReport rep;
    rep.sums.resize(n);

    bool parallel = exec == Exec::Parallel || (exec == Exec::Auto && n >= 512);
#ifndef _OPENMP
    parallel = false;
#endif
    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
        for (int v = 0; v < n; ++v) rep.sums[v] = neighborhood_sum(g, w.weights, v);
#endif
    } else {
        for (int v = 0; v < n; ++v) rep.sums[v] = neighborhood_sum(g, w.weights, v);
    }

    // slack >= 0 means the vertex constraint holds
    Rat lo, hi;
    for (int v = 0; v < n; ++v) {
        Rat slack = w.role == Role::domination ? Rat(rep.sums[v] - 1) : Rat(1 - rep.sums[v]);
        if (v == 0 || slack < lo) lo = slack;
        if (v == 0 || slack > hi) hi = slack;
        if (sgn(slack) < 0) rep.violated.push_back(v);
    }
    rep.min_slack = lo;
    rep.max_slack = hi;
    rep.feasible = rep.violated.empty();
    return rep;
}

}  // namespace dom
