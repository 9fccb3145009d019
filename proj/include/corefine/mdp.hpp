#pragma once

#include <vector>

#include "corefine/grid.hpp"

namespace corefine::mdp {

// Discrete set of per-pixel probability adjustments. Action indices everywhere
// in the library refer to positions in `deltas`; the ordering is part of the
// contract (checkpoints and traces store bare indices).
struct ActionSet {
    std::vector<double> deltas;

    // {+0.05, -0.05, +0.1, -0.1, +0.2, -0.2, +0.4, -0.4}
    static ActionSet standard();

    int size() const { return static_cast<int>(deltas.size()); }
    void validate() const;  // nonempty, every delta nonzero and in (-1, 1)
};

// min(max(x, lo), hi); rejects lo > hi.
double clip_value(double x, double lo, double hi);

// One MDP transition: out(i) = clip(p(i) + deltas[a(i)] + residual(i), 0, 1).
// `residual` is an optional per-pixel offset, zero when null.
ProbMap apply_actions(const ProbMap& p, const ActionGrid& a, const ActionSet& actions,
                      const Grid<double>* residual = nullptr);

// Per-pixel reward: (y - p_prev)^2 - (y - p_new)^2.
ValueMap immediate_reward(const Mask& y, const ProbMap& p_prev, const ProbMap& p_new);

// Backward recursion R_t = r_t + gamma * R_{t+1}, seeded with `bootstrap`
// (all-zero for terminal episodes). Returns one map per step.
std::vector<ValueMap> discounted_return(const std::vector<ValueMap>& rewards, double gamma,
                                        const ValueMap& bootstrap);

}  // namespace corefine::mdp
