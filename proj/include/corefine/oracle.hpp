#pragma once

#include <vector>

#include "corefine/grid.hpp"
#include "corefine/mdp.hpp"

namespace corefine::oracle {

// Per-pixel argmax of the one-step reward over the action set. Ties are broken
// by smallest |delta|, then by positive sign, so the output is deterministic.
// The per-pixel reward of Eq.-(4) form makes scalar enumeration exact: pixels
// never interact through the reward.
ActionGrid greedy_oracle_actions(const Mask& y, const ProbMap& p, const mdp::ActionSet& actions);

struct ExhaustiveResult {
    double best_return = 0.0;
    std::vector<int> best_sequence;  // action indices, length == horizon
};

// Exact optimum of the discounted return for one pixel by enumerating all
// |A|^horizon action sequences. The returned sequence is the first maximizer
// in tie-break order (each position ranked by smallest |delta|, positive
// first). Guarded at |A|^horizon <= 10^6.
ExhaustiveResult exhaustive_return(int label, double p, const mdp::ActionSet& actions, int horizon,
                                   double gamma);

}  // namespace corefine::oracle
