#include "corefine/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace corefine::oracle {

namespace {

// Action indices sorted by the tie-break relation: smallest |delta| first,
// positive before negative at equal magnitude.
std::vector<int> tiebreak_order(const mdp::ActionSet& actions)
{
    std::vector<int> order(actions.deltas.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        const double da = actions.deltas[a], db = actions.deltas[b];
        if (std::fabs(da) != std::fabs(db))
            return std::fabs(da) < std::fabs(db);
        return da > db;
    });
    return order;
}

double step_reward(double y, double p, double delta, double& p_next)
{
    p_next = std::min(std::max(p + delta, 0.0), 1.0);
    const double e0 = y - p, e1 = y - p_next;
    return e0 * e0 - e1 * e1;
}

}  // namespace

ActionGrid greedy_oracle_actions(const Mask& y, const ProbMap& p, const mdp::ActionSet& actions)
{
    require_same_shape(y, p, "greedy_oracle_actions");
    actions.validate();
    const std::vector<int> order = tiebreak_order(actions);

    ActionGrid out(y.height(), y.width());
    for (std::int64_t i = 0; i < p.size(); ++i) {
        const double yi = static_cast<double>(y[i]);
        int best = order[0];
        double best_r = -2.0;  // rewards live in [-1, 1]
        for (int a : order) {
            double p_next;
            const double r = step_reward(yi, p[i], actions.deltas[a], p_next);
            if (r > best_r) {
                best_r = r;
                best = a;
            }
        }
        out[i] = best;
    }
    return out;
}

ExhaustiveResult exhaustive_return(int label, double p, const mdp::ActionSet& actions, int horizon,
                                   double gamma)
{
    if (label != 0 && label != 1)
        throw std::invalid_argument("exhaustive_return: label must be 0 or 1");
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument("exhaustive_return: p outside [0, 1]");
    if (horizon < 1)
        throw std::invalid_argument("exhaustive_return: horizon must be >= 1");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("exhaustive_return: gamma must be in (0, 1]");
    actions.validate();

    double budget = 1.0;
    for (int t = 0; t < horizon; ++t)
        budget *= actions.size();
    if (budget > 1e6)
        throw std::invalid_argument("exhaustive_return: enumeration budget exceeded (|A|^horizon > 1e6)");

    const std::vector<int> order = tiebreak_order(actions);
    const double y = static_cast<double>(label);

    ExhaustiveResult best;
    best.best_return = -std::numeric_limits<double>::infinity();
    std::vector<int> current(horizon, -1);

    // Depth-first enumeration in tie-break order; a strict `>` keeps the first
    // maximizer in that order, which is the tie-break winner per position.
    auto dfs = [&](auto&& self, int depth, double prob, double partial, double discount) -> void {
        if (depth == horizon) {
            if (partial > best.best_return) {
                best.best_return = partial;
                best.best_sequence = current;
            }
            return;
        }
        for (int a : order) {
            double p_next;
            const double r = step_reward(y, prob, actions.deltas[a], p_next);
            current[depth] = a;
            self(self, depth + 1, p_next, partial + discount * r, discount * gamma);
        }
    };
    dfs(dfs, 0, p, 0.0, 1.0);
    return best;
}

}  // namespace corefine::oracle
