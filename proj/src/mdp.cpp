#include "corefine/mdp.hpp"

#include <cmath>
#include <stdexcept>

namespace corefine::mdp {

ActionSet ActionSet::standard()
{
    return ActionSet{{+0.05, -0.05, +0.1, -0.1, +0.2, -0.2, +0.4, -0.4}};
}

void ActionSet::validate() const
{
    if (deltas.empty())
        throw std::invalid_argument("ActionSet: empty");
    for (double d : deltas) {
        if (d == 0.0 || !(d > -1.0 && d < 1.0) || !std::isfinite(d))
            throw std::invalid_argument("ActionSet: every delta must be nonzero and in (-1, 1)");
    }
}

double clip_value(double x, double lo, double hi)
{
    if (lo > hi)
        throw std::invalid_argument("clip_value: lo > hi");
    return std::min(std::max(x, lo), hi);
}

ProbMap apply_actions(const ProbMap& p, const ActionGrid& a, const ActionSet& actions,
                      const Grid<double>* residual)
{
    require_same_shape(p, a, "apply_actions");
    if (residual)
        require_same_shape(p, *residual, "apply_actions(residual)");
    const int n_actions = actions.size();
    ProbMap out(p.height(), p.width());
    for (std::int64_t i = 0; i < p.size(); ++i) {
        const int ai = a[i];
        if (ai < 0 || ai >= n_actions)
            throw std::out_of_range("apply_actions: action index " + std::to_string(ai)
                                    + " outside action set of size " + std::to_string(n_actions));
        const double c = residual ? (*residual)[i] : 0.0;
        out[i] = clip_value(p[i] + actions.deltas[ai] + c, 0.0, 1.0);
    }
    return out;
}

ValueMap immediate_reward(const Mask& y, const ProbMap& p_prev, const ProbMap& p_new)
{
    require_same_shape(y, p_prev, "immediate_reward");
    require_same_shape(y, p_new, "immediate_reward");
    ValueMap r(y.height(), y.width());
    for (std::int64_t i = 0; i < r.size(); ++i) {
        const double yi = static_cast<double>(y[i]);
        const double e_prev = yi - p_prev[i];
        const double e_new = yi - p_new[i];
        r[i] = e_prev * e_prev - e_new * e_new;
    }
    return r;
}

std::vector<ValueMap> discounted_return(const std::vector<ValueMap>& rewards, double gamma,
                                        const ValueMap& bootstrap)
{
    if (rewards.empty())
        throw std::invalid_argument("discounted_return: empty reward list");
    if (!(gamma > 0.0 && gamma <= 1.0))
        throw std::invalid_argument("discounted_return: gamma must be in (0, 1]");
    for (const auto& r : rewards)
        require_same_shape(r, bootstrap, "discounted_return");

    const int T = static_cast<int>(rewards.size());
    std::vector<ValueMap> out(T);
    ValueMap running = bootstrap;
    for (int t = T - 1; t >= 0; --t) {
        const ValueMap& r = rewards[t];
        for (std::int64_t i = 0; i < running.size(); ++i)
            running[i] = r[i] + gamma * running[i];
        out[t] = running;
    }
    return out;
}

}  // namespace corefine::mdp
