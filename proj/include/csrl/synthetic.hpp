#pragma once

// Small enumerable MDPs and the exact constrained value-iteration oracle.

#include "csrl/core.hpp"
#include "csrl/environment.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace csrl {

struct Transition {
    StateId next = 0;
    double prob = 0.0;
};

/// Sparse successor distribution of one (s, a) pair plus the probability of
/// ending the episode.
struct TransitionRow {
    std::vector<Transition> successors;
    double terminal = 0.0;

    bool operator==(const TransitionRow&) const;
};

class TabularMdp {
public:
    TabularMdp(std::size_t num_states, std::size_t num_actions, std::vector<TransitionRow> rows,
               std::vector<double> reward_mean, std::size_t horizon, std::vector<double> initial_dist);

    std::size_t num_states() const { return num_states_; }
    std::size_t num_actions() const { return num_actions_; }
    std::size_t horizon() const { return horizon_; }
    const TransitionRow& row(StateId s, ActionId a) const { return rows_[s * num_actions_ + a]; }
    double reward(StateId s, ActionId a) const { return reward_mean_[s * num_actions_ + a]; }
    const std::vector<double>& initial_dist() const { return initial_dist_; }

    bool operator==(const TabularMdp&) const = default;

private:
    std::size_t num_states_;
    std::size_t num_actions_;
    std::vector<TransitionRow> rows_;
    std::vector<double> reward_mean_;
    std::size_t horizon_;
    std::vector<double> initial_dist_;
};

inline constexpr ActionId kChainLeft = 0;
inline constexpr ActionId kChainRight = 1;

/// n-state chain starting in state 0. "right" advances with probability
/// 1 - slip and otherwise stays; "left" returns to state 0. Reward is 1 in
/// the last state and 0.01 in state 0. Horizon defaults to 4n.
TabularMdp make_chain_mdp(std::size_t n, double slip, std::size_t horizon = 0);

/// Random rows (normalized exponential draws), rewards uniform in
/// [0, reward_scale], uniform initial distribution.
TabularMdp make_random_mdp(std::uint64_t seed, std::size_t num_states, std::size_t num_actions,
                           double reward_scale, std::size_t horizon = 10);

struct ValueSolution {
    std::vector<double> v;  // per state
    std::vector<double> q;  // row-major (s, a); zero outside the restriction
    TabularPolicy policy;   // greedy over allowed actions, lowest index on ties

    double q_at(StateId s, ActionId a, std::size_t num_actions) const { return q[s * num_actions + a]; }
};

/// gamma == 1: backward induction over the MDP horizon, returning the
/// first-stage values. gamma < 1: stationary iteration to a 1e-10 sup-norm
/// change.
ValueSolution exact_constrained_vi(const TabularMdp& mdp, const Restriction& c, double gamma = 1.0);

/// Expected value under the initial distribution.
double initial_value(const TabularMdp& mdp, const ValueSolution& solution);

class TabularEnv final : public Environment {
public:
    explicit TabularEnv(TabularMdp mdp) : mdp_(std::move(mdp)) {}

    const TabularMdp& mdp() const { return mdp_; }
    std::size_t num_states() const override { return mdp_.num_states(); }
    std::size_t num_actions() const override { return mdp_.num_actions(); }
    std::size_t horizon() const override { return mdp_.horizon(); }
    StateId reset(Rng& rng) const override;
    /// Rewards are the deterministic means.
    StepResult step(StateId s, ActionId a, Rng& rng) const override;

private:
    TabularMdp mdp_;
};

std::string mdp_to_json(const TabularMdp& mdp);
TabularMdp mdp_from_json(const std::string& text);

}  // namespace csrl
