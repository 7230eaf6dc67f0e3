#pragma once

// Movie-recommendation simulator. The state is the window of the last `w`
// recommended genres (most recent first); the reward is linear in recency and
// variability features of the chosen genre; each step terminates with a
// probability that depends on the variability level and the action.

#include "csrl/core.hpp"
#include "csrl/environment.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace csrl {

class TabularMdp;

struct RecsysParams {
    std::size_t num_actions = 5;
    std::size_t window = 4;
    std::size_t d_rho = 5;
    std::size_t d_v = 2;
    /// theta[a] has feature_dim() entries.
    std::vector<std::vector<double>> theta;
    /// term_prob[v - 1][a] for variability levels v = 1 .. max_variability().
    std::vector<std::vector<double>> term_prob;
    std::size_t horizon_cap = 500;

    std::size_t feature_dim() const { return d_rho + 2 * d_v + 1; }
    std::size_t max_variability() const { return std::min(window + 1, num_actions); }
    std::size_t num_states() const;

    /// Throws LoadError with the offending field on any violated invariant.
    void validate() const;

    bool operator==(const RecsysParams&) const = default;
};

/// Dropout probabilities per variability level for levels 1..5. Levels 2-5
/// come from the fitted Movielens dropout model; level 1 extrapolates the trend.
inline constexpr double kDefaultTermProb[5] = {0.016, 0.014, 0.0117, 0.0113, 0.0102};

/// Window of past actions, most recent first.
using RecsysWindow = std::vector<ActionId>;

/// Base-|A| index with the most recent action as the most significant digit.
StateId encode_window(const RecsysWindow& window, std::size_t num_actions);
RecsysWindow decode_window(StateId s, std::size_t num_actions, std::size_t window);
/// Window after recommending `a`: (a, a_{t-1}, ..., a_{t-w+1}).
StateId shift_window(StateId s, ActionId a, std::size_t num_actions, std::size_t window);

/// sum_i 1{a_{t-i} = a} / i
double recency(const RecsysWindow& window, ActionId a);
/// Distinct actions in the window together with a.
std::size_t variability(const RecsysWindow& window, ActionId a);
/// [1, rho, ..., rho^d_rho, v, ..., v^d_v, v*rho, ..., (v*rho)^d_v]
std::vector<double> features(const RecsysWindow& window, ActionId a, const RecsysParams& params);
double reward(const RecsysWindow& window, ActionId a, const RecsysParams& params);

RecsysParams load_params(const std::filesystem::path& path);
RecsysParams params_from_json(const std::string& text);
std::string params_to_json(const RecsysParams& params);
void save_params(const RecsysParams& params, const std::filesystem::path& path);

/// Deterministic synthetic parameters: |A| = 5, w = 4, d_rho = 5, d_v = 2.
/// Every genre has a fatigue (negative recency) term and a quadratic taste
/// for variability. Most genres peak at moderate variability; one genre's
/// reward increases with variability over the whole range and another's
/// decreases. Rewards are rescaled into [0.05, 0.95].
RecsysParams gen_default_params(std::uint64_t seed);

class RecsysEnv final : public Environment {
public:
    explicit RecsysEnv(RecsysParams params);

    const RecsysParams& params() const { return params_; }

    std::size_t num_states() const override { return num_states_; }
    std::size_t num_actions() const override { return params_.num_actions; }
    std::size_t horizon() const override { return params_.horizon_cap; }

    /// Uniformly random window.
    StateId reset(Rng& rng) const override;
    StepResult step(StateId s, ActionId a, Rng& rng) const override;
    std::optional<std::vector<StateId>> known_successors(StateId s, ActionId a) const override;

    double reward(StateId s, ActionId a) const { return reward_[s * params_.num_actions + a]; }
    std::size_t variability(StateId s, ActionId a) const { return variability_[s * params_.num_actions + a]; }
    double termination_probability(StateId s, ActionId a) const;
    StateId successor(StateId s, ActionId a) const;

    /// Exact tabular model with a uniform initial distribution.
    TabularMdp to_tabular_mdp() const;

private:
    RecsysParams params_;
    std::size_t num_states_;
    std::vector<double> reward_;
    std::vector<std::uint8_t> variability_;
};

}  // namespace csrl
