#pragma once

// UCB selection over restricted learners with convergence-triggered
// elimination, and the single-learner baselines.

#include "csrl/core.hpp"
#include "csrl/environment.hpp"
#include "csrl/learners.hpp"

#include <functional>
#include <limits>
#include <optional>
#include <vector>

namespace csrl {

struct MetaConfig {
    double c = 1.0;
    double t_l = 0.05;
    std::size_t t_n = 20;
    double return_min = 0.0;
    double return_max = 1.0;
    double tolerance_sigmas = 2.0;
    /// false gives the no-elimination baseline.
    bool eliminate = true;

    void validate() const;  // throws ConfigError
};

struct LearnerStats {
    std::size_t n = 0;
    double mu_hat = 0.0;
    std::vector<double> returns;  // normalized
    std::vector<double> deltas;
    bool active = true;

    void record(double norm_return, double delta);
    /// Sample standard deviation of the returns over sqrt(n); 0 below two samples.
    double standard_error() const;
};

inline constexpr double kUnvisitedBonus = std::numeric_limits<double>::infinity();

/// c * sqrt(ln h) / sqrt(n); infinite for n == 0.
double confidence_bonus(std::size_t h, std::size_t n, double c);

/// Active learner maximizing mu_hat + bonus, lowest index on ties.
std::size_t select_learner(const std::vector<LearnerStats>& stats, std::size_t h, double c);

/// clip((j - lo) / (hi - lo), 0, 1)
double normalize_return(double j, double lo, double hi);

bool should_eliminate(std::size_t k, const std::vector<LearnerStats>& stats, const MetaConfig& config,
                      const RestrictionSet& set);

struct SelectionRecord {
    std::size_t episode = 0;  // 1-based
    std::size_t chosen = 0;
    double raw_return = 0.0;
    double norm_return = 0.0;
    bool clipped = false;
    double delta = 0.0;
    std::size_t steps = 0;
    std::vector<bool> active;  // after this episode's elimination check
    std::optional<std::size_t> eliminated;
};

/// Called after every episode with the record and the trajectory.
using EpisodeObserver = std::function<void(const SelectionRecord&, const Trajectory&)>;

std::vector<SelectionRecord> run_csrl(const Environment& env, LearnerPool& pool, const RestrictionSet& set,
                                      const MetaConfig& config, Rng& env_rng, std::size_t episodes,
                                      const EpisodeObserver& observer = {});

/// One learner, every episode. Records use learner index 0.
std::vector<SelectionRecord> run_fixed(const Environment& env, LearnerPool& pool, const MetaConfig& config,
                                       Rng& env_rng, std::size_t episodes, const EpisodeObserver& observer = {});

}  // namespace csrl
