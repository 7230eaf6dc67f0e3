#pragma once

// Restricted base learners: optimistic tabular UCRL over a shared model,
// masked tabular Q-learning, and a stationary mock learner.

#include "csrl/core.hpp"
#include "csrl/environment.hpp"

#include <cstdint>
#include <memory>
#include <span>
#include <utility>
#include <vector>

namespace csrl {

// ---------------------------------------------------------------------------
// UCRL
// ---------------------------------------------------------------------------

/// Visit counts, reward sums and sparse transition counts. N(s,a) equals the
/// sum of successor counts plus the terminal count.
class UcrlModel {
public:
    UcrlModel(std::size_t num_states, std::size_t num_actions);

    std::size_t num_states() const { return num_states_; }
    std::size_t num_actions() const { return num_actions_; }

    void update(const Trajectory& traj);

    std::uint64_t visits(StateId s, ActionId a) const { return visits_[s * num_actions_ + a]; }
    double reward_sum(StateId s, ActionId a) const { return reward_sum_[s * num_actions_ + a]; }
    std::uint64_t terminal_count(StateId s, ActionId a) const { return terminal_[s * num_actions_ + a]; }
    std::uint64_t transition_count(StateId s, ActionId a, StateId next) const;
    /// Observed successors with counts, sorted by state.
    const std::vector<std::pair<StateId, std::uint64_t>>& successors(StateId s, ActionId a) const {
        return next_[s * num_actions_ + a];
    }

    /// Bumped by every update that adds at least one transition.
    std::uint64_t version() const { return version_; }

    bool operator==(const UcrlModel& other) const;

private:
    std::size_t num_states_;
    std::size_t num_actions_;
    std::vector<std::uint64_t> visits_;
    std::vector<double> reward_sum_;
    std::vector<std::uint64_t> terminal_;
    std::vector<std::vector<std::pair<StateId, std::uint64_t>>> next_;
    std::uint64_t version_ = 0;
};

struct EviOptions {
    std::size_t horizon = 1;
    double r_max = 1.0;
    double delta_conf = 0.05;
    /// Multiplies both confidence widths; 0 plans on the empirical model.
    double width_scale = 1.0;
    /// Known non-terminal successor sets. When given, optimism only moves
    /// mass within successor + terminal and the transition radius uses that
    /// support size in place of |S|.
    const Environment* support = nullptr;
};

struct EviResult {
    std::vector<double> q;  // first-stage Q, row-major (s, a); zero outside the restriction
    std::vector<double> v;  // first-stage values
    std::vector<ActionId> greedy;
};

double ucrl_reward_width(std::uint64_t n, double r_max, double delta_conf);
double ucrl_transition_width(std::uint64_t n, std::size_t support, double delta_conf);

/// Optimistic finite-horizon value iteration over allowed actions only.
/// Unvisited pairs put all empirical mass on termination.
EviResult constrained_evi(const UcrlModel& model, const Restriction& c, const EviOptions& options);

/// Mean absolute elementwise difference of two Q tables.
double tabular_change(std::span<const double> q_prev, std::span<const double> q_new, std::size_t num_states,
                      std::size_t num_actions);

// ---------------------------------------------------------------------------
// Q-learning
// ---------------------------------------------------------------------------

struct QTable {
    QTable(std::size_t num_states, std::size_t num_actions, double alpha = 0.1, double gamma = 1.0);

    std::size_t num_states;
    std::size_t num_actions;
    std::vector<double> q;
    double alpha;
    double gamma;
    double epsilon = 1.0;
    double epsilon_decay = 0.999;
    double epsilon_min = 0.01;

    double& at(StateId s, ActionId a) { return q[s * num_actions + a]; }
    double at(StateId s, ActionId a) const { return q[s * num_actions + a]; }
    std::span<const double> row(StateId s) const { return {q.data() + s * num_actions, num_actions}; }
    /// Max over the restriction's allowed actions at s.
    double masked_max(StateId s, const Restriction& c) const;
};

enum class TdChange { Absolute, Signed };

struct QUpdateOptions {
    TdChange change = TdChange::Absolute;
    /// Skip steps whose action the restriction disallows (shared data).
    bool filter_disallowed = false;
};

/// One TD update per step in order. The returned change is the sum of TD
/// errors (absolute by default) against the table as it was before the call.
/// Epsilon decays once per applied update.
double q_learner_update(QTable& table, const Trajectory& traj, const Restriction& c, QUpdateOptions options = {});

/// With probability eps uniform over `allowed`, else the masked argmax
/// (lowest index on ties).
ActionId masked_epsilon_greedy(std::span<const double> q_row, std::span<const ActionId> allowed, double eps,
                               Rng& rng);

// ---------------------------------------------------------------------------
// Learner contract
// ---------------------------------------------------------------------------

class Learner {
public:
    explicit Learner(Restriction restriction) : restriction_(std::move(restriction)) {}
    virtual ~Learner() = default;

    const Restriction& restriction() const { return restriction_; }

    virtual void begin_episode() {}
    virtual ActionId act(StateId s) = 0;
    /// Learns from its own trajectory; returns the change value.
    virtual double end_episode(const Trajectory& traj) = 0;
    /// Off-policy data generated by another learner.
    virtual void ingest_shared(const Trajectory&) {}
    virtual TabularPolicy greedy_policy() const = 0;

    /// Rolls one episode. Throws std::logic_error if an action leaves the
    /// restriction.
    virtual Trajectory generate(const Environment& env, Rng& env_rng);

protected:
    Restriction restriction_;
};

/// Plans with constrained_evi on a model the pool updates.
class UcrlLearner final : public Learner {
public:
    UcrlLearner(Restriction restriction, std::shared_ptr<const UcrlModel> model, EviOptions options);

    void begin_episode() override;
    ActionId act(StateId s) override;
    double end_episode(const Trajectory& traj) override;
    TabularPolicy greedy_policy() const override;

    const EviResult& plan() const { return plan_; }

private:
    void replan_if_stale();

    std::shared_ptr<const UcrlModel> model_;
    EviOptions options_;
    EviResult plan_;
    std::uint64_t planned_version_ = 0;
    bool planned_ = false;
};

class QLearner final : public Learner {
public:
    QLearner(Restriction restriction, QTable table, std::uint64_t seed, TdChange change = TdChange::Absolute);

    ActionId act(StateId s) override;
    double end_episode(const Trajectory& traj) override;
    void ingest_shared(const Trajectory& traj) override;
    TabularPolicy greedy_policy() const override;

    const QTable& table() const { return table_; }

private:
    QTable table_;
    Rng rng_;
    TdChange change_;
};

/// A converged learner: every episode is one step whose reward is drawn from
/// a normal(mu, sigma) truncated to [0, 1]. The change value is always 0.
class StationaryMockLearner final : public Learner {
public:
    StationaryMockLearner(Restriction restriction, double mu, double sigma, std::uint64_t seed);

    ActionId act(StateId s) override;
    double end_episode(const Trajectory&) override { return 0.0; }
    TabularPolicy greedy_policy() const override;
    Trajectory generate(const Environment& env, Rng& env_rng) override;

    double mu() const { return mu_; }
    double sample_return();

private:
    double mu_;
    double sigma_;
    Rng rng_;
};

/// Learners aligned with a restriction set plus the UCRL model they share.
class LearnerPool {
public:
    LearnerPool(std::vector<std::unique_ptr<Learner>> learners, std::shared_ptr<UcrlModel> shared_model = nullptr);

    std::size_t size() const { return learners_.size(); }
    Learner& operator[](std::size_t k) { return *learners_[k]; }
    const Learner& operator[](std::size_t k) const { return *learners_[k]; }
    const UcrlModel* shared_model() const { return shared_model_.get(); }

    /// Updates the shared model, lets learner k learn from its trajectory
    /// and offers the trajectory to every other learner. Returns k's change.
    double dispatch(std::size_t k, const Trajectory& traj);

private:
    std::vector<std::unique_ptr<Learner>> learners_;
    std::shared_ptr<UcrlModel> shared_model_;
};

}  // namespace csrl
