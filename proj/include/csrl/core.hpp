#pragma once

// Basic MDP vocabulary shared by every module: state/action ids, trajectories,
// tabular policies, action restrictions and the partial order between them.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace csrl {

using StateId = std::size_t;
using ActionId = std::size_t;
using Rng = std::mt19937_64;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Caller passed something outside the contract of an operation.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A file or document could not be parsed or failed validation. The message
/// carries the offending field path.
class LoadError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An experiment or component configuration is inconsistent.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Declared restriction relations contradict the brute-force subset order.
class VerificationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// Trajectories
// ---------------------------------------------------------------------------

struct Step {
    StateId state = 0;
    ActionId action = 0;
    double reward = 0.0;
};

/// One episode. `final_state` is the state reached after the last step when
/// the episode was cut by the horizon rather than terminated.
struct Trajectory {
    std::vector<Step> steps;
    bool terminated = false;
    std::optional<StateId> final_state;

    std::size_t size() const { return steps.size(); }
    bool empty() const { return steps.empty(); }

    /// Successor of step t: the next step's state, the final state, or
    /// nullopt for the terminal state.
    std::optional<StateId> next_state(std::size_t t) const;
};

/// Undiscounted sum of rewards.
double episode_return(const Trajectory& traj);

// ---------------------------------------------------------------------------
// Policies
// ---------------------------------------------------------------------------

class TabularPolicy {
public:
    /// Row-major (state, action) probabilities. Every row must sum to 1
    /// within 1e-9 and hold no negative entry.
    TabularPolicy(std::size_t num_states, std::size_t num_actions, std::vector<double> probs);

    static TabularPolicy uniform(std::size_t num_states, std::size_t num_actions);
    static TabularPolicy deterministic(std::size_t num_actions, std::span<const ActionId> actions);

    std::size_t num_states() const { return num_states_; }
    std::size_t num_actions() const { return num_actions_; }
    double prob(StateId s, ActionId a) const { return probs_[s * num_actions_ + a]; }
    std::span<const double> row(StateId s) const {
        return {probs_.data() + s * num_actions_, num_actions_};
    }

    /// Highest-probability action, lowest index on ties.
    ActionId mode(StateId s) const;

    bool operator==(const TabularPolicy&) const = default;

private:
    std::size_t num_states_;
    std::size_t num_actions_;
    std::vector<double> probs_;
};

// ---------------------------------------------------------------------------
// Restrictions
// ---------------------------------------------------------------------------

/// Per-state set of allowed actions. Masks are sorted, duplicate-free and
/// never empty.
class Restriction {
public:
    Restriction(std::string id, std::size_t num_actions, std::vector<std::vector<ActionId>> masks,
                std::vector<std::string> declared_loosers = {});

    /// The unconstrained restriction "U": every action everywhere.
    static Restriction unconstrained(std::size_t num_states, std::size_t num_actions,
                                     std::string id = "U");

    const std::string& id() const { return id_; }
    std::size_t num_states() const { return masks_.size(); }
    std::size_t num_actions() const { return num_actions_; }
    const std::vector<std::string>& declared_loosers() const { return declared_loosers_; }
    void set_declared_loosers(std::vector<std::string> ids) { declared_loosers_ = std::move(ids); }

    /// Throws InvalidInput for a state outside the space.
    std::span<const ActionId> allowed_actions(StateId s) const;
    bool allows(StateId s, ActionId a) const {
        return s < masks_.size() && a < num_actions_ && flags_[s * num_actions_ + a] != 0;
    }

    bool is_unconstrained() const;
    /// Number of allowed (state, action) pairs.
    std::size_t allowed_pairs() const;

    const std::vector<std::vector<ActionId>>& masks() const { return masks_; }
    bool same_masks(const Restriction& other) const { return masks_ == other.masks_; }

private:
    std::string id_;
    std::size_t num_actions_;
    std::vector<std::vector<ActionId>> masks_;
    std::vector<std::uint8_t> flags_;
    std::vector<std::string> declared_loosers_;
};

/// True iff every action the policy can take is allowed by the restriction.
bool policy_satisfies(const TabularPolicy& policy, const Restriction& restriction);

/// C_k <= C_j: every mask of `k` is contained in the mask of `j`.
bool is_subset_or_equal(const Restriction& k, const Restriction& j);
/// C_k < C_j: containment everywhere and a strict difference somewhere.
bool is_subset(const Restriction& k, const Restriction& j);

struct OrderContradiction {
    std::string tighter;  // restriction declaring the relation
    std::string looser;   // the restriction it names as less constrained
    std::string reason;
};

struct OrderReport {
    std::vector<std::string> ids;
    /// strictly_looser[k][j] == true iff C_k < C_j.
    std::vector<std::vector<bool>> strictly_looser;
    std::vector<OrderContradiction> contradictions;

    bool ok() const { return contradictions.empty(); }
    std::string describe() const;
};

/// Members unique by id and by mask, with the brute-force strict subset
/// order computed at construction.
class RestrictionSet {
public:
    explicit RestrictionSet(std::vector<Restriction> members);

    std::size_t size() const { return members_.size(); }
    const Restriction& operator[](std::size_t k) const { return members_[k]; }
    const std::vector<Restriction>& members() const { return members_; }
    std::optional<std::size_t> index_of(std::string_view id) const;

    /// C_i strictly looser than C_k (C_k < C_i).
    bool is_looser(std::size_t i, std::size_t k) const { return looser_[k][i]; }
    /// No member is strictly looser than k.
    bool is_maximal(std::size_t k) const;

    const std::vector<std::vector<bool>>& order() const { return looser_; }

private:
    std::vector<Restriction> members_;
    std::vector<std::vector<bool>> looser_;
};

/// Checks every declared looser relation against the computed order.
OrderReport verify_order(const RestrictionSet& set);

/// verify_order, throwing VerificationError naming every contradicted pair.
void require_verified(const RestrictionSet& set);

}  // namespace csrl
