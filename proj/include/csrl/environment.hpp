#pragma once

#include "csrl/core.hpp"

#include <optional>
#include <vector>

namespace csrl {

struct StepResult {
    std::optional<StateId> next;  // nullopt: the episode terminated
    double reward = 0.0;
};

/// Episodic environment over an enumerable state space. Implementations are
/// stateless apart from their parameters; all randomness comes from the
/// caller's generator, so one instance can be shared by concurrent runs.
class Environment {
public:
    virtual ~Environment() = default;

    virtual std::size_t num_states() const = 0;
    virtual std::size_t num_actions() const = 0;
    /// Maximum number of steps per episode.
    virtual std::size_t horizon() const = 0;

    virtual StateId reset(Rng& rng) const = 0;
    virtual StepResult step(StateId s, ActionId a, Rng& rng) const = 0;

    /// Non-terminal successors (s, a) can reach, when the dynamics make them
    /// known in advance. Learners may use this to narrow their model.
    virtual std::optional<std::vector<StateId>> known_successors(StateId, ActionId) const {
        return std::nullopt;
    }
};

}  // namespace csrl
