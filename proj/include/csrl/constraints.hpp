#pragma once

// Builders that turn high-level restriction descriptions into per-state
// masks, the recommendation restriction family, and the JSON document format
// for restriction sets.

#include "csrl/core.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace csrl {

class RecsysEnv;

struct RecsysShape {
    std::size_t num_actions = 5;
    std::size_t window = 4;
};

enum class VariabilityKind { AtLeast, Exactly };

/// What to do at a state where the spec admits no action.
///  - Strict: construction fails, naming the state.
///  - Nearest: allow the actions whose variability comes closest to the
///    requirement; bans are relaxed most-popular-first until the mask is
///    nonempty. Used by the built-in recommendation family, where low- or
///    high-diversity windows make every level unreachable somewhere.
enum class UnsatisfiableMask { Strict, Nearest };

struct VariabilitySpec {
    VariabilityKind kind = VariabilityKind::AtLeast;
    std::size_t level = 1;
    /// Least popular first.
    std::vector<ActionId> banned_actions;
    UnsatisfiableMask fallback = UnsatisfiableMask::Strict;
};

Restriction build_variability_restriction(std::string id, const VariabilitySpec& spec, const RecsysShape& shape,
                                          std::vector<std::string> declared_loosers = {});

/// Actions ordered from least to most popular, popularity being the mean
/// reward over all windows. Ties go to the lower index.
std::vector<ActionId> popularity_order(const RecsysEnv& env);

/// Declared "less constrained" lists of the 13-member recommendation family.
/// g# is "at least #" variability (l# is accepted as an alias), e# "exactly
/// #", o# additionally bans the least popular genre and t# the two least
/// popular ones.
const std::vector<std::pair<std::string, std::vector<std::string>>>& recsys_declared_order();

/// An alternative listing that also names g3 as looser than
/// e2, which brute force refutes: at a two-genre window e2 must repeat a
/// genre while g3 must introduce a new one.
const std::vector<std::pair<std::string, std::vector<std::string>>>& recsys_listed_order();

/// The 13-member family {U, g2..g5, e2..e4, o2..o4, t2, t3}, verified.
/// `unpopular` lists actions least popular first (at least two entries).
RestrictionSet build_recsys_set(const RecsysShape& shape, const std::vector<ActionId>& unpopular);
RestrictionSet build_recsys_set(const RecsysEnv& env);
/// The family with the given declared lists, not verified.
RestrictionSet build_recsys_members(const RecsysShape& shape, const std::vector<ActionId>& unpopular,
                                    const std::vector<std::pair<std::string, std::vector<std::string>>>& order);

/// `table[s]` is the allowed action list of state s.
Restriction build_mask_table_restriction(std::string id, std::size_t num_actions,
                                         std::vector<std::vector<ActionId>> table,
                                         std::vector<std::string> declared_loosers = {});

/// Accepts g#/l# spellings; returns the canonical g# id.
std::string canonical_restriction_id(const std::string& id);

// ---------------------------------------------------------------------------
// JSON documents
// ---------------------------------------------------------------------------

/// Everything needed to resolve builder references in a restriction document.
struct RestrictionContext {
    std::size_t num_states = 0;
    std::size_t num_actions = 0;
    std::optional<RecsysShape> recsys;
    std::vector<ActionId> unpopular;  // least popular first
};

/// {"restrictions":[{"id":..., "kind":"unconstrained"|"at_least"|"exactly"|"table", "loosers":[...], ...}]}
/// Builder entries carry "level", "ban" (none|least1|least2) and optionally
/// "fallback" (strict|nearest). Table entries carry "masks", either an array
/// indexed by state or an object keyed by state index. The result is
/// verified before it is returned.
RestrictionSet restriction_set_from_json(const std::string& text, const RestrictionContext& ctx);
RestrictionSet load_restriction_set(const std::filesystem::path& path, const RestrictionContext& ctx);
/// Explicit mask tables for every member.
std::string restriction_set_to_json(const RestrictionSet& set);

/// Parses the document without verifying declared relations.
RestrictionSet restriction_set_from_json_unverified(const std::string& text, const RestrictionContext& ctx);

}  // namespace csrl
