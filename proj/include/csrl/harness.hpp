#pragma once

// Experiment orchestration: config parsing, seeded runs across a worker
// pool, records.csv / summary.json emission, metrics and sweeps.

#include "csrl/core.hpp"
#include "csrl/environment.hpp"
#include "csrl/meta.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace csrl {

std::string library_version();

// ---------------------------------------------------------------------------
// Config
// ---------------------------------------------------------------------------

struct EnvSpec {
    std::string kind = "recsys";  // recsys | chain | random | bandit
    std::optional<std::filesystem::path> params_path;
    std::uint64_t params_seed = 0;
    std::size_t horizon = 0;  // 0 = environment default
    std::size_t chain_length = 5;
    double slip = 0.1;
    std::uint64_t mdp_seed = 0;
    std::size_t num_states = 4;
    std::size_t num_actions = 2;
    double reward_scale = 1.0;
};

struct LearnerSpec {
    std::string kind = "ucrl";  // ucrl | qlearn | mock
    // ucrl
    std::size_t planning_horizon = 0;  // 0 = environment horizon
    double r_max = 1.0;
    double delta_conf = 0.05;
    double width_scale = 1.0;
    bool structured_support = true;
    // qlearn
    double alpha = 0.1;
    double gamma = 1.0;
    double epsilon0 = 1.0;
    double epsilon_decay = 0.999;
    double epsilon_decay_unconstrained = 0.99999;
    double epsilon_min = 0.01;
    bool signed_change = false;
    // mock
    std::map<std::string, double> means;
    double sigma = 0.05;
};

struct ExperimentConfig {
    nlohmann::json raw;  // the document as given, for hashing
    std::filesystem::path base_dir;
    EnvSpec env;
    nlohmann::json restrictions;  // {"builtin":"recsys"} | {"file":...} | {"restrictions":[...]}
    std::string algorithm = "csrl";  // csrl | ssbas | fixed:<id> | unconstrained
    MetaConfig meta;
    LearnerSpec learner;
    std::size_t episodes = 1000;
    std::vector<std::uint64_t> seeds;
    std::filesystem::path output;
    std::size_t smoothing_window = 100;
    std::vector<double> fractions{0.9, 0.97};
    std::optional<std::vector<std::string>> optimal_ids;  // nullopt = derive
    double optimal_tolerance = 1e-6;
};

/// Throws ConfigError naming the offending key.
ExperimentConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = ".");
ExperimentConfig load_config(const std::filesystem::path& path);

/// Sets a config value by dotted path in the raw document and reparses.
ExperimentConfig with_override(const ExperimentConfig& config, const std::string& dotted_key,
                               const nlohmann::json& value);

/// Seeds 0..n-1.
std::vector<std::uint64_t> seed_range(std::size_t n);

// ---------------------------------------------------------------------------
// Prepared experiments
// ---------------------------------------------------------------------------

/// Everything derived from a config before any seed runs.
struct Experiment {
    ExperimentConfig config;
    std::shared_ptr<const Environment> env;
    std::shared_ptr<const RestrictionSet> set;
    /// Members the learners run under (the whole set, or one for fixed runs).
    std::vector<std::size_t> members;
    std::vector<ActionId> least_popular;
    std::vector<std::string> optimal_ids;
    /// Exact optimal value per restriction when the environment is tabular.
    std::map<std::string, double> restriction_values;
};

Experiment prepare(const ExperimentConfig& config);
std::shared_ptr<const Environment> make_env(const EnvSpec& spec);
/// Builds the configured restriction set without verifying it and reports
/// every declared relation the brute-force order contradicts.
OrderReport verify_config_order(const ExperimentConfig& config);

struct SeedRun {
    std::uint64_t seed = 0;
    std::vector<SelectionRecord> records;
};

/// Learner ids in pool order.
std::vector<std::string> learner_ids(const Experiment& exp);
SeedRun run_seed(const Experiment& exp, std::uint64_t seed, const EpisodeObserver& observer = {});

// ---------------------------------------------------------------------------
// Records and metrics
// ---------------------------------------------------------------------------

struct RecordRow {
    std::uint64_t seed = 0;
    std::size_t episode = 0;
    std::string learner_id;
    double raw_return = 0.0;
    double norm_return = 0.0;
    double delta = 0.0;
    std::string active_set;  // ids joined by ';'
    std::string eliminated;
};

std::vector<RecordRow> to_rows(const Experiment& exp, const std::vector<SeedRun>& runs);
std::string rows_to_csv(const std::vector<RecordRow>& rows);
std::vector<RecordRow> rows_from_csv(const std::string& text);  // throws LoadError

/// Per-seed series ordered by seed then episode. Every seed must cover the
/// same episodes.
struct RunTable {
    std::vector<std::uint64_t> seeds;
    std::vector<std::vector<double>> returns;
    std::vector<std::vector<std::string>> chosen;
    std::vector<std::vector<std::pair<std::size_t, std::string>>> eliminations;
};
RunTable tabulate(const std::vector<RecordRow>& rows);

struct CurveSummary {
    std::vector<double> mean;
    std::vector<double> ci_halfwidth;  // empty below two seeds
};
/// 1.96 * sample SD / sqrt(seeds) per episode.
CurveSummary aggregate(const std::vector<std::vector<double>>& per_seed);

/// Trailing W-episode means; entry i averages episodes i-W+1 .. i and exists
/// for i >= W-1 (earlier entries are NaN).
std::vector<double> moving_average(const std::vector<double>& series, std::size_t window);

/// First 1-based episode at which the W-smoothed curve reaches f times its
/// own maximum; nullopt if never.
std::optional<std::size_t> sample_complexity(const std::vector<double>& mean_curve, double fraction,
                                             std::size_t window);

/// Per episode, the fraction of the trailing W selections (fewer at the
/// start) that picked an optimal id, averaged over seeds.
std::vector<double> optimal_rate(const std::vector<std::vector<std::string>>& chosen,
                                 const std::vector<std::string>& optimal_ids, std::size_t window);

/// Summary document without the manifest.
nlohmann::json summarize(const RunTable& table, const std::vector<std::string>& optimal_ids, std::size_t window,
                         const std::vector<double>& fractions);

std::string fraction_key(double f);

struct SpeedupEstimate {
    double fraction = 0.0;
    std::optional<double> ratio;  // baseline episodes / these episodes
    double boot_mean = 0.0;
    double boot_sd = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    std::size_t valid_resamples = 0;
};

/// Ratio of episodes-to-fraction with a seed bootstrap.
SpeedupEstimate bootstrap_speedup(const RunTable& table, const RunTable& baseline, double fraction,
                                  std::size_t window, std::size_t resamples = 1000, std::uint64_t seed = 0);

// ---------------------------------------------------------------------------
// Runs
// ---------------------------------------------------------------------------

struct RunOutput {
    std::vector<SeedRun> runs;
    std::vector<RecordRow> rows;
    nlohmann::json summary;
};

/// Runs every seed (CSRL_THREADS workers) and, when the config names an
/// output directory, writes records.csv and summary.json there.
RunOutput run_experiment(const ExperimentConfig& config);

/// Runs the config once per value of meta.<param> into <output>/<param>=<value>/
/// and writes <output>/sweep.json. Returns the run directories.
std::vector<std::filesystem::path> run_sweep(const ExperimentConfig& config, const std::string& param,
                                             const std::vector<std::string>& values);

/// Recomputes the summary from <dir>/records.csv, taking optimal ids and the
/// window from <dir>/summary.json when present unless overridden.
nlohmann::json metrics_from_dir(const std::filesystem::path& dir, const std::vector<double>& fractions,
                                std::optional<std::size_t> window,
                                const std::optional<std::filesystem::path>& baseline = std::nullopt);

/// 64-bit FNV-1a, hex.
std::string fnv1a_hex(const std::string& text);

}  // namespace csrl
