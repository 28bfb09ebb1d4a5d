#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "majority/colouring.hpp"
#include "majority/digraph.hpp"

namespace majority {

enum class Family { random, out_regular, tournament, cycle_power, blowup };

enum class Algorithm { product, seymour, random_retry, lll, stable_third, exact_min, fractional, eulerian };

Family parse_family(const std::string& name);
Algorithm parse_algorithm(const std::string& name);
const char* to_string(Family f);
const char* to_string(Algorithm a);

/// One batch of independent trials.
///
/// Instance size is n, or uniform in [n, n_max] per trial when n_max > n.
/// `degree` is d for out-regular, the power k for cycle-power, and both
/// the base power and the subset size for blowup (base = cycle power).
struct ExperimentConfig {
    Family family = Family::random;
    std::size_t n = 10;
    std::size_t n_max = 0;
    double arc_prob = 0.1;
    std::size_t degree = 1;
    Algorithm algorithm = Algorithm::product;
    Colour k = 2;
    std::size_t trials = 1;
    std::uint64_t seed = 0;
    std::size_t jobs = 1;
    std::size_t tries = 100;
    std::uint64_t budget = 50'000'000;
    bool timing = false;  // include wall time (makes output run-dependent)

    /// Throws std::invalid_argument unless trials >= 1 and jobs >= 1.
    void validate() const;
};

struct ExperimentRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0, m = 0, delta = 0, max_in = 0;
    bool success = false;
    std::size_t colours_used = 0;
    std::uint64_t iterations = 0;  // tries, rounds or search nodes
    std::size_t violations = 0;
    std::string value;             // algorithm-specific: |T|, min k, fractional p/q
    std::string error;
    double wall_ms = 0.0;
};

struct ExperimentSummary {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::size_t errors = 0;
    double success_rate = 0.0;
    std::size_t max_colours_used = 0;
    std::optional<mpq_class> max_fractional;
};

struct ExperimentOutcome {
    ExperimentConfig config;
    std::vector<ExperimentRecord> records;  // in trial order
    ExperimentSummary summary;
};

/// Per-trial seed: mix_seed(master, "trial", index).
std::uint64_t trial_seed(std::uint64_t master, std::size_t index);

/// Builds the instance for one trial.
Digraph make_instance(const ExperimentConfig& config, std::uint64_t trial_seed);

/// Runs all trials on up to config.jobs threads. Output does not depend on
/// the thread count. A trial that throws is recorded with its error.
ExperimentOutcome run_experiment(const ExperimentConfig& config);

std::string to_json(const ExperimentOutcome& outcome);
std::string to_csv(const ExperimentOutcome& outcome);

}  // namespace majority
