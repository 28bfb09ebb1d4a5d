#include "majority/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "majority/exact.hpp"
#include "majority/fraction.hpp"
#include "majority/generators.hpp"
#include "majority/rng.hpp"
#include "majority/stable_sets.hpp"

namespace majority {

namespace {

struct Named {
    const char* name;
    int value;
};

constexpr Named kFamilies[] = {
    {"random", static_cast<int>(Family::random)},
    {"out-regular", static_cast<int>(Family::out_regular)},
    {"tournament", static_cast<int>(Family::tournament)},
    {"cycle-power", static_cast<int>(Family::cycle_power)},
    {"blowup", static_cast<int>(Family::blowup)},
};

constexpr Named kAlgorithms[] = {
    {"product", static_cast<int>(Algorithm::product)},
    {"seymour", static_cast<int>(Algorithm::seymour)},
    {"random-retry", static_cast<int>(Algorithm::random_retry)},
    {"lll", static_cast<int>(Algorithm::lll)},
    {"stable-third", static_cast<int>(Algorithm::stable_third)},
    {"exact-min", static_cast<int>(Algorithm::exact_min)},
    {"fractional", static_cast<int>(Algorithm::fractional)},
    {"eulerian", static_cast<int>(Algorithm::eulerian)},
};

template <std::size_t N>
int lookup(const Named (&table)[N], const std::string& name, const char* what) {
    for (const auto& entry : table)
        if (name == entry.name)
            return entry.value;
    throw std::invalid_argument(std::string("unknown ") + what + " '" + name + "'");
}

template <std::size_t N>
const char* reverse_lookup(const Named (&table)[N], int value) {
    for (const auto& entry : table)
        if (entry.value == value)
            return entry.name;
    return "?";
}

void run_trial(const ExperimentConfig& cfg, const Digraph& g, std::uint64_t seed, ExperimentRecord& rec) {
    const std::uint64_t alg_seed = mix_seed(seed, "algorithm");
    switch (cfg.algorithm) {
        case Algorithm::product: {
            const Colouring c = majority_product_colouring(g, cfg.k);
            const auto report = verify_majority(g, c, {cfg.k * cfg.k, Fraction(1, cfg.k)});
            rec.success = report.valid;
            rec.violations = report.violations.size();
            rec.colours_used = c.colours_used();
            break;
        }
        case Algorithm::seymour: {
            const Colouring c = seymour_3colouring(g);
            rec.success = verify_differing_out_neighbour(g, c);
            rec.colours_used = c.colours_used();
            break;
        }
        case Algorithm::random_retry: {
            const RetryResult r = random_3colouring_retry(g, cfg.tries, alg_seed);
            rec.success = r.success;
            rec.iterations = r.tries_used;
            rec.violations = r.report.violations.size();
            rec.colours_used = r.colouring.colours_used();
            break;
        }
        case Algorithm::lll: {
            const ResampleResult r = lll_resample_3colouring(g, cfg.budget, alg_seed);
            const auto report = verify_majority(g, r.colouring, {3, Fraction(1, 2)});
            rec.success = r.log.success && report.valid;
            rec.iterations = r.log.rounds;
            rec.violations = report.violations.size();
            rec.colours_used = r.colouring.colours_used();
            break;
        }
        case Algorithm::stable_third: {
            const StableThirdResult r = stable_third(g, cfg.tries, alg_seed);
            rec.success = r.result.success && verify_stable(g, r.result.t, Fraction(1, 2)).valid;
            rec.iterations = r.result.tries_used;
            rec.value = std::to_string(r.result.t.size());
            break;
        }
        case Algorithm::exact_min: {
            const MinColoursResult r = min_majority_colours(g, 4, Fraction(1, 2), cfg.budget);
            rec.success = r.answer == Answer::yes;
            rec.iterations = r.nodes;
            if (rec.success) {
                rec.colours_used = r.colours;
                rec.value = std::to_string(r.colours);
            } else {
                rec.value = to_string(r.answer);
            }
            break;
        }
        case Algorithm::fractional: {
            const FractionalSolution s = fractional_majority_number(g);
            rec.success = true;
            rec.value = to_fraction_string(s.objective);
            break;
        }
        case Algorithm::eulerian: {
            const Colouring c = eulerian_colouring(g, cfg.k, alg_seed);
            rec.success = cfg.k == 4 ? verify_majority(g, c, {4, Fraction(1, 2)}).valid
                                     : verify_in_out_fraction(g, c, Fraction(2, 3));
            rec.colours_used = c.colours_used();
            break;
        }
    }
}

}  // namespace

Family parse_family(const std::string& name) { return static_cast<Family>(lookup(kFamilies, name, "family")); }
Algorithm parse_algorithm(const std::string& name) {
    return static_cast<Algorithm>(lookup(kAlgorithms, name, "algorithm"));
}
const char* to_string(Family f) { return reverse_lookup(kFamilies, static_cast<int>(f)); }
const char* to_string(Algorithm a) { return reverse_lookup(kAlgorithms, static_cast<int>(a)); }

void ExperimentConfig::validate() const {
    if (trials < 1)
        throw std::invalid_argument("trials must be at least 1");
    if (jobs < 1)
        throw std::invalid_argument("jobs must be at least 1");
    if (k < 1)
        throw std::invalid_argument("k must be at least 1");
}

std::uint64_t trial_seed(std::uint64_t master, std::size_t index) { return mix_seed(master, "trial", index); }

Digraph make_instance(const ExperimentConfig& cfg, std::uint64_t seed) {
    std::size_t n = cfg.n;
    if (cfg.n_max > cfg.n) {
        Rng rng(mix_seed(seed, "size"));
        n += rng.below(cfg.n_max - cfg.n + 1);
    }
    const std::uint64_t graph_seed = mix_seed(seed, "instance");
    switch (cfg.family) {
        case Family::random: return gen_random_digraph(n, cfg.arc_prob, graph_seed);
        case Family::out_regular: return gen_random_out_regular(n, cfg.degree, graph_seed);
        case Family::tournament: return gen_tournament(n, graph_seed);
        case Family::cycle_power: return gen_cycle_power(n, cfg.degree);
        case Family::blowup: return gen_subset_blowup(gen_cycle_power(n, cfg.degree), cfg.degree);
    }
    throw std::invalid_argument("unknown family");
}

ExperimentOutcome run_experiment(const ExperimentConfig& config) {
    config.validate();
    ExperimentOutcome outcome;
    outcome.config = config;
    outcome.records.resize(config.trials);

    const auto trials = static_cast<std::int64_t>(config.trials);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(config.jobs))
    for (std::int64_t i = 0; i < trials; ++i) {
        ExperimentRecord& rec = outcome.records[static_cast<std::size_t>(i)];
        rec.trial = static_cast<std::size_t>(i);
        rec.seed = trial_seed(config.seed, rec.trial);
        const auto start = std::chrono::steady_clock::now();
        try {
            const Digraph g = make_instance(config, rec.seed);
            rec.n = g.n();
            rec.m = g.m();
            rec.delta = g.min_out_degree();
            rec.max_in = g.max_in_degree();
            run_trial(config, g, rec.seed, rec);
        } catch (const std::exception& e) {
            rec.success = false;
            rec.error = e.what();
        }
        rec.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    ExperimentSummary& s = outcome.summary;
    s.trials = config.trials;
    for (const auto& rec : outcome.records) {
        s.successes += rec.success;
        s.errors += !rec.error.empty();
        s.max_colours_used = std::max(s.max_colours_used, rec.colours_used);
        if (config.algorithm == Algorithm::fractional && rec.error.empty()) {
            mpq_class value(rec.value);
            value.canonicalize();
            if (!s.max_fractional || value > *s.max_fractional)
                s.max_fractional = value;
        }
    }
    s.success_rate = static_cast<double>(s.successes) / static_cast<double>(s.trials);
    return outcome;
}

namespace {

nlohmann::ordered_json record_json(const ExperimentRecord& r, bool timing) {
    nlohmann::ordered_json j;
    j["trial"] = r.trial;
    j["seed"] = r.seed;
    j["n"] = r.n;
    j["m"] = r.m;
    j["delta"] = r.delta;
    j["max_in"] = r.max_in;
    j["success"] = r.success;
    j["colours_used"] = r.colours_used;
    j["iterations"] = r.iterations;
    j["violations"] = r.violations;
    j["value"] = r.value;
    j["error"] = r.error;
    if (timing)
        j["wall_ms"] = r.wall_ms;
    return j;
}

}  // namespace

std::string to_json(const ExperimentOutcome& o) {
    nlohmann::ordered_json j;
    j["config"] = {{"family", to_string(o.config.family)},
                   {"algorithm", to_string(o.config.algorithm)},
                   {"n", o.config.n},
                   {"n_max", o.config.n_max},
                   {"arc_prob", o.config.arc_prob},
                   {"degree", o.config.degree},
                   {"k", o.config.k},
                   {"trials", o.config.trials},
                   {"seed", o.config.seed}};
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : o.records)
        j["records"].push_back(record_json(r, o.config.timing));
    nlohmann::ordered_json summary;
    summary["trials"] = o.summary.trials;
    summary["successes"] = o.summary.successes;
    summary["errors"] = o.summary.errors;
    summary["success_rate"] = o.summary.success_rate;
    summary["max_colours_used"] = o.summary.max_colours_used;
    summary["max_fractional"] = o.summary.max_fractional ? to_fraction_string(*o.summary.max_fractional) : "";
    j["summary"] = summary;
    return j.dump(2) + "\n";
}

std::string to_csv(const ExperimentOutcome& o) {
    std::ostringstream out;
    out << "trial,seed,n,m,delta,max_in,success,colours_used,iterations,violations,value,error";
    if (o.config.timing)
        out << ",wall_ms";
    out << '\n';
    for (const auto& r : o.records) {
        std::string error = r.error;
        for (char& ch : error)
            if (ch == ',' || ch == '\n' || ch == '"')
                ch = ' ';
        out << r.trial << ',' << r.seed << ',' << r.n << ',' << r.m << ',' << r.delta << ',' << r.max_in << ','
            << (r.success ? "true" : "false") << ',' << r.colours_used << ',' << r.iterations << ','
            << r.violations << ',' << r.value << ',' << error;
        if (o.config.timing)
            out << ',' << r.wall_ms;
        out << '\n';
    }
    out << "# summary trials=" << o.summary.trials << " successes=" << o.summary.successes
        << " errors=" << o.summary.errors << " success_rate=" << o.summary.success_rate
        << " max_colours_used=" << o.summary.max_colours_used;
    if (o.summary.max_fractional)
        out << " max_fractional=" << to_fraction_string(*o.summary.max_fractional);
    out << '\n';
    return out.str();
}

}  // namespace majority
