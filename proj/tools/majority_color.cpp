// majority-color: generate digraphs, colour and verify them, run the exact
// solvers, extract stable sets and run seeded batch experiments.
//
// Exit status: 0 ok / yes, 1 invalid input, 2 verification failed or the
// answer is no, 3 budget or tries exhausted (answer unknown).

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "majority/colouring.hpp"
#include "majority/exact.hpp"
#include "majority/experiment.hpp"
#include "majority/generators.hpp"
#include "majority/io.hpp"
#include "majority/prob.hpp"
#include "majority/stable_sets.hpp"

using namespace majority;
using json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kNo = 2;
constexpr int kUnknown = 3;

struct Common {
    std::string input;
    std::string output;
    std::uint64_t seed = 0;
    std::string format = "text";
    Colour k = 0;
    std::string beta = "1/2";
    std::string algorithm;
    std::uint64_t budget = kDefaultNodeBudget;
    std::size_t trials = 0;
    std::size_t jobs = 1;
};

class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-")
        std::cout << text;
    else
        io::write_file(path, text);
}

Digraph load_digraph(const std::string& path) {
    if (path.empty())
        throw InputError("--input is required");
    return io::parse_digraph(io::read_file(path));
}

json violations_json(const Digraph& g, const VerificationReport& r) {
    json list = json::array();
    for (Vertex v : r.violations)
        list.push_back({{"vertex", v}, {"matches", r.same_colour_count[v]}, {"out_degree", g.out_degree(v)}});
    return list;
}

std::string render_report(const Common& opt, const Digraph& g, const VerificationReport& r, json extra = {}) {
    if (opt.format == "csv") {
        std::ostringstream out;
        out << "vertex,matches,out_degree\n";
        for (Vertex v : r.violations)
            out << v << ',' << r.same_colour_count[v] << ',' << g.out_degree(v) << '\n';
        return out.str();
    }
    if (opt.format == "json") {
        json j = extra.is_null() ? json::object() : extra;
        j["valid"] = r.valid;
        j["violations"] = violations_json(g, r);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    for (auto& [key, value] : extra.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
    out << (r.valid ? "valid" : "INVALID") << '\n';
    for (Vertex v : r.violations)
        out << "violation vertex=" << v << " matches=" << r.same_colour_count[v] << " out_degree=" << g.out_degree(v)
            << '\n';
    return out.str();
}

int cmd_gen(const Common& opt, const std::string& family, std::size_t n, double p, std::size_t d,
            std::size_t delta) {
    Digraph g;
    const Family f = parse_family(family);
    switch (f) {
        case Family::random: g = gen_random_digraph(n, p, opt.seed); break;
        case Family::out_regular: g = gen_random_out_regular(n, d, opt.seed); break;
        case Family::tournament: g = gen_tournament(n, opt.seed); break;
        case Family::cycle_power: g = gen_cycle_power(n, d); break;
        case Family::blowup: {
            const Digraph base = opt.input.empty() ? gen_cycle_power(n, d) : load_digraph(opt.input);
            g = gen_subset_blowup(base, delta);
            break;
        }
    }
    emit(opt.output, io::serialize_digraph(g));
    return kOk;
}

int cmd_colour(const Common& opt, const std::string& report_path, std::size_t tries) {
    const Digraph g = load_digraph(opt.input);
    const std::string alg = opt.algorithm.empty() ? "product" : opt.algorithm;
    std::optional<Colouring> c;
    json info;
    info["algorithm"] = alg;
    MajoritySpec spec{3, Fraction(1, 2)};
    bool extra_ok = true;

    if (alg == "product") {
        const Colour k = opt.k ? opt.k : 2;
        c = majority_product_colouring(g, k);
        spec = {k * k, Fraction(1, k)};
    } else if (alg == "seymour") {
        c = seymour_3colouring(g);
        extra_ok = verify_differing_out_neighbour(g, *c);
        spec = {3, Fraction(1, 1)};
        info["differing_out_neighbour"] = extra_ok;
    } else if (alg == "eulerian") {
        const Colour k = opt.k ? opt.k : 4;
        c = eulerian_colouring(g, k, opt.seed);
        if (k == 4) {
            spec = {4, Fraction(1, 2)};
        } else {
            spec = {3, Fraction(1, 1)};
            extra_ok = verify_in_out_fraction(g, *c, Fraction(2, 3));
            info["in_out_two_thirds"] = extra_ok;
        }
    } else if (alg == "random-retry") {
        const RetryResult r = random_3colouring_retry(g, tries ? tries : 100, opt.seed);
        info["tries"] = r.tries_used;
        if (!r.success) {
            info["success"] = false;
            std::cerr << "random-retry: no majority 3-colouring after " << r.tries_used << " tries\n";
            emit(report_path, render_report(opt, g, r.report, info));
            return kUnknown;
        }
        c = r.colouring;
    } else if (alg == "lll") {
        const ResampleResult r = lll_resample_3colouring(g, opt.budget, opt.seed);
        info["rounds"] = r.log.rounds;
        info["resampled_vertices"] = r.log.resampled_vertices;
        if (!r.log.success) {
            info["success"] = false;
            std::cerr << "lll: round budget exhausted after " << r.log.rounds << " rounds\n";
            emit(report_path, render_report(opt, g, verify_majority(g, r.colouring, spec), info));
            return kUnknown;
        }
        c = r.colouring;
    } else {
        throw InputError("unknown colouring algorithm '" + alg + "'");
    }

    const VerificationReport report = verify_majority(g, *c, spec);
    info["colours_used"] = c->colours_used();
    info["k"] = spec.k_colours;
    info["beta"] = spec.beta.str();
    const bool ok = report.valid && extra_ok;
    info["success"] = ok;
    if (ok && !opt.output.empty())
        io::write_file(opt.output, io::serialize_colouring(*c));
    emit(report_path, render_report(opt, g, report, info));
    return ok ? kOk : kNo;
}

int cmd_verify(const Common& opt, const std::string& colouring_path) {
    const Digraph g = load_digraph(opt.input);
    if (colouring_path.empty())
        throw InputError("--colouring is required");
    const Colouring c = io::parse_colouring(io::read_file(colouring_path));
    const MajoritySpec spec{opt.k ? opt.k : c.k, Fraction::parse(opt.beta)};
    const VerificationReport report = verify_majority(g, c, spec);
    emit(opt.output, render_report(opt, g, report));
    return report.valid ? kOk : kNo;
}

int answer_code(Answer a) {
    return a == Answer::yes ? kOk : a == Answer::no ? kNo : kUnknown;
}

std::string fractional_text(const Common& opt, const FractionalSolution& s) {
    if (opt.format == "json") {
        json j;
        j["objective"] = to_fraction_string(s.objective);
        j["weights"] = json::array();
        for (const auto& [set, w] : s.weights)
            j["weights"].push_back({{"set", set}, {"weight", to_fraction_string(w)}});
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    if (opt.format == "csv") {
        out << "set,weight\n";
        for (const auto& [set, w] : s.weights) {
            for (std::size_t i = 0; i < set.size(); ++i)
                out << (i ? " " : "") << set[i];
            out << ',' << to_fraction_string(w) << '\n';
        }
        out << "objective," << to_fraction_string(s.objective) << '\n';
        return out.str();
    }
    out << to_fraction_string(s.objective) << '\n';
    for (const auto& [set, w] : s.weights) {
        out << "  " << to_fraction_string(w) << " {";
        for (std::size_t i = 0; i < set.size(); ++i)
            out << (i ? " " : "") << set[i];
        out << "}\n";
    }
    return out.str();
}

int cmd_exact(const Common& opt, bool min_colours, bool exists, const std::string& lists_path, bool fractional) {
    const Digraph g = load_digraph(opt.input);
    const Fraction beta = Fraction::parse(opt.beta);
    const int modes = int(min_colours) + int(exists) + int(!lists_path.empty()) + int(fractional);
    if (modes != 1)
        throw InputError("choose exactly one of --min-colours, --exists, --choosable, --fractional");

    if (fractional) {
        emit(opt.output, fractional_text(opt, fractional_majority_number(g, beta)));
        return kOk;
    }
    if (min_colours) {
        const MinColoursResult r = min_majority_colours(g, opt.k ? opt.k : 4, beta, opt.budget);
        if (opt.format == "json") {
            json j{{"answer", to_string(r.answer)}, {"nodes", r.nodes}};
            if (r.answer == Answer::yes)
                j["min_colours"] = r.colours;
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << (r.answer == Answer::yes ? std::to_string(r.colours) : to_string(r.answer)) << '\n';
        }
        if (r.witness && !opt.output.empty())
            io::write_file(opt.output, io::serialize_colouring(*r.witness));
        return answer_code(r.answer);
    }

    ExactResult r;
    if (exists) {
        if (!opt.k)
            throw InputError("--exists needs --k");
        r = exists_beta_colouring(g, opt.k, beta, opt.budget);
    } else {
        r = choosability_check(g, io::parse_lists(io::read_file(lists_path)), beta, opt.budget);
    }
    if (opt.format == "json")
        std::cout << json{{"answer", to_string(r.answer)}, {"nodes", r.nodes}}.dump(2) << '\n';
    else
        std::cout << to_string(r.answer) << '\n';
    if (r.witness && !opt.output.empty())
        io::write_file(opt.output, io::serialize_colouring(*r.witness));
    return answer_code(r.answer);
}

int cmd_stable(const Common& opt, const std::string& mode, const std::string& alpha, const std::string& p,
               const std::string& set_path) {
    const Digraph g = load_digraph(opt.input);
    const Fraction beta = Fraction::parse(opt.beta);
    const std::size_t tries = opt.trials ? opt.trials : 50;

    if (mode == "enumerate") {
        std::ostringstream out;
        for (const auto& s : enumerate_stable_sets(g, beta)) {
            for (std::size_t i = 0; i < s.size(); ++i)
                out << (i ? " " : "") << s[i];
            out << '\n';
        }
        emit(opt.output, out.str());
        return kOk;
    }
    if (mode == "verify") {
        if (set_path.empty())
            throw InputError("--set is required for --mode verify");
        std::size_t n = 0;
        const VertexSet t = io::parse_stable_set(io::read_file(set_path), &n);
        if (n != g.n())
            throw InputError("stable set file is for a different vertex count");
        const StableCheck check = verify_stable(g, t, beta);
        std::cout << (check.valid ? "valid" : "INVALID") << '\n';
        for (Vertex v : check.violations)
            std::cout << "violation vertex=" << v << '\n';
        return check.valid ? kOk : kNo;
    }

    StableSetResult r;
    if (mode == "third") {
        const StableThirdResult t = stable_third(g, tries, opt.seed);
        if (!t.hypothesis_ok)
            std::cerr << "warning: minimum out-degree condition (>= 22) not met; no size guarantee\n";
        r = t.result;
    } else if (mode == "random") {
        const auto params = StableSetParams::make(Fraction::parse(alpha), Fraction::parse(p), beta);
        if (static_cast<std::int64_t>(g.min_out_degree()) < params.delta_required)
            std::cerr << "warning: minimum out-degree " << g.min_out_degree() << " below " << params.delta_required
                      << "; no size guarantee\n";
        r = random_stable_set(g, params, tries, opt.seed);
    } else {
        throw InputError("unknown stable mode '" + mode + "'");
    }

    if (!r.success) {
        std::cerr << "no stable set of size " << r.target << " after " << r.tries_used << " tries (best "
                  << r.t.size() << ")\n";
        return kUnknown;
    }
    if (!verify_stable(g, r.t, beta).valid)
        throw std::logic_error("sampled set failed verification");
    emit(opt.output, io::serialize_stable_set(g.n(), r.t));
    return kOk;
}

int cmd_tails(const Common& opt) {
    const auto rows = prob::indset_tail_verification();
    std::ostringstream out;
    prob::write_tail_csv(out, rows);
    emit(opt.output, out.str());
    for (const auto& row : rows)
        if (!row.pass)
            return kNo;
    return kOk;
}

int cmd_experiment(const Common& opt, ExperimentConfig cfg, const std::string& family) {
    cfg.family = parse_family(family);
    cfg.algorithm = parse_algorithm(opt.algorithm.empty() ? "product" : opt.algorithm);
    cfg.seed = opt.seed;
    cfg.trials = opt.trials ? opt.trials : 1;
    cfg.jobs = opt.jobs;
    cfg.budget = opt.budget;
    if (opt.k)
        cfg.k = opt.k;
    const ExperimentOutcome outcome = run_experiment(cfg);
    emit(opt.output, opt.format == "csv" ? to_csv(outcome) : to_json(outcome));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Majority colourings of digraphs"};
    app.name("majority-color");
    app.require_subcommand(1);

    Common opt;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "Input digraph file");
        sub->add_option("--output", opt.output, "Output file (default stdout)");
        sub->add_option("--seed", opt.seed, "RNG seed");
        sub->add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--k", opt.k, "Number of colours");
        sub->add_option("--beta", opt.beta, "Fraction NUM/DEN");
        sub->add_option("--algorithm", opt.algorithm, "Algorithm name");
        sub->add_option("--budget", opt.budget, "Search node / round budget");
        sub->add_option("--trials", opt.trials, "Trials or tries");
        sub->add_option("--jobs", opt.jobs, "Worker threads")->check(CLI::PositiveNumber);
    };

    std::string family = "random";
    std::size_t gen_n = 10, gen_d = 1, gen_delta = 1;
    double gen_p = 0.1;
    auto* gen = app.add_subcommand("gen", "Write a generated digraph");
    common(gen);
    gen->add_option("--family", family, "random | out-regular | tournament | cycle-power | blowup")->required();
    gen->add_option("--n", gen_n, "Vertex count");
    gen->add_option("--p", gen_p, "Arc probability (random)");
    gen->add_option("--d", gen_d, "Out-degree (out-regular) or power (cycle-power)");
    gen->add_option("--delta", gen_delta, "Subset size (blowup)");

    std::string report_path;
    std::size_t tries = 0;
    auto* colour = app.add_subcommand("colour", "Colour a digraph and verify the result");
    colour->alias("color");
    common(colour);
    colour->add_option("--report", report_path, "Verification report file (default stdout)");
    colour->add_option("--tries", tries, "Tries for random-retry");

    std::string colouring_path;
    auto* verify = app.add_subcommand("verify", "Verify a colouring; exit 0 iff valid");
    common(verify);
    verify->add_option("--colouring,--coloring", colouring_path, "Colouring file")->required();

    bool min_colours = false, exists = false, fractional = false;
    std::string lists_path;
    auto* exact = app.add_subcommand("exact", "Exact decision procedures");
    common(exact);
    exact->add_flag("--min-colours,--min-colors", min_colours, "Minimum number of colours");
    exact->add_flag("--exists", exists, "Does a (k, beta) colouring exist?");
    exact->add_option("--choosable", lists_path, "List assignment file");
    exact->add_flag("--fractional", fractional, "Fractional majority number");

    std::string stable_mode = "third", alpha = "1/3", sample_p = "19/50", set_path;
    auto* stable = app.add_subcommand("stable", "Stable-set extraction, enumeration or verification");
    common(stable);
    stable->add_option("--mode", stable_mode, "third | random | enumerate | verify");
    stable->add_option("--alpha", alpha, "Target fraction (random mode)");
    stable->add_option("--p", sample_p, "Sampling probability (random mode)");
    stable->add_option("--set", set_path, "Stable set file (verify mode)");

    auto* fractional_cmd = app.add_subcommand("fractional", "Fractional majority number (exact)");
    common(fractional_cmd);

    auto* tails = app.add_subcommand("tails", "Binomial tail table for d in [22, 128]");
    common(tails);

    ExperimentConfig cfg;
    std::string exp_family = "random";
    auto* experiment = app.add_subcommand("experiment", "Seeded batch experiment");
    common(experiment);
    experiment->add_option("--family", exp_family, "Instance family");
    experiment->add_option("--n", cfg.n, "Vertex count (minimum when --n-max is set)");
    experiment->add_option("--n-max", cfg.n_max, "Maximum vertex count");
    experiment->add_option("--p", cfg.arc_prob, "Arc probability");
    experiment->add_option("--d", cfg.degree, "Degree / power parameter");
    experiment->add_option("--tries", cfg.tries, "Tries for randomized algorithms");
    experiment->add_flag("--timing", cfg.timing, "Include wall time per trial");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (*gen)
            return cmd_gen(opt, family, gen_n, gen_p, gen_d, gen_delta);
        if (*colour)
            return cmd_colour(opt, report_path, tries);
        if (*verify)
            return cmd_verify(opt, colouring_path);
        if (*exact)
            return cmd_exact(opt, min_colours, exists, lists_path, fractional);
        if (*stable)
            return cmd_stable(opt, stable_mode, alpha, sample_p, set_path);
        if (*fractional_cmd) {
            emit(opt.output, fractional_text(opt, fractional_majority_number(load_digraph(opt.input),
                                                                             Fraction::parse(opt.beta))));
            return kOk;
        }
        if (*tails)
            return cmd_tails(opt);
        if (*experiment)
            return cmd_experiment(opt, cfg, exp_family);
    } catch (const std::logic_error& e) {
        if (dynamic_cast<const std::invalid_argument*>(&e) == nullptr) {
            std::cerr << "internal error: " << e.what() << '\n';
            return 4;
        }
        if (opt.format == "json")
            std::cerr << json{{"error", {{"code", kInvalid}, {"message", e.what()}}}}.dump() << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    } catch (const std::exception& e) {
        if (opt.format == "json")
            std::cerr << json{{"error", {{"code", kInvalid}, {"message", e.what()}}}}.dump() << '\n';
        else
            std::cerr << "error: " << e.what() << '\n';
        return kInvalid;
    }
    return kInvalid;
}
