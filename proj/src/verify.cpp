#include "tempotw/verify.hpp"

#include "tempotw/decomposition.hpp"
#include "tempotw/error.hpp"
#include "tempotw/generators.hpp"
#include "tempotw/structures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace tempotw {

namespace {

constexpr std::uint64_t verify_stream = 0x766572696679ULL;

BoundCheck check(std::string measure, double value, double bound) {
    return {std::move(measure), value, bound, value <= bound};
}

struct KtreeInstance {
    std::size_t n;
    unsigned k;
    Time times;
    DynamicGraph g;
    SnapshotDecompositions witnesses;
};

KtreeInstance ktree_instance(std::uint64_t seed, std::size_t max_n, Time max_times) {
    Rng rng(seed, 1);
    const unsigned k = 1 + static_cast<unsigned>(rng.below(3));
    const std::size_t n = k + 1 + rng.below(max_n - k);
    const Time times = 1 + static_cast<Time>(rng.below(max_times));
    KtreeOptions options;
    options.vertex_death = 0.15;
    auto [g, witnesses] = gen_snapshot_ktree(n, times, k, seed, options);
    return {n, k, times, std::move(g), std::move(witnesses)};
}

double violations(const StaticGraph& g, const TreeDecomposition& d) {
    return static_cast<double>(check_decomposition(g, d).size());
}

TrialReport construction_trial(std::uint64_t seed, TimeEncoding encoding) {
    auto inst = ktree_instance(seed, 10, 5);
    TrialReport row;
    row.seed = seed;
    row.n = inst.n;
    row.k = inst.k;
    row.times = inst.times;
    const StaticGraph gg = gaifman(translate_tw(inst.g, encoding));
    const TreeDecomposition d = encoding == TimeEncoding::clique
                                    ? build_clique_time_decomposition(inst.g, inst.witnesses)
                                    : build_linear_time_decomposition(inst.g, inst.witnesses);
    const double bound = encoding == TimeEncoding::clique
                             ? std::max<double>(inst.k + 1, static_cast<double>(inst.times) - 1)
                             : inst.k + 1;
    row.checks.push_back(check("violations", violations(gg, d), 0));
    row.checks.push_back(check("constructed_width", width(d), bound));
    return row;
}

TrialReport ltw_trial(std::uint64_t seed) {
    auto inst = ktree_instance(seed, 8, 4);
    const unsigned radius = 1 + static_cast<unsigned>(Rng(seed, 2).below(2));
    TrialReport row;
    row.seed = seed;
    row.n = inst.n;
    row.k = inst.k;
    row.times = inst.times;
    int snapshot_ltw = -1;
    for (Time t : inst.g.time().times) snapshot_ltw = std::max(snapshot_ltw, local_treewidth(snapshot(inst.g, t), radius));
    const double clique_bound = std::max<double>(snapshot_ltw, static_cast<double>(inst.times) - 1);
    const double linear_bound = std::max<double>(snapshot_ltw, 1);
    const int clique = local_treewidth(gaifman(translate_ltw(inst.g, TimeEncoding::clique)), radius);
    const int linear = local_treewidth(gaifman(translate_ltw(inst.g, TimeEncoding::linear)), radius);
    row.checks.push_back(check("ltw_clique_r" + std::to_string(radius), clique, clique_bound));
    row.checks.push_back(check("ltw_linear_r" + std::to_string(radius), linear, linear_bound));
    return row;
}

TrialReport markov_trial(std::uint64_t seed, unsigned index) {
    static constexpr std::pair<double, double> constants[] = {{2, 1}, {1, 1}, {3, 2}};
    const auto [c1, c2] = constants[index % 3];
    MarkovParams params;
    params.n = 50;
    params.tmax = 100;
    params.c1 = c1;
    params.c2 = c2;
    params.seed = seed;
    const auto rows = degree_stats(gen_edge_markovian(params));
    std::vector<double> means;
    for (const auto& r : rows)
        if (r.t >= 2) means.push_back(r.mean_degree);
    double mean = 0;
    for (double m : means) mean += m;
    mean /= static_cast<double>(means.size());
    double var = 0;
    for (double m : means) var += (m - mean) * (m - mean);
    var /= static_cast<double>(means.size() - 1);
    const double se = std::sqrt(var / static_cast<double>(means.size()));
    TrialReport row;
    row.seed = seed;
    row.n = params.n;
    row.k = static_cast<unsigned>(c1 + c2);
    row.times = params.tmax;
    row.checks.push_back(check("mean_degree", mean, c1 + c2 + 4 * se));
    return row;
}

}  // namespace

Theorem parse_theorem(const std::string& name) {
    if (name == "tw-bound") return Theorem::tw_bound;
    if (name == "ltw-bound") return Theorem::ltw_bound;
    if (name == "linear-bound") return Theorem::linear_bound;
    if (name == "markov-degree") return Theorem::markov_degree;
    throw Error(ErrorKind::invalid_argument, "unknown theorem '" + name + "'");
}

std::string theorem_name(Theorem t) {
    switch (t) {
        case Theorem::tw_bound: return "tw-bound";
        case Theorem::ltw_bound: return "ltw-bound";
        case Theorem::linear_bound: return "linear-bound";
        case Theorem::markov_degree: return "markov-degree";
    }
    return "?";
}

bool TrialReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const BoundCheck& c) { return c.ok; });
}

bool VerifyReport::ok() const {
    return std::all_of(trials.begin(), trials.end(), [](const TrialReport& t) { return t.ok(); });
}

std::uint64_t trial_seed(std::uint64_t master, Theorem theorem, unsigned index) {
    return mix_key(master, verify_stream + static_cast<std::uint64_t>(theorem), index, 0);
}

VerifyReport verify(Theorem theorem, unsigned trials, std::uint64_t master_seed) {
    VerifyReport report;
    report.theorem = theorem;
    for (unsigned i = 0; i < trials; ++i) {
        const std::uint64_t seed = trial_seed(master_seed, theorem, i);
        TrialReport row;
        switch (theorem) {
            case Theorem::tw_bound: row = construction_trial(seed, TimeEncoding::clique); break;
            case Theorem::linear_bound: row = construction_trial(seed, TimeEncoding::linear); break;
            case Theorem::ltw_bound: row = ltw_trial(seed); break;
            case Theorem::markov_degree: row = markov_trial(seed, i); break;
        }
        row.index = i;
        report.trials.push_back(std::move(row));
    }
    return report;
}

std::string format_verify_report(const VerifyReport& report) {
    std::ostringstream out;
    out << "trial,seed,n,k,times,measure,value,bound,ok\n";
    for (const auto& t : report.trials) {
        for (const auto& c : t.checks) {
            out << t.index << ',' << t.seed << ',' << t.n << ',' << t.k << ',' << t.times << ',' << c.measure << ','
                << c.value << ',' << c.bound << ',' << (c.ok ? "yes" : "no") << '\n';
        }
    }
    out << "RESULT " << (report.ok() ? "pass" : "fail") << '\n';
    return out.str();
}

}  // namespace tempotw
