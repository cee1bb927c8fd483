#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tempotw {

enum class Theorem { tw_bound, ltw_bound, linear_bound, markov_degree };

Theorem parse_theorem(const std::string& name);
std::string theorem_name(Theorem t);

/// One inequality checked in one trial: value <= bound.
struct BoundCheck {
    std::string measure;
    double value = 0;
    double bound = 0;
    bool ok = true;
};

struct TrialReport {
    unsigned index = 0;
    std::uint64_t seed = 0;
    std::size_t n = 0;
    unsigned k = 0;            // snapshot width parameter (k, or d for degree bounds; c1+c2 for markov)
    std::size_t times = 0;     // |T|
    std::vector<BoundCheck> checks;
    bool ok() const;
};

struct VerifyReport {
    Theorem theorem = Theorem::tw_bound;
    std::vector<TrialReport> trials;
    bool ok() const;
};

/// Per-trial seeds are mix_key(master, theorem, index, 0); trial i never
/// depends on trial j, so results are independent of how many run.
std::uint64_t trial_seed(std::uint64_t master, Theorem theorem, unsigned index);

/// Random instances per theorem:
///  tw-bound      partial k-trees (n <= 10, k in 1..3, |T| in 1..5): clique-time
///                construction is a valid decomposition of width <= max(k+1, |T|-1)
///  linear-bound  same family: linear-time construction valid, width <= k+1
///  ltw-bound     n <= 8, r in {1,2}: ltw of the clique/linear Gaifman graphs
///                against max(max_t ltw(G_t,r), |T|-1) and max(max_t ltw(G_t,r), 1)
///  markov-degree n=50, tmax=100, (c1,c2) cycling through (2,1),(1,1),(3,2):
///                mean degree over t >= 2 <= c1+c2 + 4 SE
VerifyReport verify(Theorem theorem, unsigned trials, std::uint64_t master_seed);

/// `trial,seed,n,k,times,measure,value,bound,ok` rows, then `RESULT pass|fail`.
std::string format_verify_report(const VerifyReport& report);

}  // namespace tempotw
