#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tempotw {

enum class ErrorKind {
    syntax,            // malformed text input
    invariant,         // input parsed but violates a data-model invariant
    invalid_argument,  // caller passed something outside an operation's precondition
    limit,             // exact computation refused (instance above the configured limit)
    unsupported,       // requested machinery not available for this input (e.g. linear time on a partial order)
    evaluation,        // formula refers to something the structure does not provide
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

/// Counter-based SplitMix64. Every random draw in the library is a pure
/// function of (seed, stream, a, b), so generation order never matters.
constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

constexpr std::uint64_t mix_key(std::uint64_t seed, std::uint64_t stream, std::uint64_t a, std::uint64_t b) noexcept {
    std::uint64_t h = splitmix64(seed);
    h = splitmix64(h ^ stream);
    h = splitmix64(h ^ a);
    return splitmix64(h ^ b);
}

/// Uniform double in [0,1) from the top 53 bits.
constexpr double to_unit(std::uint64_t bits) noexcept {
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

/// Small sequential generator for places where a counter key is awkward
/// (shuffles, random k-tree growth). Still seed-determined and portable.
class Rng {
public:
    explicit Rng(std::uint64_t seed, std::uint64_t stream = 0) : state_(mix_key(seed, stream, 0, 0)) {}

    std::uint64_t next() noexcept {
        state_ += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    double uniform() noexcept { return to_unit(next()); }

    bool bernoulli(double p) noexcept { return uniform() < p; }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) noexcept {
        if (bound <= 1) return 0;
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % bound;
    }

    template <typename Vec>
    void shuffle(Vec& v) noexcept {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            using std::swap;
            swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace tempotw
