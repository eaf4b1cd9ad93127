#pragma once

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace ramsey {

// Thrown when an operation would exceed its configured desk-scale guard.
class SizeLimitError : public std::runtime_error {
public:
    explicit SizeLimitError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown by analysis routines when the input data is insufficient.
class AnalysisError : public std::runtime_error {
public:
    explicit AnalysisError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on malformed experiment configuration; `path` names the offending key.
class ConfigError : public std::runtime_error {
public:
    ConfigError(const std::string& path, const std::string& what)
        : std::runtime_error("config error at " + path + ": " + what), path(path) {}
    std::string path;
};

// Exact binomial coefficient; throws on overflow of uint64.
inline std::uint64_t binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t acc = 1;
    for (long long i = 1; i <= k; ++i) {
        std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
        // acc * num / i is always integral at this point
        std::uint64_t g = std::gcd(num, static_cast<std::uint64_t>(i));
        num /= g;
        std::uint64_t d = static_cast<std::uint64_t>(i) / g;
        std::uint64_t a = acc / d;
        if (a > UINT64_MAX / num) throw std::overflow_error("binomial overflow");
        acc = a * num;
    }
    return acc;
}

inline double log_binomial(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return -std::numeric_limits<double>::infinity();
    return std::lgamma(double(n) + 1) - std::lgamma(double(k) + 1) - std::lgamma(double(n - k) + 1);
}

// Small exact fraction, always kept reduced with positive denominator.
struct Rat {
    long long num = 0;
    long long den = 1;

    Rat() = default;
    Rat(long long n, long long d) : num(n), den(d) { reduce(); }

    void reduce() {
        if (den == 0) throw std::invalid_argument("zero denominator");
        if (den < 0) { num = -num; den = -den; }
        long long g = std::gcd(num < 0 ? -num : num, den);
        if (g > 1) { num /= g; den /= g; }
    }
    double value() const { return double(num) / double(den); }
    bool operator==(const Rat& o) const { return num == o.num && den == o.den; }
};

// ceil with a small tolerance so that values representable exactly do not
// round up from floating noise (e.g. 8.0000000001 stays 8).
inline long long ceil_tol(double x) {
    return static_cast<long long>(std::ceil(x - 1e-9));
}

// splitmix64, used to derive independent per-trial seeds from a base seed.
inline std::uint64_t mix_seed(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t trial_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b, std::uint64_t salt = 0) {
    return mix_seed(base ^ mix_seed(a ^ mix_seed(b ^ mix_seed(salt))));
}

}  // namespace ramsey
