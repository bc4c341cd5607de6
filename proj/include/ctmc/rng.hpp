#pragma once

#include "ctmc/types.hpp"

#include <cstdint>
#include <random>

namespace ctmc {

/// Deterministic random source. Distributions are derived from raw
/// mt19937_64 output by hand so that a given seed produces the same stream
/// on every platform and standard library.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t bits() { return gen_(); }

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi], inclusive. Rejection sampling keeps the
    /// draw unbiased without implementation-defined shortcuts.
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
        std::uint64_t x;
        do {
            x = gen_();
        } while (x >= limit);
        return lo + static_cast<std::int64_t>(x % span);
    }

    /// Standard normal via Box-Muller.
    double normal() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u1 = 0.0;
        do {
            u1 = uniform();
        } while (u1 <= 0.0);
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double theta = 2.0 * M_PI * u2;
        spare_ = r * std::sin(theta);
        have_spare_ = true;
        return r * std::cos(theta);
    }

    Vector normal_vector(int n) {
        Vector v(n);
        for (int i = 0; i < n; ++i) v[i] = normal();
        return v;
    }

    Vector unit_vector(int n) {
        Vector v = normal_vector(n);
        const double norm = v.norm();
        return norm > 0 ? Vector(v / norm) : unit_vector(n);
    }

    /// Random probability vector with strictly positive entries.
    Vector probability_vector(int n) {
        Vector p(n);
        for (int i = 0; i < n; ++i) p[i] = uniform(0.05, 1.0);
        p /= p.sum();
        return p;
    }

  private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace ctmc
