#pragma once

#include <cstdint>
#include <utility>

#include "itc/syndrome.hpp"

namespace itc {

struct NoiseModel {
    double p = 0.0;  // qubit error probability per qubit per round
    double q = 0.0;  // measurement flip probability per measurement per round
    bool boundary_measurement_noise = true;
    std::uint64_t seed = 0;

    void validate() const;
};

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Counter-based substream: the state depends only on
/// (seed, trial, round, sector), never on execution order.
class Substream {
public:
    Substream(std::uint64_t seed, std::uint64_t trial, std::uint64_t round, Sector sector);
    std::uint64_t next();
    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    bool bernoulli(double p) { return uniform() < p; }

private:
    std::uint64_t state_;
};

/// (eps, mu) for one round of one trial.
std::pair<BitVector, BitVector> sample(const NoiseModel& model, const SyndromeMaps& maps, std::uint64_t trial,
                                       std::uint64_t round);

}  // namespace itc
