#include "itc/noise.hpp"

#include <stdexcept>

namespace itc {

void NoiseModel::validate() const {
    if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("noise: p must lie in [0, 1]");
    if (!(q >= 0.0 && q <= 1.0)) throw std::invalid_argument("noise: q must lie in [0, 1]");
}

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

Substream::Substream(std::uint64_t seed, std::uint64_t trial, std::uint64_t round, Sector sector) {
    std::uint64_t k = mix64(seed);
    k = mix64(k ^ trial);
    k = mix64(k ^ (round * 0x100000001b3ULL));
    k = mix64(k ^ (sector == Sector::Z ? 0x5a5aULL : 0xa5a5ULL));
    state_ = k;
}

std::uint64_t Substream::next() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

std::pair<BitVector, BitVector> sample(const NoiseModel& model, const SyndromeMaps& maps, std::uint64_t trial,
                                       std::uint64_t round) {
    model.validate();
    Substream rng(model.seed, trial, round, maps.sector);
    BitVector eps(maps.dim_Q()), mu(maps.dim_M());
    for (std::size_t i = 0; i < eps.size(); ++i)
        if (rng.bernoulli(model.p)) eps.set(i);
    for (std::size_t i = 0; i < mu.size(); ++i) {
        // Draw for every coordinate so the flag does not shift the stream.
        const bool flip = rng.bernoulli(model.q);
        if (flip && (model.boundary_measurement_noise || !maps.measurements[i].redundancy)) mu.set(i);
    }
    return {std::move(eps), std::move(mu)};
}

}  // namespace itc
