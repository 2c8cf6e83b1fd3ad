#pragma once

#include <cstdint>

namespace specpos {

/// Deterministic 64-bit generator (splitmix64). Every randomized routine in
/// the library takes one of these so that runs are reproducible bit-for-bit
/// from the seed alone; we never touch <random> distributions, whose output
/// is implementation-defined.
///
/// Instances are single-owner. Parallel work derives one child per task via
/// split(), which mixes the task index into the current state without
/// advancing the parent.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) by rejection; bound must be nonzero.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t limit = bound * (~std::uint64_t{0} / bound);
        std::uint64_t x = next_u64();
        while (x >= limit) x = next_u64();
        return x % bound;
    }

    /// Child generator for task `index`; deterministic, parent untouched.
    SeededRng split(std::uint64_t index) const {
        SeededRng probe(state_ ^ (0xd1342543de82ef95ULL * (index + 1)));
        probe.next_u64();
        return probe;
    }

  private:
    std::uint64_t state_;
};

}  // namespace specpos
