#pragma once

#include <cstdint>

namespace mtx {

/// splitmix64: small deterministic generator so that seeded runs are
/// byte-identical across platforms (std::mt19937 distributions are not).
class Rng {
public:
    explicit Rng(uint64_t seed = 0x9e3779b97f4a7c15ull) : state_(seed) {}

    uint64_t next() {
        uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// uniform in [0, n)
    uint64_t below(uint64_t n) { return n ? next() % n : 0; }

    Rng fork() { return Rng(next() ^ 0xd1b54a32d192ed03ull); }

private:
    uint64_t state_;
};

} // namespace mtx
