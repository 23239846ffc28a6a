#ifndef DOM_RNG_HPP
#define DOM_RNG_HPP

#include <cstdint>

#include "dom/rational.hpp"

namespace dom {

// The project PRNG is counter-based: every random decision is a pure
// function of (seed, counters), so identical arguments always reproduce
// identical outputs, independent of call order or thread scheduling.
// The scheme is frozen; see README.md ("Randomness") before changing it.

inline constexpr std::uint64_t kHashGamma = 0x9e3779b97f4a7c15ULL;

// Standard splitmix64 finalizer (Steele, Lea & Flood).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += kHashGamma;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t hash_combine64(std::uint64_t h, std::uint64_t v) {
    return splitmix64(h ^ (v + kHashGamma));
}

// Deterministic sub-stream seed, e.g. per-trial seeds from
// (master_seed, n, trial_index).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t a, std::uint64_t b) {
    return hash_combine64(hash_combine64(splitmix64(master), a), b);
}

// floor(p * 2^64) for exact-rational p in (0,1): a 64-bit draw below the
// threshold happens with probability within 2^-64 of p.
std::uint64_t bernoulli_threshold(const Rat& p);

}  // namespace dom

#endif
