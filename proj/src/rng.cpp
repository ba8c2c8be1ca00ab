#include "minifab/rng.hpp"

namespace minifab {

std::uint64_t derive_component_seed(std::uint64_t master_seed, std::string_view component_path) {
    // FNV-1a over the path, then one SplitMix64 finalizer round to mix
    // in the master seed.
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : component_path) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::uint64_t z = h ^ (master_seed + 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace minifab
