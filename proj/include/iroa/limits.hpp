#pragma once

namespace iroa {

// Work caps and execution knobs shared by the enumeration kernels. Explicit
// errors on exceedance beat silent truncation; sampled-mode results carry an
// explicit flag instead of posing as exhaustive.
struct Limits {
    unsigned long long enumeration = 1ull << 24;  // codeword / message enumeration
    unsigned long long subsets = 1'000'000;       // column-subset scans
    unsigned long long pairs = 100'000'000;       // pairwise distance scans
    unsigned long long space = 1ull << 24;        // ambient-space scans
    unsigned long long search = 1ull << 24;       // multiplier-vector search
    unsigned long long samples = 1000;            // subsets drawn in sampled mode
    unsigned long long seed = 0;                  // sampled-mode RNG seed
    int threads = 1;                              // worker threads; never affects results
};

}  // namespace iroa
