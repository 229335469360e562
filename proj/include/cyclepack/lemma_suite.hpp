#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclepack/lemmas.hpp"

namespace cyclepack {

struct SuiteReport {
    long long instances = 0;
    long long witnesses = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

// Every family with up to max_total vertices split into cycles of order >= 3,
// every path-length vector, and every S, T with 3|S| > 2n and 3|T| > 2n:
// find_path_with_spare must return a witness and the witness must pass
// check_spare_witness.
SuiteReport check_spare_guarantee_exhaustive(std::size_t max_total);

// Every cycle order 6..max_n with p = n/3 and every S, T with |S| >= p+1 and
// |T| >= 2p+2: find_disjoint_st_paths must return arcs of at least p+1
// vertices passing check_st_paths.
SuiteReport check_st_guarantee_exhaustive(std::size_t max_n);

// Every cycle order 3..max_n and every S, T with 3|S| > n and 3|T| > n:
// find_short_crossing_path must return an arc passing check_crossing_witness.
SuiteReport check_crossing_guarantee_exhaustive(std::size_t max_n);

// Random trials on t cycles of order r: path lengths drawn from
// 1..ceil(r/3)-1 and S, T of the smallest size with 3|S| > r(2t-1):
// find_reroute_or_double must return a witness passing check_double_witness.
SuiteReport check_double_guarantee_random(std::size_t t, std::size_t r, int samples,
                                          std::uint64_t seed);

struct SharpnessInstance {
    std::size_t n = 0;
    VertexSet S;
    VertexSet T;

    bool operator==(const SharpnessInstance&) const = default;
};

// Scans every cycle order 3..max_n with |S| = |T| = floor(n/3), one below the
// crossing-path guarantee, and lists the instances where no witness exists
// (ascending n, then S and T in bitmask order).
std::vector<SharpnessInstance> crossing_no_witness_instances(std::size_t max_n);

}  // namespace cyclepack
