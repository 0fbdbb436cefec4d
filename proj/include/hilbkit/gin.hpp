#pragma once

#include "hilbkit/ideal.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hilbkit {

struct GinOptions {
    int initial_bound = 10;  // entries of the random change lie in [-B, B]
    int escalations = 4;     // times B may double after a rejection
    int hf_check_degree = 8;
};

struct GinResult {
    Ideal gin;
    int trials = 0;  // 0 when the value came from the ideal's cache
    int coefficient_bound = 0;
    std::vector<std::uint64_t> seeds;  // one per trial
};

/// Degrevlex initial ideal of g(I) for random integer g. A result is accepted
/// once two trials agree (a third breaks a tie), it is strongly stable and it
/// has the Hilbert function of I up to hf_check_degree. Throws CheckFailure
/// when every escalation is rejected.
GinResult generic_initial_ideal(const Ideal& ideal, std::mt19937_64& rng, const GinOptions& opts = {});

/// I == I : (x,y,z,t)^∞. Strongly stable ideals are saturated iff no
/// minimal generator involves the last variable.
bool is_saturated(const Ideal& ideal);

}  // namespace hilbkit
