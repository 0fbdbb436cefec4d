#pragma once

#include "hilbkit/ideal.hpp"

#include <vector>

namespace hilbkit {

/// Generating set of the first syzygy module of an ordered generator list.
/// Each vector s has one entry per generator and satisfies sum s_i g_i = 0.
struct SyzygyGenerators {
    std::vector<std::vector<Polynomial>> vectors;
};

/// Monomial generators get the pairwise lcm syzygies. Other generators get
/// the syzygies recorded while running Buchberger's algorithm (every S-pair
/// reduction is a relation among basis elements) pulled back to the input.
SyzygyGenerators syzygy_generators(const std::vector<Polynomial>& gens,
                                   const MonomialOrder& ord = MonomialOrder::degrevlex());
SyzygyGenerators syzygy_generators(const Ideal& ideal, const MonomialOrder& ord = MonomialOrder::degrevlex());

/// Pairwise lcm syzygies of monomial generators.
SyzygyGenerators taylor_syzygies(const std::vector<Polynomial>& monomial_gens);

/// True when sum s_i g_i = 0 exactly.
bool is_syzygy(const std::vector<Polynomial>& s, const std::vector<Polynomial>& gens);

}  // namespace hilbkit
