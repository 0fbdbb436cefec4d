#pragma once

#include "hilbkit/ideal.hpp"
#include "hilbkit/syzygy.hpp"

#include <optional>
#include <vector>

namespace hilbkit {

struct TangentReport {
    long dimension = 0;
    std::vector<int> generator_degrees;
    int truncation = 0;         // the degree d of I_{>=d}
    long unknowns = 0;
    long constraint_count = 0;  // nonzero rows of the constraint matrix
    bool warning = false;       // input not a saturated ideal with polynomial 4n
};

struct TangentOptions {
    /// Degree d of the truncation I_{>=d}; defaults to the regularity.
    std::optional<int> truncation;
};

/// Tangent space of the Hilbert scheme at I: dim Hom(I_{>=d}, P/I)_0 with d at
/// least the regularity. The maps are given by images of a basis of I_d in
/// (P/I)_d subject to the linear syzygies of that basis. Throws InvalidInput
/// for the zero ideal or a truncation below the generator degrees.
TangentReport tangent_dimension(const Ideal& ideal, const TangentOptions& opts = {});

/// dim Hom(I, P/I)_0 computed from explicit homogeneous generators of I and a
/// generating set of their syzygies (no truncation).
TangentReport hom_dimension(const Ideal& ideal, const std::vector<Polynomial>& gens,
                            const SyzygyGenerators& syzygies);

}  // namespace hilbkit
