#pragma once

#include "hilbkit/ideal.hpp"
#include "hilbkit/strata.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace hilbkit {

/// Index of the family parameter in the five-variable ring k[x,y,z,t,a].
inline constexpr std::size_t kParam = 4;

/// A one-parameter family of ideals in k[x,y,z,t]. Generators live in
/// k[x,y,z,t,a], are homogeneous in x,y,z,t, and are polynomial in a.
class ParamFamily {
public:
    ParamFamily() = default;
    /// Throws InvalidInput unless every generator has 5 variables and is
    /// homogeneous for the grading (1,1,1,1,0).
    ParamFamily(std::vector<Polynomial> generators, std::string description = {});
    /// The constant family of an ideal.
    static ParamFamily constant(const Ideal& ideal);

    const std::vector<Polynomial>& generators() const { return gens_; }
    const std::string& description() const { return description_; }

private:
    std::vector<Polynomial> gens_;
    std::string description_;
};

enum class LimitPoint { Zero, Infinity };

struct LimitOptions {
    std::uint64_t seed = 0x11a17u;  // parameter values of the flatness precheck
    int precheck_fibers = 3;
};

struct LimitResult {
    Ideal limit;        // saturated
    Ideal special;      // (family : a^∞) at a = 0, before the irrelevant saturation
    HilbertPolynomial generic_hp;
    std::vector<Scalar> checked_parameters;
};

/// Substitutes a = value. Throws InvalidInput when every generator vanishes.
Ideal specialize(const ParamFamily& family, const Scalar& value);

/// The Hilbert-scheme limit: saturate by a, set a = 0, saturate by the
/// irrelevant ideal. At infinity a is replaced by 1/b first. Throws
/// CheckFailure when sampled fibers disagree on the Hilbert polynomial or the
/// limit does not have the generic one.
LimitResult family_limit_report(const ParamFamily& family, LimitPoint at, const LimitOptions& opts = {});
Ideal family_limit(const ParamFamily& family, LimitPoint at, const LimitOptions& opts = {});

/// The family x_i -> a^{w_i} x_i applied to I. Throws InvalidInput when all
/// weights are equal.
ParamFamily weight_family(const Ideal& ideal, const std::vector<int>& w);

/// Limit of the torus orbit; the result is checked to be fixed by the torus.
LimitResult weight_limit_report(const Ideal& ideal, const std::vector<int>& w, LimitPoint at,
                                const LimitOptions& opts = {});
Ideal weight_limit(const Ideal& ideal, const std::vector<int>& w, LimitPoint at, const LimitOptions& opts = {});

// ---- the curve-specific degenerations ------------------------------------------

/// (l*l1 + a*q, l*l2 - a*p).
ParamFamily va_family(const Polynomial& ell, const Polynomial& ell1, const Polynomial& ell2, const Polynomial& p,
                      const Polynomial& q);

struct VADegeneration {
    Polynomial ell, ell1, ell2, p, q, F;  // F = l1*p + l2*q
    ParamFamily family;
    Ideal limit;
    std::vector<Scalar> ci_parameters;    // fibers checked to be complete intersections
};

/// Degenerates a family of complete intersections to an R3' ideal. Throws
/// InvalidInput unless I is classified R3', CheckFailure when the limit
/// differs from I or no complete-intersection fibers are found.
VADegeneration va_degeneration(const Ideal& ideal, std::uint64_t seed = 0x7a11u);

struct DegenerationStep {
    ParamFamily family;
    LimitPoint at = LimitPoint::Zero;
    Ideal start;       // the ideal the family was built from
    LimitResult result;
    StratumReport report;
};

struct DegenerationChain {
    int case_no = 1;
    bool alpha_zero = false;   // case 2 only
    Ideal normalized;          // the input in the working coordinates
    std::vector<DegenerationStep> steps;
    Ideal terminal;
};

/// Connects an R5 ideal to R6 by flat limits. Throws InvalidInput unless I is
/// classified R5, CheckFailure when a step misbehaves.
DegenerationChain rs_degeneration(const Ideal& ideal);

}  // namespace hilbkit
