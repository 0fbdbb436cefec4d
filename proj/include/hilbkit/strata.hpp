#pragma once

#include "hilbkit/hilbert.hpp"
#include "hilbkit/ideal.hpp"

#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

namespace hilbkit {

enum class Stratum { V, R3Prime, R4, R5, R6 };

std::string stratum_name(Stratum s);  // "V", "R3'", "R4", "R5", "R6"
/// Accepts the names above and "R3p". Throws InvalidInput otherwise.
Stratum parse_stratum(const std::string& name);
int stratum_regularity(Stratum s);

/// (f, g): two coprime quadrics.
struct CIShape {
    Polynomial f, g;
};

/// (ℓℓ1, ℓℓ2, F) with ℓ1, ℓ2 independent, F ∈ (ℓ1, ℓ2)_3 and ℓ ∤ F.
struct R3PrimeShape {
    Polynomial ell, ell1, ell2, F;
};

/// (ℓ(ℓ1, ℓ2, q), p) with q ∉ (ℓ1, ℓ2), p ∈ (ℓ1, ℓ2, q)_4, p ∉ (ℓ).
struct R4Shape {
    Polynomial ell, ell1, ell2, q, p;
};

/// ℓ·L + (f, g), f = ℓ1·h + α·ℓ·w^4, g = ℓ2·h.
/// Case 1: ℓ ∉ L, and ℓ1, ℓ2, h are polynomials in the forms of L.
/// Case 2: L = <ℓ, c0, c1> for complement = (c0, c1, c2), w = c2, and ℓ1, ℓ2, h
/// are polynomials in the complement; α = 0 or ℓ2 ∈ <c0, c1>.
struct R5Shape {
    int case_no = 1;
    Polynomial ell;
    std::vector<Polynomial> L;           // three forms
    std::vector<Polynomial> complement;  // case 2 only
    Polynomial ell1, ell2, h;
    Scalar alpha = 0;                    // case 2 only
};

/// (ℓ) + f·(h, g) with f ∉ (ℓ), h ∉ <ℓ>, g ∉ (ℓ, h).
struct R6Shape {
    Polynomial ell, f, h, g;
};

/// (ℓ, f) ∩ P1 ∩ P2 for two distinct points off the curve ℓ = f = 0.
struct RSFamilyShape {
    Polynomial ell, f;
    std::vector<Scalar> pt1, pt2;
};

using Shape = std::variant<CIShape, R3PrimeShape, R4Shape, R5Shape, R6Shape>;

Stratum shape_stratum(const Shape& shape);

/// Monic gcd, computed as f·g divided by the generator of (f) ∩ (g).
Polynomial gcd_forms(const Polynomial& f, const Polynomial& g);

struct QuadricNetFactor {
    Polynomial ell;                // monic
    std::vector<Polynomial> L;     // reduced echelon basis
};

/// V = ℓ·L when such a factorization exists. Throws InvalidInput unless V
/// is three independent quadrics.
std::optional<QuadricNetFactor> factor_quadric_net(const std::vector<Polynomial>& V);

/// The ideal a shape denotes, after validating the shape (InvalidInput names
/// the violated clause).
Ideal shape_ideal(const Shape& shape);
/// shape_ideal plus the contract: Hilbert function of the stratum up to
/// degree 8 and its regularity (CheckFailure otherwise).
Ideal build_stratum_ideal(const Shape& shape);

/// dim I_n of the Borel ideal of regularity r, n = 0..upto.
std::vector<long> stratum_hilbert_function(int r, int upto = 8);

struct SampleOptions {
    int bound = 5;
    int max_attempts = 200;
    std::optional<int> r5_case;          // 1 or 2
    std::optional<bool> r5_alpha_zero;   // case 2 only
    bool r5_normalized = false;          // case 2: l = x, complement (y, z, t)
};

/// A random shape that passes validation (rejection sampling).
Shape random_shape(Stratum s, std::mt19937_64& rng, const SampleOptions& opts = {});
/// build_stratum_ideal(random_shape(...)).
Ideal sample_stratum(Stratum s, std::mt19937_64& rng, const SampleOptions& opts = {});

/// Ideal of the point with the given homogeneous coordinates.
Ideal point_ideal(const std::vector<Scalar>& pt);
Ideal rs_family_ideal(const RSFamilyShape& shape);
RSFamilyShape random_rs_family_shape(std::mt19937_64& rng, int bound = 5);

enum class Membership { Certain, Unknown };
struct ComponentStatus {
    std::string component;  // "H_VA" or "H_RS"
    Membership membership;
};

struct StratumReport {
    int regularity = 0;
    Stratum stratum = Stratum::V;
    std::vector<long> hilbert_values;  // n = 0..7
    bool ci = false;
    std::vector<ComponentStatus> components;
};

/// Requires a saturated ideal with quotient Hilbert polynomial 4n.
StratumReport classify(const Ideal& ideal);

struct DimensionEntry {
    std::string name;
    long value = 0;
    std::vector<long> terms;   // summands of the parameter count
    std::string derivation;
};

/// Parameter counts of the strata and families, each rebuilt from
/// Grassmannian and projective-space dimensions.
std::vector<DimensionEntry> dimension_table();

// ---- random forms -------------------------------------------------------------

/// Form of degree d in `nvars` variables, integer coefficients in [-bound, bound].
Polynomial random_form(std::size_t nvars, int d, int bound, std::mt19937_64& rng);
/// Substitutes forms[i] for variable i of p (p has forms.size() variables).
Polynomial compose(const Polynomial& p, const std::vector<Polynomial>& forms);
/// True when the linear forms are linearly independent.
bool independent_forms(const std::vector<Polynomial>& forms);

}  // namespace hilbkit
