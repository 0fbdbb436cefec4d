#pragma once

#include "hilbkit/monomial.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace hilbkit {

/// A monomial order on exponent vectors. Variables are ordered x0 > x1 > ...
class MonomialOrder {
public:
    enum class Kind { Lex, DegRevLex, Weighted, Block };
    /// Tie-break used after the weight comparison of a weighted order.
    /// RevLex is the pure reverse-lexicographic comparison (smaller exponent of
    /// the last differing variable wins); it is a valid tie-break only after a
    /// strictly positive weight.
    enum class Tiebreak { Lex, RevLex, DegRevLex };

    static MonomialOrder lex();
    static MonomialOrder degrevlex();
    static MonomialOrder weighted(std::vector<int> weights, Tiebreak tiebreak = Tiebreak::DegRevLex);
    /// Elimination order: monomials are first compared by their restriction to
    /// the variables in `eliminated` (degrevlex), then by the rest (degrevlex).
    static MonomialOrder block(std::vector<std::size_t> eliminated);

    Kind kind() const { return kind_; }
    const std::vector<int>& weights() const { return weights_; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    /// Stable identifier, used as a cache key.
    std::string key() const;

    bool operator==(const MonomialOrder& other) const { return key() == other.key(); }

private:
    Kind kind_ = Kind::DegRevLex;
    Tiebreak tiebreak_ = Tiebreak::DegRevLex;
    std::vector<int> weights_;
    std::uint32_t elim_mask_ = 0;
};

/// Checked comparison; throws InvalidInput when the variable counts differ.
std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord);

}  // namespace hilbkit
