#include "hilbkit/order.hpp"

#include "hilbkit/error.hpp"

namespace hilbkit {

namespace {

std::strong_ordering lex_cmp(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = 0; i < a.nvars(); ++i)
        if (a[i] != b[i])
            return a[i] <=> b[i];
    return std::strong_ordering::equal;
}

std::strong_ordering revlex_cmp(const Monomial& a, const Monomial& b)
{
    for (std::size_t i = a.nvars(); i-- > 0;)
        if (a[i] != b[i])
            return b[i] <=> a[i];
    return std::strong_ordering::equal;
}

std::strong_ordering degrevlex_cmp(const Monomial& a, const Monomial& b)
{
    if (a.degree() != b.degree())
        return a.degree() <=> b.degree();
    return revlex_cmp(a, b);
}

// degrevlex restricted to the variables selected (or not selected) by mask
std::strong_ordering masked_degrevlex(const Monomial& a, const Monomial& b, std::uint32_t mask, bool inside)
{
    int da = 0, db = 0;
    for (std::size_t i = 0; i < a.nvars(); ++i) {
        bool in = (mask >> i) & 1u;
        if (in == inside) {
            da += a[i];
            db += b[i];
        }
    }
    if (da != db)
        return da <=> db;
    for (std::size_t i = a.nvars(); i-- > 0;) {
        bool in = (mask >> i) & 1u;
        if (in == inside && a[i] != b[i])
            return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::lex()
{
    MonomialOrder o;
    o.kind_ = Kind::Lex;
    return o;
}

MonomialOrder MonomialOrder::degrevlex()
{
    return MonomialOrder{};
}

MonomialOrder MonomialOrder::weighted(std::vector<int> weights, Tiebreak tiebreak)
{
    MonomialOrder o;
    o.kind_ = Kind::Weighted;
    o.weights_ = std::move(weights);
    o.tiebreak_ = tiebreak;
    bool positive = true;
    for (int w : o.weights_) {
        if (w < 0)
            throw InvalidInput("weighted order needs non-negative weights");
        positive = positive && w > 0;
    }
    if (tiebreak == Tiebreak::RevLex && !positive)
        throw InvalidInput("revlex tie-break requires strictly positive weights");
    return o;
}

MonomialOrder MonomialOrder::block(std::vector<std::size_t> eliminated)
{
    MonomialOrder o;
    o.kind_ = Kind::Block;
    for (std::size_t v : eliminated)
        o.elim_mask_ |= 1u << v;
    return o;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const
{
    switch (kind_) {
    case Kind::Lex:
        return lex_cmp(a, b);
    case Kind::DegRevLex:
        return degrevlex_cmp(a, b);
    case Kind::Weighted: {
        long wa = a.weighted_degree(weights_), wb = b.weighted_degree(weights_);
        if (wa != wb)
            return wa <=> wb;
        switch (tiebreak_) {
        case Tiebreak::Lex:
            return lex_cmp(a, b);
        case Tiebreak::RevLex:
            return revlex_cmp(a, b);
        case Tiebreak::DegRevLex:
            return degrevlex_cmp(a, b);
        }
        break;
    }
    case Kind::Block: {
        auto c = masked_degrevlex(a, b, elim_mask_, true);
        if (c != 0)
            return c;
        return masked_degrevlex(a, b, elim_mask_, false);
    }
    }
    return std::strong_ordering::equal;
}

std::string MonomialOrder::key() const
{
    switch (kind_) {
    case Kind::Lex:
        return "lex";
    case Kind::DegRevLex:
        return "degrevlex";
    case Kind::Weighted: {
        std::string s = "weighted(";
        for (int w : weights_)
            s += std::to_string(w) + ",";
        s += ")/" + std::to_string(static_cast<int>(tiebreak_));
        return s;
    }
    case Kind::Block:
        return "block/" + std::to_string(elim_mask_);
    }
    return "?";
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, const MonomialOrder& ord)
{
    if (a.nvars() != b.nvars())
        throw InvalidInput("monomials live in rings with different variable counts");
    return ord.compare(a, b);
}

}  // namespace hilbkit
