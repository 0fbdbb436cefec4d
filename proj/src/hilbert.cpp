#include "hilbkit/hilbert.hpp"

#include "hilbkit/borel.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/gin.hpp"

#include <algorithm>
#include <random>
#include <unordered_set>

namespace hilbkit {

namespace {

long binom(long n, long k)
{
    if (k < 0 || n < k)
        return 0;
    k = std::min(k, n - k);
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens)
{
    return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

using Series = std::vector<std::int64_t>;

Series series_add(const Series& a, const Series& b, std::size_t shift_b)
{
    Series r(std::max(a.size(), b.size() + shift_b), 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i)
        r[i + shift_b] += b[i];
    while (!r.empty() && r.back() == 0)
        r.pop_back();
    return r;
}

Series numerator_rec(std::vector<Monomial> gens, std::size_t nvars)
{
    gens = minimalize(std::move(gens));
    if (gens.empty())
        return {1};
    if (gens.size() == 1 && gens.front().degree() == 0)
        return {};
    // Pure powers of distinct variables: product of (1 - T^d).
    std::vector<int> usage(nvars, 0);
    bool all_pure = true;
    for (const auto& g : gens) {
        int support = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i] > 0) {
                ++support;
                ++usage[i];
            }
        all_pure = all_pure && support == 1;
    }
    if (all_pure) {
        Series r{1};
        for (const auto& g : gens) {
            Series f(static_cast<std::size_t>(g.degree()) + 1, 0);
            f[0] = 1;
            f.back() = -1;
            Series prod(r.size() + f.size() - 1, 0);
            for (std::size_t i = 0; i < r.size(); ++i)
                for (std::size_t j = 0; j < f.size(); ++j)
                    prod[i + j] += r[i] * f[j];
            r = std::move(prod);
        }
        while (!r.empty() && r.back() == 0)
            r.pop_back();
        return r;
    }
    // Pivot on the most used variable among non-pure generators:
    // HS(P/M) = HS(P/(M + x)) + T HS(P/(M : x)).
    std::size_t pivot = 0;
    int best = -1;
    for (const auto& g : gens) {
        int support = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            support += g[i] > 0;
        if (support < 2)
            continue;
        for (std::size_t i = 0; i < nvars; ++i)
            if (g[i] > 0 && usage[i] > best) {
                best = usage[i];
                pivot = i;
            }
    }
    Monomial x = Monomial::variable(pivot, nvars);
    std::vector<Monomial> with_x = gens;
    with_x.push_back(x);
    std::vector<Monomial> colon;
    for (const auto& g : gens)
        colon.push_back(g[pivot] > 0 ? g / x : g);
    return series_add(numerator_rec(std::move(with_x), nvars), numerator_rec(std::move(colon), nvars), 1);
}

}  // namespace

// ---- HilbertPolynomial -----------------------------------------------------

HilbertPolynomial::HilbertPolynomial(std::vector<Scalar> coeffs)
    : c_(std::move(coeffs))
{
    trim();
}

void HilbertPolynomial::trim()
{
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
}

HilbertPolynomial HilbertPolynomial::constant(const Scalar& c)
{
    return HilbertPolynomial(std::vector<Scalar>{c});
}

HilbertPolynomial HilbertPolynomial::binomial(long shift, int k)
{
    std::vector<Scalar> acc{1};
    Scalar fact = 1;
    for (int i = 0; i < k; ++i) {
        // multiply by (n + shift - i)
        std::vector<Scalar> next(acc.size() + 1);
        for (std::size_t j = 0; j < acc.size(); ++j) {
            next[j + 1] += acc[j];
            next[j] += acc[j] * Scalar(shift - i);
        }
        acc = std::move(next);
        fact *= i + 1;
    }
    for (auto& c : acc)
        c /= fact;
    return HilbertPolynomial(std::move(acc));
}

HilbertPolynomial HilbertPolynomial::interpolate(const std::vector<long>& xs, const std::vector<Scalar>& ys)
{
    if (xs.size() != ys.size())
        throw InvalidInput("interpolation needs matching point lists");
    HilbertPolynomial acc;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        std::vector<Scalar> basis{1};
        Scalar denom = 1;
        for (std::size_t j = 0; j < xs.size(); ++j) {
            if (j == i)
                continue;
            std::vector<Scalar> next(basis.size() + 1);
            for (std::size_t k = 0; k < basis.size(); ++k) {
                next[k + 1] += basis[k];
                next[k] -= basis[k] * Scalar(xs[j]);
            }
            basis = std::move(next);
            denom *= Scalar(xs[i] - xs[j]);
        }
        for (auto& c : basis)
            c = c * ys[i] / denom;
        acc = acc + HilbertPolynomial(std::move(basis));
    }
    return acc;
}

Scalar HilbertPolynomial::operator()(long n) const
{
    Scalar v = 0;
    for (std::size_t k = c_.size(); k-- > 0;)
        v = v * Scalar(n) + c_[k];
    return v;
}

HilbertPolynomial HilbertPolynomial::operator+(const HilbertPolynomial& o) const
{
    std::vector<Scalar> r(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < c_.size(); ++i)
        r[i] += c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i)
        r[i] += o.c_[i];
    return HilbertPolynomial(std::move(r));
}

HilbertPolynomial HilbertPolynomial::operator-(const HilbertPolynomial& o) const
{
    std::vector<Scalar> neg = o.c_;
    for (auto& c : neg)
        c = -c;
    return *this + HilbertPolynomial(std::move(neg));
}

std::vector<int> HilbertPolynomial::gotzmann_decomposition() const
{
    std::vector<int> exps;
    HilbertPolynomial rest = *this;
    long i = 1;
    for (int a = degree(); a >= 0; --a) {
        while (!rest.is_zero() && rest.degree() == a) {
            if (rest.leading_coefficient() < 0)
                throw InvalidInput("no Gotzmann representation for " + to_string());
            rest = rest - binomial(a - i + 1, a);
            exps.push_back(a);
            ++i;
        }
        if (!rest.is_zero() && rest.degree() > a)
            throw InvalidInput("no Gotzmann representation for " + to_string());
    }
    if (!rest.is_zero())
        throw InvalidInput("no Gotzmann representation for " + to_string());
    return exps;
}

std::string HilbertPolynomial::to_string() const
{
    if (c_.empty())
        return "0";
    std::string s;
    for (std::size_t k = c_.size(); k-- > 0;) {
        Scalar c = c_[k];
        if (c == 0)
            continue;
        bool neg = c < 0;
        if (neg)
            c = -c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (k == 0) {
            s += c.get_str();
            continue;
        }
        if (c != 1)
            s += c.get_str() + "*";
        s += "n";
        if (k > 1)
            s += "^" + std::to_string(k);
    }
    return s;
}

// ---- Hilbert functions -------------------------------------------------------

long ring_dimension(std::size_t nvars, int n)
{
    if (n < 0)
        return 0;
    return binom(n + static_cast<long>(nvars) - 1, static_cast<long>(nvars) - 1);
}

long hilbert_function(const Ideal& ideal, int n)
{
    if (n < 0)
        throw InvalidInput("negative degree");
    if (ideal.is_zero())
        return 0;
    auto lead = ideal.leading_monomials();
    long count = 0;
    for (const auto& m : monomials_of_degree(ideal.nvars(), n))
        count += divisible_by_any(m, lead);
    return count;
}

HilbertFunction hilbert_function_table(const Ideal& ideal, int upto)
{
    HilbertFunction hf;
    hf.nvars = ideal.nvars();
    for (int n = 0; n <= upto; ++n)
        hf.values.push_back(hilbert_function(ideal, n));
    return hf;
}

std::vector<std::int64_t> hilbert_series_numerator(const std::vector<Monomial>& gens, std::size_t nvars)
{
    return numerator_rec(gens, nvars);
}

namespace {

HilbertPolynomial series_polynomial(const Series& num, std::size_t nvars)
{
    HilbertPolynomial scaled;
    for (std::size_t k = 0; k < num.size(); ++k) {
        if (num[k] == 0)
            continue;
        HilbertPolynomial b = HilbertPolynomial::binomial(static_cast<long>(nvars) - 1 - static_cast<long>(k),
                                                          static_cast<int>(nvars) - 1);
        std::vector<Scalar> c = b.coefficients();
        for (auto& v : c)
            v *= Scalar(static_cast<long>(num[k]));
        scaled = scaled + HilbertPolynomial(std::move(c));
    }
    return scaled;
}

}  // namespace

HilbertPolynomial quotient_hilbert_polynomial_from_series(const Ideal& ideal)
{
    std::vector<Monomial> lead;
    if (!ideal.is_zero())
        lead = ideal.leading_monomials();
    return series_polynomial(hilbert_series_numerator(lead, ideal.nvars()), ideal.nvars());
}

HilbertPolynomial hilbert_polynomial(const Ideal& ideal)
{
    const std::size_t nv = ideal.nvars();
    std::vector<Monomial> lead;
    if (!ideal.is_zero())
        lead = ideal.leading_monomials();
    Series num = hilbert_series_numerator(lead, nv);
    long start = 6;
    for (const auto& m : lead)
        start = std::max<long>(start, m.degree());
    start = std::max<long>(start, static_cast<long>(num.size()) - static_cast<long>(nv) + 1);

    std::vector<long> xs;
    std::vector<Scalar> ys;
    for (std::size_t k = 0; k < nv; ++k) {
        long n = start + static_cast<long>(k);
        xs.push_back(n);
        ys.push_back(Scalar(hilbert_function(ideal, static_cast<int>(n))));
    }
    HilbertPolynomial hp = HilbertPolynomial::interpolate(xs, ys);
    for (std::size_t k = 0; k < nv; ++k) {
        long n = start + static_cast<long>(nv + k);
        if (hp(n) != Scalar(hilbert_function(ideal, static_cast<int>(n))))
            throw CheckFailure("Hilbert polynomial guard failed at degree " + std::to_string(n));
    }
    HilbertPolynomial ring = HilbertPolynomial::binomial(static_cast<long>(nv) - 1, static_cast<int>(nv) - 1);
    if (!(ring - hp == series_polynomial(num, nv)))
        throw CheckFailure("Hilbert polynomial disagrees with the Hilbert series");
    return hp;
}

HilbertPolynomial quotient_hilbert_polynomial(const Ideal& ideal)
{
    const std::size_t nv = ideal.nvars();
    return HilbertPolynomial::binomial(static_cast<long>(nv) - 1, static_cast<int>(nv) - 1) - hilbert_polynomial(ideal);
}

int regularity(const Ideal& ideal)
{
    if (ideal.is_zero())
        throw InvalidInput("regularity of the zero ideal");
    if (ideal.is_monomial()) {
        Ideal mono = Ideal::from_monomials(minimalize(ideal.leading_monomials()));
        if (is_strongly_stable(mono))
            return mono.max_generator_degree();
    }
    if (auto cached = ideal.cached_gin())
        return cached->max_generator_degree();
    std::mt19937_64 rng(0x6e1d5eedULL);
    return generic_initial_ideal(ideal, rng).gin.max_generator_degree();
}

long macaulay_min_growth(long a, int d, std::size_t r)
{
    const long total = ring_dimension(r, d);
    if (a < 0 || a > total)
        throw InvalidInput("subspace dimension out of range");
    auto mons = monomials_of_degree(r, d);  // lex-descending
    std::unordered_set<Monomial, MonomialHash> grown;
    for (long k = 0; k < a; ++k)
        for (std::size_t i = 0; i < r; ++i)
            grown.insert(mons[static_cast<std::size_t>(k)] * Monomial::variable(i, r));
    return static_cast<long>(grown.size());
}

long macaulay_upper_bound(long h, int d)
{
    if (h < 0 || d < 1)
        throw InvalidInput("Macaulay bound needs h >= 0 and d >= 1");
    long rest = h, out = 0;
    for (int i = d; i >= 1 && rest > 0; --i) {
        long k = i;
        while (binom(k + 1, i) <= rest)
            ++k;
        rest -= binom(k, i);
        out += binom(k + 1, i + 1);
    }
    return out;
}

int gotzmann_number(const HilbertPolynomial& p)
{
    return static_cast<int>(p.gotzmann_decomposition().size());
}

}  // namespace hilbkit
