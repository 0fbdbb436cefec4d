#include "hilbkit/gin.hpp"

#include "hilbkit/borel.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/linear_change.hpp"

#include <memory>

namespace hilbkit {

namespace {

Ideal one_trial(const Ideal& ideal, int bound, std::uint64_t seed)
{
    std::mt19937_64 local(seed);
    LinearChange g = LinearChange::random(ideal.nvars(), bound, local);
    return initial_ideal(transform(ideal, g));
}

bool acceptable(const Ideal& cand, const Ideal& ideal, int upto)
{
    if (!is_strongly_stable(cand))
        return false;
    for (int n = 0; n <= upto; ++n)
        if (hilbert_function(cand, n) != hilbert_function(ideal, n))
            return false;
    return true;
}

}  // namespace

GinResult generic_initial_ideal(const Ideal& ideal, std::mt19937_64& rng, const GinOptions& opts)
{
    if (ideal.is_zero())
        throw InvalidInput("gin of the zero ideal");
    if (auto cached = ideal.cached_gin())
        return GinResult{*cached, 0, 0, {}};

    GinResult res;
    int bound = opts.initial_bound;
    for (int round = 0; round <= opts.escalations; ++round, bound *= 2) {
        std::vector<Ideal> results;
        auto trial = [&] {
            std::uint64_t seed = rng();
            res.seeds.push_back(seed);
            ++res.trials;
            results.push_back(one_trial(ideal, bound, seed));
        };
        trial();
        trial();
        std::optional<Ideal> agreed;
        if (equal(results[0], results[1])) {
            agreed = results[0];
        } else {
            trial();
            if (equal(results[2], results[0]) || equal(results[2], results[1]))
                agreed = results[2];
        }
        if (agreed && acceptable(*agreed, ideal, opts.hf_check_degree)) {
            res.gin = *agreed;
            res.coefficient_bound = bound;
            ideal.store_gin(std::make_shared<const Ideal>(*agreed));
            return res;
        }
    }
    throw CheckFailure("generic initial ideal rejected after " + std::to_string(res.trials) + " trials");
}

bool is_saturated(const Ideal& ideal)
{
    if (ideal.is_zero())
        return true;
    const std::size_t last = ideal.nvars() - 1;
    if (ideal.is_monomial() && is_strongly_stable(ideal)) {
        for (const auto& m : minimalize(ideal.leading_monomials()))
            if (m[last] > 0)
                return false;
        return true;
    }
    return equal(ideal, saturate_irrelevant(ideal));
}

}  // namespace hilbkit
