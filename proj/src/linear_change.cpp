#include "hilbkit/linear_change.hpp"

#include "hilbkit/error.hpp"

namespace hilbkit {

LinearChange::LinearChange(Matrix m)
    : m_(std::move(m))
{
    if (m_.rows() != m_.cols())
        throw InvalidInput("linear change must be square");
    if (determinant(m_) == 0)
        throw InvalidInput("linear change is not invertible");
}

LinearChange LinearChange::identity(std::size_t n)
{
    return LinearChange(Matrix::identity(n));
}

LinearChange LinearChange::diagonal(const std::vector<Scalar>& scale)
{
    Matrix m(scale.size(), scale.size());
    for (std::size_t i = 0; i < scale.size(); ++i)
        m(i, i) = scale[i];
    return LinearChange(std::move(m));
}

LinearChange LinearChange::sending_forms_to_variables(const std::vector<Polynomial>& forms)
{
    // The image of a form with coefficient column c is M c; we need M B^T = 1.
    const std::size_t n = forms.size();
    Matrix bt(n, n);
    for (std::size_t k = 0; k < n; ++k) {
        Vector c = linear_coefficients(forms[k]);
        if (c.size() != n)
            throw InvalidInput("need one linear form per variable");
        for (std::size_t i = 0; i < n; ++i)
            bt(i, k) = c[i];
    }
    auto inv = hilbkit::inverse(bt);
    if (!inv)
        throw InvalidInput("linear forms are dependent");
    return LinearChange(std::move(*inv));
}

LinearChange LinearChange::random(std::size_t n, int bound, std::mt19937_64& rng)
{
    std::uniform_int_distribution<int> dist(-bound, bound);
    for (;;) {
        Matrix m(n, n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c)
                m(r, c) = dist(rng);
        if (determinant(m) != 0)
            return LinearChange(std::move(m));
    }
}

LinearChange LinearChange::inverse() const
{
    return LinearChange(*hilbkit::inverse(m_));
}

LinearChange LinearChange::compose(const LinearChange& first) const
{
    // first sends x_j to sum_i F(i,j) x_i; then each x_i goes to sum_k G(k,i) x_k.
    return LinearChange(m_ * first.m_);
}

Polynomial LinearChange::apply(const Polynomial& p) const
{
    const std::size_t n = m_.rows();
    if (p.nvars() < n)
        throw InvalidInput("linear change acts on more variables than the ring has");
    const std::size_t nv = p.nvars();
    std::vector<Polynomial> images;
    images.reserve(nv);
    for (std::size_t j = 0; j < nv; ++j) {
        if (j < n) {
            std::vector<Term> terms;
            for (std::size_t i = 0; i < n; ++i)
                if (m_(i, j) != 0)
                    terms.push_back({Monomial::variable(i, nv), m_(i, j)});
            images.emplace_back(nv, std::move(terms));
        } else {
            images.push_back(Polynomial::variable(j, nv));
        }
    }
    // powers[j][e] = images[j]^e, filled lazily
    std::vector<std::vector<Polynomial>> powers(nv);
    auto power = [&](std::size_t j, int e) -> const Polynomial& {
        auto& pw = powers[j];
        if (pw.empty())
            pw.push_back(Polynomial::constant(nv, 1));
        while (static_cast<int>(pw.size()) <= e)
            pw.push_back(pw.back() * images[j]);
        return pw[static_cast<std::size_t>(e)];
    };
    std::vector<Term> acc;
    for (const auto& t : p.terms()) {
        Polynomial prod = Polynomial::constant(nv, t.coef);
        for (std::size_t j = 0; j < nv; ++j)
            if (t.mono[j] > 0)
                prod = prod * power(j, t.mono[j]);
        acc.insert(acc.end(), prod.terms().begin(), prod.terms().end());
    }
    return Polynomial(nv, std::move(acc));
}

std::vector<Polynomial> LinearChange::apply(const std::vector<Polynomial>& ps) const
{
    std::vector<Polynomial> out;
    out.reserve(ps.size());
    for (const auto& p : ps)
        out.push_back(apply(p));
    return out;
}

Vector linear_coefficients(const Polynomial& form)
{
    Vector c(form.nvars());
    for (const auto& t : form.terms()) {
        if (t.mono.degree() != 1)
            throw InvalidInput("not a linear form: " + form.to_string());
        for (std::size_t i = 0; i < form.nvars(); ++i)
            if (t.mono[i] == 1)
                c[i] = t.coef;
    }
    return c;
}

}  // namespace hilbkit
