#include "hilbkit/parser.hpp"

#include <cctype>

namespace hilbkit {

ParseError::ParseError(int line, int column, const std::string& what)
    : InvalidInput("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what)
    , line_(line)
    , column_(column)
{
}

namespace {

// Recursive descent over one generator:
//   expr   := sign? term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := number ('/' number)? | name ('^' digits)?
class Reader {
public:
    Reader(const std::string& text, std::vector<std::string> names)
        : s_(text)
        , names_(std::move(names))
    {
    }

    bool at_end()
    {
        skip_blanks();
        return pos_ >= s_.size();
    }

    // Reads generators until the end; separators are ';' and newlines.
    std::vector<std::pair<Polynomial, std::pair<int, int>>> generators()
    {
        std::vector<std::pair<Polynomial, std::pair<int, int>>> out;
        for (;;) {
            skip_separators();
            if (pos_ >= s_.size())
                return out;
            auto where = position();
            out.emplace_back(expression(), where);
            skip_blanks();
            if (pos_ < s_.size() && s_[pos_] != ';' && s_[pos_] != '\n')
                fail("expected '+', '-', '*', ';' or end of line");
        }
    }

    Polynomial single()
    {
        skip_blanks();
        if (pos_ >= s_.size())
            fail("empty expression");
        Polynomial p = expression();
        skip_blanks();
        if (pos_ < s_.size())
            fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return p;
    }

    std::pair<int, int> position() const
    {
        int line = 1, col = 1;
        for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
            if (s_[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        return {line, col};
    }

    [[noreturn]] void fail(const std::string& what) const
    {
        auto [l, c] = position();
        throw ParseError(l, c, what);
    }

private:
    void skip_blanks()
    {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n')
                    ++pos_;
            } else if (c == ' ' || c == '\t' || c == '\r') {
                ++pos_;
            } else {
                return;
            }
        }
    }

    void skip_separators()
    {
        for (;;) {
            skip_blanks();
            if (pos_ < s_.size() && (s_[pos_] == ';' || s_[pos_] == '\n'))
                ++pos_;
            else
                return;
        }
    }

    Polynomial expression()
    {
        skip_blanks();
        Scalar sign = 1;
        if (pos_ < s_.size() && (s_[pos_] == '+' || s_[pos_] == '-')) {
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
        }
        Polynomial acc = term() * sign;
        for (;;) {
            skip_blanks();
            if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-'))
                return acc;
            sign = s_[pos_] == '-' ? -1 : 1;
            ++pos_;
            acc += term() * sign;
        }
    }

    Polynomial term()
    {
        Polynomial acc = factor();
        for (;;) {
            skip_blanks();
            if (pos_ >= s_.size() || s_[pos_] != '*')
                return acc;
            ++pos_;
            acc = acc * factor();
        }
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            ++pos_;
        return s_.substr(start, pos_ - start);
    }

    Polynomial factor()
    {
        skip_blanks();
        if (pos_ >= s_.size())
            fail("expected a coefficient or a variable");
        const std::size_t n = names_.size();
        char c = s_[pos_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Scalar v(digits());
            if (pos_ < s_.size() && s_[pos_] == '/') {
                ++pos_;
                std::string den = digits();
                if (den.empty())
                    fail("expected a denominator");
                Scalar d(den);
                if (d == 0)
                    fail("zero denominator");
                v /= d;
            }
            return Polynomial::constant(n, v);
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
            std::string name = s_.substr(start, pos_ - start);
            std::size_t idx = n;
            for (std::size_t i = 0; i < n; ++i)
                if (names_[i] == name)
                    idx = i;
            if (idx == n) {
                pos_ = start;
                fail("unknown variable '" + name + "'");
            }
            int e = 1;
            skip_blanks();
            if (pos_ < s_.size() && s_[pos_] == '^') {
                ++pos_;
                skip_blanks();
                std::string ds = digits();
                if (ds.empty() || ds.size() > 4)
                    fail("expected an exponent");
                e = std::stoi(ds);
            }
            return Polynomial::monomial(Monomial::variable(idx, n, e));
        }
        fail("unexpected '" + std::string(1, c) + "'");
    }

    const std::string& s_;
    std::vector<std::string> names_;
    std::size_t pos_ = 0;
};

std::vector<std::string> ring_names(bool parameter)
{
    std::vector<std::string> names{"x", "y", "z", "t"};
    if (parameter)
        names.push_back("a");
    return names;
}

}  // namespace

IdealDocument parse_ideal(const std::string& text, const ParseOptions& opts)
{
    IdealDocument doc;
    doc.variables = ring_names(opts.allow_parameter);
    Reader reader(text, doc.variables);
    static const std::vector<int> family_grading{1, 1, 1, 1, 0};
    for (auto& [p, where] : reader.generators()) {
        bool homogeneous = opts.allow_parameter ? p.is_homogeneous(family_grading) : p.is_homogeneous();
        if (!homogeneous && !opts.allow_inhomogeneous)
            throw ParseError(where.first, where.second, "inhomogeneous generator " + p.to_string(doc.variables));
        doc.generators.push_back(std::move(p));
    }
    // a document mentioning no `a` is still a family over k[x,y,z,t,a]
    return doc;
}

Polynomial parse_polynomial(const std::string& text, const ParseOptions& opts)
{
    Reader reader(text, ring_names(opts.allow_parameter));
    return reader.single();
}

HilbertPolynomial parse_hilbert_polynomial(const std::string& text)
{
    Reader reader(text, {"n"});
    Polynomial p = reader.single();
    std::vector<Scalar> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
    for (const auto& t : p.terms())
        c[static_cast<std::size_t>(t.mono[0])] = t.coef;
    return HilbertPolynomial(std::move(c));
}

Ideal to_ideal(const IdealDocument& doc)
{
    if (doc.has_parameter())
        throw InvalidInput("the parameter a is only allowed in families");
    if (doc.generators.empty())
        throw InvalidInput("no generators");
    return Ideal(4, doc.generators);
}

ParamFamily to_family(const IdealDocument& doc)
{
    std::vector<Polynomial> gens;
    for (const auto& g : doc.generators)
        gens.push_back(g.resized(5));
    return ParamFamily(std::move(gens), "family from text");
}

std::string format_generators(const std::vector<Polynomial>& gens)
{
    std::string out;
    for (const auto& g : gens)
        out += g.to_string() + "\n";
    return out;
}

}  // namespace hilbkit
