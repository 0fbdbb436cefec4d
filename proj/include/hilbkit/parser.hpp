#pragma once

#include "hilbkit/degeneration.hpp"
#include "hilbkit/error.hpp"
#include "hilbkit/hilbert.hpp"
#include "hilbkit/ideal.hpp"

#include <string>
#include <vector>

namespace hilbkit {

/// Syntax error with a 1-based position in the input text.
class ParseError : public InvalidInput {
public:
    ParseError(int line, int column, const std::string& what);
    int line() const { return line_; }
    int column() const { return column_; }

private:
    int line_, column_;
};

struct ParseOptions {
    bool allow_parameter = false;      // the family parameter `a`
    bool allow_inhomogeneous = false;
};

/// Generators in the text format: separated by `;` or newlines, terms
/// `c*x^e*y^f` with rational c, `#` starts a comment.
struct IdealDocument {
    std::vector<std::string> variables;  // x y z t, plus a for families
    std::vector<Polynomial> generators;  // in 4 variables, or 5 with `a`
    bool has_parameter() const { return variables.size() == 5; }
};

IdealDocument parse_ideal(const std::string& text, const ParseOptions& opts = {});
/// A single polynomial (no separators).
Polynomial parse_polynomial(const std::string& text, const ParseOptions& opts = {});
/// Polynomial in n, e.g. "4*n" or "2*n + 1".
HilbertPolynomial parse_hilbert_polynomial(const std::string& text);

Ideal to_ideal(const IdealDocument& doc);
ParamFamily to_family(const IdealDocument& doc);

/// Text that parse_ideal reads back to the same generators, one per line.
std::string format_generators(const std::vector<Polynomial>& gens);

}  // namespace hilbkit
