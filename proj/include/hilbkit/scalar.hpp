#pragma once

#include <gmpxx.h>

#include <string>

namespace hilbkit {

/// Exact rational scalar. GMP keeps every value in lowest terms with a
/// positive denominator, so equality of values is equality of representation.
using Scalar = mpq_class;

inline Scalar make_scalar(long num, long den = 1)
{
    Scalar s(num, den);
    s.canonicalize();
    return s;
}

inline std::string to_string(const Scalar& s) { return s.get_str(); }

}  // namespace hilbkit
