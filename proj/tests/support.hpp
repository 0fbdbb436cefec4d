#pragma once

#include "hilbkit/ideal.hpp"
#include "hilbkit/parser.hpp"

#include <string>

inline hilbkit::Ideal ideal_of(const std::string& text)
{
    return hilbkit::to_ideal(hilbkit::parse_ideal(text));
}

inline hilbkit::Polynomial poly(const std::string& text)
{
    return hilbkit::parse_polynomial(text);
}
