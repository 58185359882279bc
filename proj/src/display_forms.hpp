#pragma once

// Closed-form harmonic polynomials for orders 2 to 4, written out by hand. They stay independent of bell_expansion so each route can
// check the other. `h(a)` must return the order-a harmonic value.

#include "harmonic/rational.hpp"

namespace harmonic::display {

template <typename H>
Rational poly2(const H& h)
{
    return h(2) + h(1) * h(1);
}

template <typename H>
Rational poly3(const H& h)
{
    return Rational(2) * h(3) + Rational(3) * h(1) * h(2) + h(1).pow(3);
}

template <typename H>
Rational poly4(const H& h)
{
    return Rational(6) * h(4) + Rational(8) * h(3) * h(1) + Rational(3) * h(2).pow(2)
        + Rational(6) * h(1).pow(2) * h(2) + h(1).pow(4);
}

} // namespace harmonic::display
