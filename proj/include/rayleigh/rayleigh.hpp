#ifndef RAYLEIGH_RAYLEIGH_HPP
#define RAYLEIGH_RAYLEIGH_HPP

#include "rayleigh/bessel.hpp"
#include "rayleigh/cache.hpp"
#include "rayleigh/factored.hpp"
#include "rayleigh/polynomial.hpp"
#include "rayleigh/ratio_expansion.hpp"
#include "rayleigh/rational.hpp"
#include "rayleigh/render.hpp"
#include "rayleigh/sigma.hpp"
#include "rayleigh/zeta.hpp"

#endif  // RAYLEIGH_RAYLEIGH_HPP
