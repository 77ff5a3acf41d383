#pragma once

#include <string>
#include <string_view>

#include "spectre/poly.hpp"
#include "spectre/spectral_set.hpp"

namespace spectre {

/// Normal form of a named simple singularity in its minimal number of
/// variables: A_k = x^{k+1}, D_k = x^{k-1} + x*y^2, E6 = x^3 + y^4,
/// E7 = x^3 + x*y^3, E8 = x^3 + y^5. Throws UnknownSingularity.
Poly builtin_equation(std::string_view name);

/// Spectrum of the named germ, stabilised to `ambient_vars` variables by
/// adding squares.
SpectralSet builtin_singularity(std::string_view name, int ambient_vars);

}  // namespace spectre
