#include "spectre/singularities.hpp"

#include <cctype>

#include "spectre/errors.hpp"
#include "spectre/quasihomogeneous.hpp"

namespace spectre {

namespace {

struct Name {
  char series;
  int index;
};

Name parse_name(std::string_view name) {
  const auto unknown = [&] {
    return Error(ErrorKind::UnknownSingularity,
                 "unknown singularity '" + std::string(name) + "' (expected A<k>, D<k>, E6, E7 or E8)");
  };
  if (name.size() < 2 || name.size() > 6) throw unknown();
  const char series = static_cast<char>(std::toupper(static_cast<unsigned char>(name[0])));
  int index = 0;
  for (char c : name.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) throw unknown();
    index = index * 10 + (c - '0');
  }
  const bool ok = (series == 'A' && index >= 1) || (series == 'D' && index >= 4) ||
                  (series == 'E' && index >= 6 && index <= 8);
  if (!ok || name[1] == '0') throw unknown();
  return {series, index};
}

}  // namespace

Poly builtin_equation(std::string_view name) {
  const Name n = parse_name(name);
  switch (n.series) {
    case 'A': return parse_polynomial("x^" + std::to_string(n.index + 1));
    case 'D': return parse_polynomial("x^" + std::to_string(n.index - 1) + "+x*y^2");
    default: break;
  }
  if (n.index == 6) return parse_polynomial("x^3+y^4");
  if (n.index == 7) return parse_polynomial("x^3+x*y^3");
  return parse_polynomial("x^3+y^5");
}

SpectralSet builtin_singularity(std::string_view name, int ambient_vars) {
  const Poly f = builtin_equation(name);
  const int base_vars = static_cast<int>(f.num_vars());
  if (ambient_vars < base_vars)
    throw Error(ErrorKind::InvalidArgument, std::string(name) + " needs at least " +
                                                std::to_string(base_vars) + " variables");
  // All simple germs are quasi-homogeneous; D_k and E7 are not convenient,
  // so the weight route is used throughout.
  SpectralSet s = qh_spectrum(detect_weights(f));
  for (int v = base_vars; v < ambient_vars; ++v) s = suspension(s, 2);
  return s;
}

}  // namespace spectre
