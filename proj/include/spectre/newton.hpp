#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "spectre/errors.hpp"
#include "spectre/local_algebra.hpp"
#include "spectre/poly.hpp"
#include "spectre/spectral_set.hpp"

namespace spectre {

/// Compact facet {v : normal . v = level} of a Newton polyhedron; the
/// polyhedron lies on the side normal . v >= level. The normal is primitive
/// with strictly positive entries.
struct Facet {
  std::vector<std::int64_t> normal;
  std::int64_t level = 0;

  friend auto operator<=>(const Facet&, const Facet&) = default;
};

class NewtonPolyhedron {
 public:
  NewtonPolyhedron(std::size_t num_vars, std::vector<ExpVec> vertices, std::vector<Facet> facets,
                   bool convenient)
      : num_vars_(num_vars),
        vertices_(std::move(vertices)),
        facets_(std::move(facets)),
        convenient_(convenient) {}

  std::size_t num_vars() const noexcept { return num_vars_; }
  const std::vector<ExpVec>& vertices() const noexcept { return vertices_; }
  const std::vector<Facet>& facets() const noexcept { return facets_; }
  /// True iff the diagram meets every coordinate axis.
  bool convenient() const noexcept { return convenient_; }

 private:
  std::size_t num_vars_;
  std::vector<ExpVec> vertices_;
  std::vector<Facet> facets_;
  bool convenient_;
};

/// Compact facets of conv(supp + positive orthant), sorted.
NewtonPolyhedron newton_polyhedron(const std::set<ExpVec>& supp);

/// Newton filtration weight: min over facets of (normal . v) / level.
/// Equals 1 exactly on the diagram.
Rat newton_weight(const NewtonPolyhedron& p, const std::vector<Rat>& v);
/// Weight of the monomial form x^k dx, i.e. newton_weight at k + (1,...,1).
Rat form_weight(const NewtonPolyhedron& p, const ExpVec& k);

/// Log canonical threshold of a nondegenerate germ: the weight of (1,...,1).
Rat lct(const NewtonPolyhedron& p);

/// Form weights <= 1 over all monomials (< 1 in one variable); the (0,1] part
/// of the spectrum.
SpectralSet spectrum_unit_part(const NewtonPolyhedron& p);

/// Raised when the Newton weights of the Milnor basis fail the spectrum
/// sanity checks; carries the raw multiset.
class BasisIncompatible : public Error {
 public:
  BasisIncompatible(SpectralSet raw, const std::string& reason)
      : Error(ErrorKind::BasisIncompatible, reason), raw_(std::move(raw)) {}
  const SpectralSet& raw() const noexcept { return raw_; }

 private:
  SpectralSet raw_;
};

/// Spectrum of a convenient germ assumed nondegenerate with respect to its
/// Newton diagram: the Newton weights of a monomial basis of the Milnor
/// algebra, validated for symmetry, range and agreement on (0, 1].
SpectralSet nondegenerate_spectrum(const Poly& f, const MilnorOptions& options = {});

}  // namespace spectre
