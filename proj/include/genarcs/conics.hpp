// Ternary quadratic forms over GF(q).
//
// Coefficients follow the monomial order (x0^2, x0x1, x0x2, x1^2, x1x2, x2^2),
// the same order as the coordinates of the Veronese map, so a conic with
// coefficients h vanishes at P exactly when h . veronese(P) == 0.

#ifndef GENARCS_CONICS_HPP
#define GENARCS_CONICS_HPP

#include <span>
#include <string>
#include <vector>

#include "genarcs/plane.hpp"

namespace genarcs {

enum class ConicClass { Irreducible, TwoLines, DoubleLine, ConjugatePair };

std::string to_string(ConicClass c);

/// A nonzero quadratic form up to scale; canonical when the first nonzero
/// coefficient is 1.
struct Conic {
  Sextuple coeffs;

  friend bool operator==(const Conic&, const Conic&) = default;
};

/// Throws std::invalid_argument for the zero form.
Conic make_conic(const Field& field, Sextuple coeffs);

FieldElement evaluate(const Plane& plane, const Conic& conic, PointId p);

/// All forms vanishing on a point set, as a basis of canonical forms.
struct ConicPencil {
  std::vector<Conic> basis;
  std::size_t dimension() const { return basis.size(); }
};

/// Nullspace of the |points| x 6 evaluation matrix. Empty basis when no conic
/// passes through the set. Throws std::invalid_argument outside 1..6 points.
ConicPencil conics_through(const Plane& plane, std::span<const PointId> points);

/// Points of PG(2,q) on the conic, ascending.
std::vector<PointId> zero_set(const Plane& plane, const Conic& conic);

struct ClassifiedConic {
  ConicClass kind;
  std::vector<PointId> points;
};

/// Classification from the zero set: 1 point is a conjugate pair, 2q+1 two
/// lines, q+1 collinear points a double line, q+1 points otherwise
/// irreducible.
ClassifiedConic classify(const Plane& plane, const Conic& conic);

/// Common point of the q+1 tangents of an irreducible conic in even
/// characteristic. Throws std::domain_error for odd q or a reducible conic.
PointId nucleus(const Plane& plane, const Conic& conic);

/// Image of a point under the Veronese map, canonically scaled.
Sextuple veronese(const Plane& plane, PointId p);

/// True iff six points of PG(5,q) span PG(5,q) (no hyperplane holds all of
/// them). Throws std::invalid_argument on repeated or zero points.
bool is_5arc_in_p5(const Field& field, std::span<const Sextuple> points6);

std::string format_conic(const Field& field, const Conic& conic);

}  // namespace genarcs

#endif  // GENARCS_CONICS_HPP
