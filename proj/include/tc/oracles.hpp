#pragma once

#include "tc/abelian.hpp"
#include "tc/diagram.hpp"

namespace tc {

// |H1| of the double branched cover of the closed-off diagram, as the
// absolute determinant of the reduced Goeritz matrix. 0 encodes an infinite
// group. Requires a connected diagram.
long long goeritz_det(const LinkDiagram& d);
long long goeritz_det(const TangleDiagram& d);

// Integer polynomials, lowest degree first.
using Poly = std::vector<long long>;

Poly poly_mul(const Poly& a, const Poly& b);
Poly poly_add(const Poly& a, const Poly& b);
Poly poly_trim(Poly a);

// Alexander polynomial of a one-component closed-off diagram via Fox
// calculus on the Wirtinger presentation, up to units (+-t^k).
Poly alexander_poly(const LinkDiagram& d);

// Resultant of two integer polynomials (Sylvester determinant, exact).
long long resultant(const Poly& a, const Poly& b);

// |H1(M^(p))| of the p-fold cyclic branched cover of the closed-off knot:
// |prod_{k=1}^{p-1} Delta(zeta^k)| via the resultant with 1+x+...+x^{p-1}.
// 0 encodes an infinite group. Errors on multi-component closures.
long long cyclic_h1_order(const TangleDiagram& d, int p);

// number of link components of the closed diagram
int link_component_count(const LinkDiagram& d);

}  // namespace tc
