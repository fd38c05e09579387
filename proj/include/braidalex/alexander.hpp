#pragma once

#include <map>
#include <string>
#include <vector>

#include "braidalex/braid.hpp"
#include "braidalex/laurent.hpp"

// The main pipeline: coloured reduced Burau matrix of a braid word, the
// characteristic polynomial det(I - x*B) of its closure together with the
// braid axis, and the Torres quotients giving the Alexander invariant and
// the multivariable Alexander polynomial of the closure itself. All public
// polynomial outputs are canonical up to units.

namespace braidalex {

struct ColouredBurau {
    PolyMatrix matrix;  // (n-1)x(n-1) over t-variables only
    int strands = 1;
};

// The elementary factor: identity except row i, which carries (a, -a, 1) for
// a positive crossing and (1, -1/a, 1/a) for a negative one, truncated at the
// matrix edge. The two signs are exact matrix inverses of each other.
PolyMatrix c_matrix(int i, VarId a, int n, int sign);

// Product of elementary factors, one per crossing, leftmost factor at the
// top of the braid, each carrying the variable of its undercrossing strand.
ColouredBurau coloured_burau(const BraidWord& w);

// Sends t_j to t_c, c the minimum of the cycle of pi containing j; the axis
// variable maps to itself.
std::map<VarId, VarId> identification_map(const Permutation& p);

// Canonical form of det(I - x*B) after strand identifications: the Alexander
// polynomial of the closed braid together with its axis, up to units.
LaurentPoly axis_link_polynomial(const BraidWord& w);

// Torres quotient det(I - B) / (1 - prod t_c^{n_c}) after identifications,
// canonicalized. For a knot (k = 1) the literal quotient by 1 - t^n leaves
// the ring, so the division is routed through 1 + t + ... + t^{n-1} and the
// reported value is the Alexander polynomial itself.
LaurentPoly alexander_invariant(const BraidWord& w);

// The multivariable Alexander polynomial of the closure, up to units.
LaurentPoly alexander_polynomial(const BraidWord& w);

struct LinkInvariantReport {
    int strands = 1;
    BraidWord word;
    int components = 0;
    std::vector<std::string> variables;  // component variables then "x"
    LaurentPoly with_axis;
    LaurentPoly invariant;
    LaurentPoly alexander;
};

LinkInvariantReport full_report(const BraidWord& w);

}  // namespace braidalex
