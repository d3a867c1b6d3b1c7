#pragma once

// Quantum invariants of the surgered covers M̃_p and first homology of the
// base manifolds M_p.

#include <span>
#include <vector>

#include "qcover/skein.hpp"
#include "qcover/smith.hpp"

namespace qcover {

// A (strands, strands) torus link of +1-framed Hopf fibers plus a 0-framed
// unknot encircling it, each component decorated by a skein element.
struct HopfSatellite {
  int strands = 0;
  SkeinElem cable_decor;
  SkeinElem zero_decor;
};

// Bracket of the decorated satellite. The 0-framed component is traded for
// a +1-framed fiber decorated by t^{-1}(zero_decor); the p identical cable
// decorations are collapsed by multinomial counting over coefficient
// multiplicities. The OpenMP kernel splits the multiplicity vectors across
// threads; the serial variant is the reference it is tested against.
CycNum bracket_satellite(const HopfSatellite& s);
CycNum bracket_satellite_serial(const HopfSatellite& s);

// Σ over all tuples (j_1, ..., j_c) of Π coeff_{j_i}(decoration_i) · H(Σ j_i):
// the bracket of c Hopf fibers (framing +1) with one decoration each.
// Exponential in the component count; used as an oracle.
CycNum hopf_fibers_bracket(long p, std::span<const SkeinElem> decorations);

// η^{p+2} ⟨L'_p(Ω_p)⟩ for p ∈ {5, 7}.
CycNum invariant_Mtilde(long p);

// (1-ζ_p)-adic valuation of ⟨M̃_p⟩_p through the squared value, which needs
// only η². Throws InternalInconsistency if the squared valuation is odd.
long invariant_valuation(long p);

IntMatrix linking_matrix_Mp(long p);

struct AbelianGroup {
  std::size_t free_rank = 0;
  std::vector<mpz_class> torsion;  // invariant factors > 1, each dividing the next
  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;
};

// Cokernel of the presentation matrix.
AbelianGroup homology_from_matrix(const IntMatrix& m);

}  // namespace qcover
