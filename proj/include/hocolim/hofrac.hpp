#pragma once

#include "hocolim/chq.hpp"

namespace hofrac {

// A homotopy-category morphism src -> dst presented as s^{-1} f with both
// legs landing in a common auxiliary complex and s a quasi-isomorphism.
struct Fraction {
  chq::ChainComplex src, dst, aux;
  chq::ChainMap numerator;    // src -> aux
  chq::ChainMap denominator;  // dst -> aux, quasi-iso
};

// Validates endpoints and that s is a quasi-iso (throws otherwise).
Fraction make_fraction(const chq::ChainMap& f, const chq::ChainMap& s);

Fraction identity_fraction(const chq::ChainComplex& a);
// (f, id_dst).
Fraction from_map(const chq::ChainMap& f);

// Gabriel-Zisman composition (t' t)^{-1} (g' f), with the homotopy
// commutative square built through the double mapping cylinder
// aux2 u_B IB u_B aux1.
Fraction compose(const Fraction& second, const Fraction& first);

// Two-sided homotopy inverse of a quasi-iso, with the homotopies exact.
struct HomotopyInverse {
  chq::ChainMap forward;   // s : B -> B'
  chq::ChainMap inverse;   // g : B' -> B
  chq::ChainHomotopy left;   // g.s ~ id_B
  chq::ChainHomotopy right;  // s.g ~ id_B'
};

// Over Q every quasi-iso of bounded complexes is a homotopy equivalence; the
// inverse is read off a contracting homotopy of the acyclic mapping cone.
HomotopyInverse invert_quasi_iso(const chq::ChainMap& s);

// F1 = F2 in the homotopy category of this model, decided by one exact
// linear solve on inverse(s_i).numerator_i.
bool fractions_equal(const Fraction& a, const Fraction& b);

// Equivalent fraction with monic numerator and trivial-monic denominator,
// built from the factorization of f + s.
Fraction normalize(const Fraction& fr);

}  // namespace hofrac
