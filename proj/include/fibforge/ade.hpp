// Classification of isolated plane-curve singularities into the simple
// (ADE) types by multiplicity, tangent cone splitting, and Milnor number.
#pragma once

#include <string>

#include "fibforge/jets.hpp"

namespace fibforge {

enum class SingClass { Smooth, A, D, E6, E7, E8, NotSimple, Undetermined };

struct PlaneSingularity {
  SingClass cls = SingClass::Undetermined;
  int multiplicity = 0;
  int milnor = -1;  // -1 = not computed
  std::string tag() const;
  bool is_simple() const {
    return cls == SingClass::A || cls == SingClass::D || cls == SingClass::E6 ||
           cls == SingClass::E7 || cls == SingClass::E8;
  }
};

// The germ must vanish at the origin. Coefficients of the jet are assumed
// valid for total degree < f.trunc(); if the Milnor computation fails to
// stabilize inside that window (or past order 40) the class is Undetermined.
PlaneSingularity classify_plane_singularity(const Jet2& f);

// Milnor number of an isolated singularity, or -1 when the jet window is
// too small to certify it.
int milnor_number(const Jet2& f);

}  // namespace fibforge
