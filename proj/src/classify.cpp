#include "smooth/classify.hpp"

#include "smooth/tables.hpp"

namespace smooth {

ClassificationReport classify_cp2(int k) {
  ClassificationReport rep;
  rep.k = k;
  switch (k) {
    case 3:
      rep.representatives = {"CP2 x S^3"};
      rep.inertia_group = theta(7);
      rep.notes = {"inertia group I(CP2 x S^3) = Θ_7 (cited result on products with spheres)",
                   "tangential homotopy equivalence to CP2 x S^3 implies diffeomorphism (cited remark)"};
      break;
    case 4:
    case 5:
      rep.representatives = {"CP2 x S^" + std::to_string(k)};
      rep.inertia_group = theta(4 + k);
      rep.notes = {"Theorem B(a): every smooth N homeomorphic to CP2 x S^" + std::to_string(k) +
                       " is oriented diffeomorphic to it",
                   "corollary of Theorem B: inertia group equals Θ_" + std::to_string(4 + k)};
      break;
    case 6:
      rep.representatives = {"CP2 x S^6", "(CP2 x S^6) # Σ_α1", "(CP2 x S^6) # Σ_α1^-1"};
      rep.inertia_group = FinAbGroup::cyclic(2);
      rep.notes = {"Theorem B(b): three oriented diffeomorphism classes; Σ_α1 is the exotic 10-sphere of order 3",
                   "inertia group of CP2 x S^6 is Z/2",
                   "tangential classification theorem: the same three classes cover manifolds tangentially "
                   "homotopy equivalent to CP2 x S^6"};
      break;
    default:
      throw UnsupportedError("classify-cp2 supports k = 3..6, got " + std::to_string(k));
  }
  rep.diffeo_class_count = static_cast<int>(rep.representatives.size());
  return rep;
}

}  // namespace smooth
