// Prints the force components for a hydrogen-like pair at a few separations,
// the far-field Casimir-Polder form, and a few unit-ratio crossovers.

#include <cstdio>

#include "atomforce/atomforce.hpp"

int main() {
  using namespace atomforce;
  namespace u = atomforce::units;

  PairConfig pair;
  pair.atom1 = {u::charge_to_internal(1.0), u::codata2018.electron_mass, 10.0, 9.38783e8};
  pair.atom2 = {u::charge_to_internal(1.0), u::codata2018.electron_mass, 17.0, 9.38783e8};

  // The dissipative f_C carries the resonance lines, so by itself it is the full force.
  std::printf("%10s %14s %14s %14s %14s\n", "z [nm]", "f_A+f_B", "total", "f_london", "f_cp_far");
  for (double nm : {0.5, 5.0, 50.0, 500.0}) {
    const PairConfig p = pair.at(u::to_internal_length(nm));
    const double intrinsic = forces::f_A(p) + forces::f_B(p);
    const double induced = quadrature::integrate_fc(p).dissipative;
    std::printf("%10.1f %14.6e %14.6e %14.6e %14.6e\n", nm, u::force_to_newtons(intrinsic),
                u::force_to_newtons(induced), u::force_to_newtons(forces::f_london(p)),
                u::force_to_newtons(forces::f_cp_farfield(p)));
  }

  std::printf("\nseparation where P (z/nm)^5 = 1:\n");
  for (double P : {1.0, 0.1, 0.01}) std::printf("  P = %-5g z* = %.4f nm\n", P, analysis::crossover_prefactor_nm(P));
}
