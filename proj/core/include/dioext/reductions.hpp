#pragma once

#include "dioext/dio.hpp"
#include "dioext/gmc.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace dioext {

// One equation's realized data inside a fixed-target instance.
struct InstanceSummand {
  SSetPtr domain;    // the summand model A'_q
  SimplicialMap map; // A'_q -> Y, class (+-2 b_q) x generator
  Gmc gmc;           // sphere-model class carrier into the variable wedge
  BigInt b;          // effective right hand side (after any parity doubling)
};

// Extension problem (X, A, Y, f): does f: A -> Y extend over X?
struct ExtensionProblemInstance {
  std::string kind; // "fixed-target" or "fixed-source"
  SSetPtr X;
  SubsetWitness A;         // face-closed subset of X
  SSetPtr A_space;         // standalone model of the subset
  SimplicialMap include_A; // A_space -> X, hits exactly A.members
  SSetPtr Y;
  SimplicialMap f; // A_space -> Y

  DioSystem system; // as supplied (undoubled)
  int d = 0;
  std::vector<InstanceSummand> summands; // fixed-target: one per equation
};

// a[q][{i, j}] with 0 <= i <= j < r, missing keys meaning zero.
using AnickCoeffs = std::vector<std::map<std::pair<int, int>, BigInt>>;

struct AnickInstance {
  SSetPtr complex;
  int r = 0;
  int s = 0;
  AnickCoeffs a;
  // Geometric cup bases in the chain orders of complex; filled by the
  // builder, empty after a manifest load (verification rebuilds them).
  IntMatrix gens2, gens4;
};

// d even takes a square-free quadratic system, d odd a skew paired system
// (doubled internally).  The instance is solvable-extendable equivalent to
// the input; see the verification report for the oracle readouts.
ExtensionProblemInstance build_fixed_target(int d, const DioSystem& S);
ExtensionProblemInstance build_fixed_source(int d, const DioSystem& S);

AnickInstance build_anick(int r, int s, const AnickCoeffs& a);

struct InstanceCheck {
  std::string name;
  bool pass = false;
  std::string details;
};

struct InstanceReport {
  std::vector<InstanceCheck> checks;
  bool structural_pass = true; // all checks except simplicial-complex ones
  bool all_pass = true;
};

InstanceReport verify_instance(const ExtensionProblemInstance& inst);
InstanceReport verify_instance(const AnickInstance& inst);

} // namespace dioext
