#pragma once

// Enumeration kernels. Each has a serial reference version and an OpenMP
// version that must return identical results.

#include <optional>
#include <string>
#include <vector>

#include "f1/multipoly.hpp"

namespace f1::kernels {

// --- homomorphism search ----------------------------------------------------

struct EvalTerm {
  Exponents exps;
  unsigned long multiplicity = 1;
};
using EvalSum = std::vector<EvalTerm>;

struct EvalEquation {
  EvalSum lhs;
  EvalSum rhs;
};

/// Assign values to generators so that every constraint holds while the
/// target does not. Inverted generators must receive invertible values.
struct SeparationProblem {
  std::size_t arity = 0;
  std::vector<bool> inverted;
  std::vector<EvalEquation> constraints;
  EvalEquation target;
};

enum class Carrier { NonNegativeRationals, Booleans };

/// Grid values are tried in the order given, assignment k maps generator i to
/// grid[(k / |grid|^i) % |grid|]. Returns the first separating assignment.
std::optional<std::vector<long>> separating_assignment_serial(const SeparationProblem& problem,
                                                              Carrier carrier,
                                                              const std::vector<long>& grid);
std::optional<std::vector<long>> separating_assignment_parallel(const SeparationProblem& problem,
                                                                Carrier carrier,
                                                                const std::vector<long>& grid);

// --- finite field enumeration -------------------------------------------------

/// Number of invertible n x n matrices over F_p by exhaustive enumeration.
unsigned long long count_invertible_serial(int n, int p);
unsigned long long count_invertible_parallel(int n, int p);

/// All k-dimensional subspaces of F_p^n as sorted reduced row echelon forms,
/// obtained by reducing every k-tuple of vectors.
using Rref = std::vector<std::vector<int>>;
std::vector<Rref> subspaces_by_spanning_serial(int n, int k, int p);
std::vector<Rref> subspaces_by_spanning_parallel(int n, int k, int p);

/// Reduced row echelon form over F_p; rows that vanish are dropped.
Rref row_reduce(Rref rows, int p);

}  // namespace f1::kernels
