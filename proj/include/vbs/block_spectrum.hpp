#pragma once

#include "vbs/numerics.hpp"

#include <map>

namespace vbs {

// Eigenvalues of a block density matrix, one exact value per total boundary
// spin J; the eigenvalue at J occurs with multiplicity 2J+1.
struct BlockSpectrum {
    std::map<HalfInt, Rational> eigenvalues;

    Rational trace() const;   // sum (2J+1) Lambda(J)
    Rational purity() const;  // sum (2J+1) Lambda(J)^2

    double von_neumann_entropy() const;
    // Renyi index alpha != 1; alpha = 1 is the von Neumann limit and throws.
    double renyi_entropy(double alpha) const;
};

}  // namespace vbs
