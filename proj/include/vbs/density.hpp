#pragma once

#include "vbs/block_spectrum.hpp"
#include "vbs/chain.hpp"
#include "vbs/fock.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace vbs {

// Raised when a density matrix fails an identity it must satisfy exactly
// (sector symmetry, nonnegative peeled eigenvalues, unit trace).
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact operator on a fully occupied block space.  Because the configuration
// basis is orthogonal but not normalized, matrix entries act through the
// metric:  (rho v)(P) = sum_{P'} rho(P, P') w(P') v(P'), and the trace picks
// up one weight per diagonal entry.
class BlockOperator {
public:
    BlockOperator() = default;
    explicit BlockOperator(FockSpace space) : space_(std::move(space)) {}

    const FockSpace& space() const { return space_; }
    const std::map<std::pair<Config, Config>, Rational>& entries() const { return entries_; }

    void add_entry(const Config& row, const Config& col, const Rational& val);
    Rational entry(const Config& row, const Config& col) const;

    Rational trace() const;
    FockVector apply(const FockVector& v) const;

    bool operator==(const BlockOperator&) const = default;

private:
    FockSpace space_;
    std::map<std::pair<Config, Config>, Rational> entries_;  // zeros never stored
};

// Partial trace of the whole chain's normalized ground-state projector onto
// the block's sites: group the ground state's configurations by their part
// outside the block and accumulate one dyad per group.
BlockOperator reduced_density_matrix(const ChainSpec& chain, const BlockSpec& blk);

// The same operator assembled without touching the environment: a binomially
// weighted sum of dyads of the block's boundary-dressed states.
BlockOperator density_from_boundary_sum(const ChainSpec& chain, const BlockSpec& blk);

// Trace over the configurations with total Sz = M.
Rational sector_trace(const BlockOperator& rho, HalfInt M);

// Eigenvalues via sector peeling: rotational symmetry makes the trace over
// Sz = M equal to sum_{J >= M} Lambda(J), so successive differences walk down
// from the top sector.  Cross-checks (sector symmetry, vanishing differences
// below |j_minus|, nonnegativity, unit total) throw ConsistencyError.
BlockSpectrum spectrum_by_peeling(const BlockOperator& rho, const BlockSpec& blk);

// Rank and eigenvector structure: rho must vanish off the boundary-state span
// and act on each total-spin multiplet inside it as the peeled eigenvalue.
struct ProjectorReport {
    long rank = 0;
    long expected_rank = 0;
    std::vector<std::string> failures;
    bool ok() const { return failures.empty() && rank == expected_rank; }
};

ProjectorReport verify_projector_structure(const BlockOperator& rho, const ChainSpec& chain,
                                           const BlockSpec& blk);

// (von Neumann, Renyi-alpha) in one call.
std::pair<double, double> entropies(const BlockSpectrum& spec, double alpha);

}  // namespace vbs
