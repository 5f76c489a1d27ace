// qutrit.hpp — operators on the three-qutrit Hilbert space: ladder operators,
// the Duffing-oscillator system Hamiltonian, eigensolve, and bare<->dressed
// state bookkeeping.
#pragma once

#include "tcsim/types.hpp"

#include <map>
#include <optional>
#include <vector>

namespace tcsim {

// Lowering operator of one subsystem embedded in the full tensor space,
// <n-1|b|n> = sqrt(n) on the designated factor, identity elsewhere.
Matrix lowering_operator(Subsystem s, const Dims& dims);

inline Matrix build_ladder(Subsystem s, int levels) {
    return lowering_operator(s, Dims::uniform(levels));
}

// Precomputes the frequency-independent operator content of the Hamiltonian
// so time-dependent assembly is a cheap linear combination.
//
//   H = sum_i 2*pi*( f_i n_i + eta_i/2 n_i(n_i-1) )
//     + sum_{i<j} 2*pi*g_ij ( b_i^+ b_j + b_i b_j^+ - b_i^+ b_j^+ - b_i b_j )
//
// The interaction carries the exchange-positive sign convention of the
// charge-coupling network: the exchange amplitude is +g and the
// counter-rotating amplitude is -g. Counter-rotating terms are kept exactly
// (no rotating-wave approximation); a diagnostic flag removes them to expose
// excitation-number conservation.
class HamiltonianBuilder {
public:
    explicit HamiltonianBuilder(const Dims& dims, bool include_counter_rotating = true);

    const Dims& dims() const { return dims_; }

    Matrix build(const SystemFrequencies& f) const;

    // In-place assembly for hot loops.
    void assemble(const SystemFrequencies& f, Matrix& out) const;

private:
    Dims dims_;
    bool crw_;
    Matrix number_[3];        // b^+ b  (diagonal)
    Matrix anharm_[3];        // b^+ b^+ b b (diagonal)
    Matrix exchange_[3];      // b_i^+ b_j + b_i b_j^+ for pairs (1c), (2c), (12)
    Matrix counter_[3];       // b_i^+ b_j^+ + b_i b_j   for the same pairs
};

Matrix build_hamiltonian(const SystemFrequencies& f, int levels);
Matrix build_hamiltonian(const SystemFrequencies& f, const Dims& dims);

struct EigenSystem {
    RealVector values;  // ascending, rad/ns
    Matrix vectors;     // columns, orthonormal, phase-fixed
};

// Dense Hermitian eigensolve. Throws std::invalid_argument when the input is
// not Hermitian to 1e-12 relative Frobenius norm. Eigenvector phases are fixed
// by making the largest-magnitude component real-positive.
EigenSystem eigen_solve(const Matrix& H);

bool is_hermitian(const Matrix& H, double rel_tol = 1e-12);

// Bare-label <-> eigenstate bookkeeping at a fixed bias point.
//
// Nearly degenerate eigenvalue clusters (gap below cluster_tol, rad/ns) are
// rotated within their eigensubspace toward the bare basis before labeling
// (orthogonal Procrustes). This keeps labels well defined at resonant idles
// where pairs such as |100>/|001> hybridize into +/- combinations. Labeling
// fails with LabelAmbiguityError when the best overlap is below 0.5.
class StateLabeling {
public:
    StateLabeling(const Matrix& H, const Dims& dims,
                  double cluster_tol = kTwoPi * 2e-3);

    const Dims& dims() const { return dims_; }

    int eigen_index(const BasisLabel& lab) const;
    // Basis vector assigned to a label (cluster-rotated where applicable).
    Vector state(const BasisLabel& lab) const;
    // Rayleigh energy <v|H|v> of the assigned vector, rad/ns. Equals the
    // eigenvalue outside clusters.
    double energy(const BasisLabel& lab) const;
    double overlap(const BasisLabel& lab) const;

    // Sum of the two energies spanning span{a, b}: basis-independent within a
    // hybridized pair (used for resonant-qubit ZZ).
    double pair_energy_sum(const BasisLabel& a, const BasisLabel& b) const;

    const Matrix& basis() const { return basis_; }
    const RealVector& energies() const { return energies_; }

    std::map<int, int> assignment() const;  // flat bare index -> column

private:
    Dims dims_;
    Matrix basis_;          // columns: cluster-rotated eigenvectors
    RealVector energies_;   // Rayleigh energies per column
    RealVector eigenvalues_;
    std::vector<int> assign_;    // flat index -> column
    std::vector<double> overlap_;
};

std::map<int, int> label_eigenstates(const Matrix& H, const Dims& dims);

}  // namespace tcsim
