// Constructors for the named decoherence-free states on 2, 4, 6 and 8
// qubits, the DF-subspace solver, the dimension formula and orthonormal
// basis completion.
//
// A state is decoherence free when it is invariant under U^(x)n for every
// special unitary U, equivalently when it is annihilated by the three
// collective spin operators J_a = (1/2) sum_i sigma_a^(i). The named bases
// here are built from tensor products of singlets and 4-qubit supersinglets
// placed on explicit qubit positions, plus qubit permutations; the one
// state per dimension that no product reaches is derived by orthonormal
// completion inside the DF subspace.
//
// Derived states are canonicalized: amplitudes below 1e-13 are snapped to
// zero and the first nonzero amplitude in bitstring order is made real and
// positive, so repeated runs and file dumps agree bit for bit.

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "dfq/statevec.hpp"

namespace dfq {

struct DimensionRecord {
    int n_qubits = 0;
    std::uint64_t exact_dim = 0;       // N! / ((N/2)! (N/2+1)!), exact
    double logical_qubits = 0.0;       // log2(exact_dim)
    double asymptotic_estimate = 0.0;  // N - (3/2) log2 N
};

// DF-subspace dimension for even N >= 2; throws std::domain_error otherwise.
DimensionRecord df_dimension(int n);

struct DfBasis {
    int n_qubits = 0;
    std::vector<StateVector> states;
    std::vector<std::string> labels;

    std::size_t size() const { return states.size(); }
};

// The 2-qubit singlet (|01> - |10>)/sqrt(2).
StateVector singlet();

// N-qubit supersinglet for N in {4, 8}: sum over the balanced-weight
// bitstrings with coefficient z!(N/2-z)!(-1)^(N/2-z), z = number of zeros
// among the first N/2 positions, normalized by (N/2)! sqrt(N/2+1).
StateVector supersinglet(int n_qubits);

// 4-qubit basis: "0" = double singlet, "1" = the 4-qubit supersinglet.
StateVector four_qubit_state(std::string_view label);

// 6-qubit basis: "000", "011", "101", "110" are singlet/supersinglet
// products; "111" is the orthonormal completion of those four inside the
// DF subspace, phase-pinned so the 000111 amplitude is real positive.
StateVector six_qubit_state(std::string_view label);

// 8-qubit basis: the twelve product states, "0001" = 8-qubit supersinglet,
// "0010" = the remaining completion state (stored explicitly).
StateVector eight_qubit_state(std::string_view label);

// All named states of one size with their labels, in canonical order.
// n in {2, 4, 6, 8}.
DfBasis named_basis(int n);

// Orthonormal basis of the common nullspace of J_x, J_y, J_z, computed from
// the singular value decomposition of the stacked operator matrix (singular
// values below 1e-10 count as zero). n even, n <= 8.
DfBasis df_subspace_basis(int n);

// Orthonormal completion of `existing` inside the n-qubit DF subspace.
// Inputs must be orthonormal and DF to 1e-10; throws std::invalid_argument
// otherwise. Uses modified Gram-Schmidt with one re-orthogonalization pass,
// dropping residuals below 1e-8.
std::vector<StateVector> complete_basis(const std::vector<StateVector>& existing,
                                        int n);

struct LogicalEncoding {
    double theta = 0.0;
    double phi = 0.0;
};

// cos(theta)|011> + e^(i phi) sin(theta)|101>: the logical qubit reached
// from a single 6-qubit DF state by the P24 P13 permutation.
StateVector encode_logical(const LogicalEncoding& enc);

// J_a psi for a in {'x','y','z'}.
StateVector apply_collective_spin(char axis, const StateVector& psi);

// max_a ||J_a psi||; zero (below 1e-10) exactly on DF states.
double df_residual(const StateVector& psi);

// Tensors the factors and places factor qubits on the given 1-based
// positions (position lists concatenated must partition 1..n).
StateVector embed(const std::vector<std::pair<StateVector, std::vector<int>>>& factors,
                  int n);

}  // namespace dfq
