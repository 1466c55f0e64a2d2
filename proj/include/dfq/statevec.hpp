// Dense n-qubit pure states and the primitive operations on them.
//
// Conventions used throughout the library:
//   * qubit 1 is the most significant bit: |b1 b2 ... bn> maps to the
//     amplitude index sum_i b_i * 2^(n-i), so printed kets read left to
//     right exactly like the stored bitstrings;
//   * |01> means |0> (x) |1>;
//   * states are immutable after construction and every operation is a
//     pure function, so values can be shared freely across threads.

#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace dfq {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 10;
inline constexpr double kNormTol = 1e-12;
inline constexpr double kDefaultTol = 1e-10;

// Plain 2x2 complex matrix, row major.
struct Mat2 {
    Complex m00, m01, m10, m11;
};

inline Mat2 mat2_identity() { return {1.0, 0.0, 0.0, 1.0}; }

class StateVector {
public:
    // Zero vector on n qubits.
    explicit StateVector(int n_qubits);

    // Takes ownership of a full amplitude vector (size must be 2^n).
    StateVector(int n_qubits, std::vector<Complex> amplitudes);

    // Computational basis state |index>.
    static StateVector basis_state(int n_qubits, std::uint64_t index);

    int n_qubits() const { return n_qubits_; }
    std::uint64_t dim() const { return amplitudes_.size(); }

    const Complex& amp(std::uint64_t index) const { return amplitudes_[index]; }
    const std::vector<Complex>& amplitudes() const { return amplitudes_; }

    double norm() const;
    bool is_normalized(double tol = kNormTol) const;

    bool operator==(const StateVector& other) const = default;

private:
    int n_qubits_;
    std::vector<Complex> amplitudes_;
};

// Bijection on qubit positions 1..n; P_ij and compositions.
class QubitPermutation {
public:
    // mapping[i-1] = destination position of qubit i (1-based). Must be a
    // bijection on {1..n}.
    explicit QubitPermutation(std::vector<int> mapping);

    static QubitPermutation identity(int n_qubits);
    static QubitPermutation transposition(int n_qubits, int i, int j);

    int n_qubits() const { return static_cast<int>(mapping_.size()); }
    int destination(int qubit) const { return mapping_[qubit - 1]; }

    QubitPermutation inverse() const;

private:
    std::vector<int> mapping_;
};

// Operator composition: apply q first, then p (P_p P_q as matrices).
QubitPermutation compose(const QubitPermutation& p, const QubitPermutation& q);

// One 2x2 special unitary, applied identically to all qubits as U^(x)n.
// The constructor rejects non-unitary input (residual above 1e-12) and
// divides out a phase so that det(u) = 1.
class CollectiveUnitary {
public:
    explicit CollectiveUnitary(const Mat2& u);

    static CollectiveUnitary identity();

    const Mat2& matrix() const { return u_; }

private:
    Mat2 u_;
};

// --- operations ---------------------------------------------------------

// |a>(x)|b>; throws std::length_error above kMaxQubits combined.
StateVector tensor(const StateVector& a, const StateVector& b);

// <a|b>; conjugate-linear in a.
Complex inner(const StateVector& a, const StateVector& b);

// |<a|b>|.
double fidelity(const StateVector& a, const StateVector& b);

// Relabels qubit positions: the bit at position i moves to p.destination(i).
StateVector permute(const QubitPermutation& p, const StateVector& psi);

// Single-qubit basis change on one position (1-based). u need not be
// special-unitary; this is the raw primitive behind the collective and
// independent channels and the x-basis measurement rotation.
StateVector apply_one_qubit(const Mat2& u, int qubit, const StateVector& psi);

// U^(x)n psi.
StateVector apply_collective(const CollectiveUnitary& u, const StateVector& psi);

// Applies us[i] to qubit i+1; us.size() must equal the qubit count.
StateVector apply_independent(const std::vector<CollectiveUnitary>& us,
                              const StateVector& psi);

// Fixed-width bitstring of an amplitude index, qubit 1 first.
std::string to_bitstring(std::uint64_t index, int n_qubits);

}  // namespace dfq
