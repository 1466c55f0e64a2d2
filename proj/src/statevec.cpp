#include "dfq/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace dfq {

namespace {

void check_qubit_count(int n) {
    if (n < 1 || n > kMaxQubits) {
        throw std::length_error("qubit count " + std::to_string(n) +
                                " outside supported range 1.." +
                                std::to_string(kMaxQubits));
    }
}

}  // namespace

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
    check_qubit_count(n_qubits);
    amplitudes_.assign(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(n_qubits);
    if (amplitudes_.size() != (std::uint64_t{1} << n_qubits)) {
        throw std::invalid_argument("amplitude vector size does not match 2^n_qubits");
    }
}

StateVector StateVector::basis_state(int n_qubits, std::uint64_t index) {
    StateVector psi(n_qubits);
    if (index >= psi.dim()) {
        throw std::out_of_range("basis state index out of range");
    }
    psi.amplitudes_[index] = Complex{1.0, 0.0};
    return psi;
}

double StateVector::norm() const {
    double s = 0.0;
    for (const Complex& a : amplitudes_) s += std::norm(a);
    return std::sqrt(s);
}

bool StateVector::is_normalized(double tol) const {
    double s = 0.0;
    for (const Complex& a : amplitudes_) s += std::norm(a);
    return std::abs(s - 1.0) <= tol;
}

QubitPermutation::QubitPermutation(std::vector<int> mapping)
    : mapping_(std::move(mapping)) {
    const int n = static_cast<int>(mapping_.size());
    check_qubit_count(n);
    std::vector<bool> seen(n, false);
    for (int dest : mapping_) {
        if (dest < 1 || dest > n || seen[dest - 1]) {
            throw std::invalid_argument("permutation mapping is not a bijection on 1..n");
        }
        seen[dest - 1] = true;
    }
}

QubitPermutation QubitPermutation::identity(int n_qubits) {
    std::vector<int> m(n_qubits);
    std::iota(m.begin(), m.end(), 1);
    return QubitPermutation(std::move(m));
}

QubitPermutation QubitPermutation::transposition(int n_qubits, int i, int j) {
    if (i < 1 || i > n_qubits || j < 1 || j > n_qubits) {
        throw std::invalid_argument("transposition index out of range");
    }
    std::vector<int> m(n_qubits);
    std::iota(m.begin(), m.end(), 1);
    std::swap(m[i - 1], m[j - 1]);
    return QubitPermutation(std::move(m));
}

QubitPermutation QubitPermutation::inverse() const {
    std::vector<int> inv(mapping_.size());
    for (int i = 1; i <= n_qubits(); ++i) inv[mapping_[i - 1] - 1] = i;
    return QubitPermutation(std::move(inv));
}

QubitPermutation compose(const QubitPermutation& p, const QubitPermutation& q) {
    if (p.n_qubits() != q.n_qubits()) {
        throw std::invalid_argument("permutation size mismatch in compose");
    }
    std::vector<int> m(q.n_qubits());
    for (int i = 1; i <= q.n_qubits(); ++i) m[i - 1] = p.destination(q.destination(i));
    return QubitPermutation(std::move(m));
}

CollectiveUnitary::CollectiveUnitary(const Mat2& u) : u_(u) {
    // u+u = I check, entrywise.
    const Complex a = std::conj(u.m00) * u.m00 + std::conj(u.m10) * u.m10;
    const Complex b = std::conj(u.m00) * u.m01 + std::conj(u.m10) * u.m11;
    const Complex c = std::conj(u.m01) * u.m00 + std::conj(u.m11) * u.m10;
    const Complex d = std::conj(u.m01) * u.m01 + std::conj(u.m11) * u.m11;
    const double residual =
        std::max(std::max(std::abs(a - 1.0), std::abs(d - 1.0)),
                 std::max(std::abs(b), std::abs(c)));
    if (residual > 1e-12) {
        throw std::invalid_argument("matrix is not unitary (residual " +
                                    std::to_string(residual) + ")");
    }
    // Divide out a phase so det = 1: u / sqrt(det).
    const Complex det = u.m00 * u.m11 - u.m01 * u.m10;
    const Complex s = std::sqrt(det);
    u_.m00 /= s;
    u_.m01 /= s;
    u_.m10 /= s;
    u_.m11 /= s;
}

CollectiveUnitary CollectiveUnitary::identity() {
    return CollectiveUnitary(mat2_identity());
}

StateVector tensor(const StateVector& a, const StateVector& b) {
    const int n = a.n_qubits() + b.n_qubits();
    if (n > kMaxQubits) {
        throw std::length_error("tensor product exceeds " +
                                std::to_string(kMaxQubits) + " qubits");
    }
    std::vector<Complex> out(std::uint64_t{1} << n);
    const std::uint64_t db = b.dim();
    for (std::uint64_t i = 0; i < a.dim(); ++i) {
        for (std::uint64_t j = 0; j < db; ++j) {
            out[i * db + j] = a.amp(i) * b.amp(j);
        }
    }
    return StateVector(n, std::move(out));
}

Complex inner(const StateVector& a, const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("inner product requires equal qubit counts");
    }
    Complex s{0.0, 0.0};
    for (std::uint64_t k = 0; k < a.dim(); ++k) s += std::conj(a.amp(k)) * b.amp(k);
    return s;
}

double fidelity(const StateVector& a, const StateVector& b) {
    return std::abs(inner(a, b));
}

StateVector permute(const QubitPermutation& p, const StateVector& psi) {
    const int n = psi.n_qubits();
    if (p.n_qubits() != n) {
        throw std::invalid_argument("permutation size does not match state");
    }
    // Destination bit position (from the LSB) for each source position.
    std::vector<int> shift(n);
    for (int i = 1; i <= n; ++i) shift[i - 1] = n - p.destination(i);
    std::vector<Complex> out(psi.dim());
    for (std::uint64_t src = 0; src < psi.dim(); ++src) {
        std::uint64_t dst = 0;
        for (int i = 0; i < n; ++i) {
            if (src >> (n - 1 - i) & 1u) dst |= std::uint64_t{1} << shift[i];
        }
        out[dst] = psi.amp(src);
    }
    return StateVector(n, std::move(out));
}

StateVector apply_one_qubit(const Mat2& u, int qubit, const StateVector& psi) {
    const int n = psi.n_qubits();
    if (qubit < 1 || qubit > n) {
        throw std::invalid_argument("qubit position out of range");
    }
    const std::uint64_t mask = std::uint64_t{1} << (n - qubit);
    std::vector<Complex> out(psi.amplitudes());
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        if (k & mask) continue;
        const Complex a0 = out[k];
        const Complex a1 = out[k | mask];
        out[k] = u.m00 * a0 + u.m01 * a1;
        out[k | mask] = u.m10 * a0 + u.m11 * a1;
    }
    return StateVector(n, std::move(out));
}

StateVector apply_collective(const CollectiveUnitary& u, const StateVector& psi) {
    StateVector out = psi;
    for (int q = 1; q <= psi.n_qubits(); ++q) {
        out = apply_one_qubit(u.matrix(), q, out);
    }
    return out;
}

StateVector apply_independent(const std::vector<CollectiveUnitary>& us,
                              const StateVector& psi) {
    if (static_cast<int>(us.size()) != psi.n_qubits()) {
        throw std::invalid_argument("one unitary per qubit required");
    }
    StateVector out = psi;
    for (int q = 1; q <= psi.n_qubits(); ++q) {
        out = apply_one_qubit(us[q - 1].matrix(), q, out);
    }
    return out;
}

std::string to_bitstring(std::uint64_t index, int n_qubits) {
    std::string s(n_qubits, '0');
    for (int i = 0; i < n_qubits; ++i) {
        if (index >> (n_qubits - 1 - i) & 1u) s[i] = '1';
    }
    return s;
}

}  // namespace dfq
