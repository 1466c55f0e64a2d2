#include "dfq/dfstates.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace dfq {

namespace {

constexpr double kSingularValueTol = 1e-10;
constexpr double kResidualDropTol = 1e-8;
constexpr double kSnapTol = 1e-13;

std::uint64_t binomial(int n, int k) {
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    }
    return r;
}

double factorial(int n) {
    double r = 1.0;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Snap machine noise to exact zero, renormalize, and make the first nonzero
// amplitude in bitstring order real positive.
std::vector<Complex> canonicalize(std::vector<Complex> v) {
    for (Complex& a : v) {
        if (std::abs(a) < kSnapTol) a = Complex{0.0, 0.0};
    }
    double n2 = 0.0;
    for (const Complex& a : v) n2 += std::norm(a);
    const double inv = 1.0 / std::sqrt(n2);
    for (Complex& a : v) a *= inv;
    for (const Complex& a : v) {
        if (a != Complex{0.0, 0.0}) {
            const Complex phase = std::abs(a) / a;
            if (phase != Complex{1.0, 0.0}) {
                for (Complex& b : v) b *= phase;
            }
            break;
        }
    }
    return v;
}

StateVector canonicalize(const StateVector& psi) {
    return StateVector(psi.n_qubits(), canonicalize(psi.amplitudes()));
}

const StateVector& genuine_six_qubit_state() {
    static const StateVector state = [] {
        const std::vector<StateVector> products = {
            six_qubit_state("000"), six_qubit_state("011"),
            six_qubit_state("101"), six_qubit_state("110")};
        std::vector<StateVector> rest = complete_basis(products, 6);
        if (rest.size() != 1) {
            throw std::logic_error("6-qubit completion is not one-dimensional");
        }
        return rest[0];
    }();
    return state;
}

// The completion state printed term by term in the source basis; 36 terms,
// normalizer 1/(4 sqrt(3)).
struct Term8 {
    const char* bits;
    int coeff;
};

constexpr std::array<Term8, 36> kEightQubitCompletionTerms = {{
    {"00010111", 1},  {"00011011", 1},  {"00011101", -1}, {"00011110", -1},
    {"00100111", 1},  {"00101011", 1},  {"00101101", -1}, {"00101110", -1},
    {"00110011", -2}, {"00111100", 2},  {"01000111", -1}, {"01001011", -1},
    {"01001101", 1},  {"01001110", 1},  {"01110001", 1},  {"01110010", 1},
    {"01110100", -1}, {"01111000", -1}, {"10000111", -1}, {"10001011", -1},
    {"10001101", 1},  {"10001110", 1},  {"10110001", 1},  {"10110010", 1},
    {"10110100", -1}, {"10111000", -1}, {"11000011", 2},  {"11001100", -2},
    {"11010001", -1}, {"11010010", -1}, {"11010100", 1},  {"11011000", 1},
    {"11100001", -1}, {"11100010", -1}, {"11100100", 1},  {"11101000", 1},
}};

std::uint64_t bits_to_index(std::string_view bits) {
    std::uint64_t index = 0;
    for (char c : bits) index = (index << 1) | static_cast<std::uint64_t>(c == '1');
    return index;
}

[[noreturn]] void unknown_label(std::string_view label, const char* valid) {
    throw std::invalid_argument("unknown state label '" + std::string(label) +
                                "' (valid: " + valid + ")");
}

}  // namespace

DimensionRecord df_dimension(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::domain_error("DF dimension is defined for even n >= 2");
    }
    if (n > 34) {
        throw std::domain_error("DF dimension overflows 64-bit integers for n > 34");
    }
    DimensionRecord rec;
    rec.n_qubits = n;
    // N!/((N/2)!(N/2+1)!) = C(N, N/2)/(N/2 + 1), always an integer.
    rec.exact_dim = binomial(n, n / 2) / static_cast<std::uint64_t>(n / 2 + 1);
    rec.logical_qubits = std::log2(static_cast<double>(rec.exact_dim));
    rec.asymptotic_estimate = n - 1.5 * std::log2(static_cast<double>(n));
    return rec;
}

StateVector singlet() {
    std::vector<Complex> v(4, Complex{0.0, 0.0});
    const double a = 1.0 / std::sqrt(2.0);
    v[bits_to_index("01")] = Complex{a, 0.0};
    v[bits_to_index("10")] = Complex{-a, 0.0};
    return StateVector(2, std::move(v));
}

StateVector supersinglet(int n_qubits) {
    if (n_qubits != 4 && n_qubits != 8) {
        throw std::invalid_argument("supersinglet is provided for 4 and 8 qubits");
    }
    const int half = n_qubits / 2;
    const double normalizer = factorial(half) * std::sqrt(half + 1.0);
    std::vector<Complex> v(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    for (std::uint64_t k = 0; k < v.size(); ++k) {
        if (std::popcount(k) != half) continue;
        int zeros_front = 0;
        for (int i = 1; i <= half; ++i) {
            if (!(k >> (n_qubits - i) & 1u)) ++zeros_front;
        }
        const double coeff = factorial(zeros_front) * factorial(half - zeros_front) *
                             ((half - zeros_front) % 2 == 0 ? 1.0 : -1.0);
        v[k] = Complex{coeff / normalizer, 0.0};
    }
    return StateVector(n_qubits, std::move(v));
}

StateVector four_qubit_state(std::string_view label) {
    if (label == "0") {
        return tensor(singlet(), singlet());
    }
    if (label == "1") {
        // (2|0011> - |0101> - |0110> - |1001> - |1010> + 2|1100>) / (2 sqrt(3))
        std::vector<Complex> v(16, Complex{0.0, 0.0});
        const double s = 1.0 / (2.0 * std::sqrt(3.0));
        v[bits_to_index("0011")] = Complex{2.0 * s, 0.0};
        v[bits_to_index("0101")] = Complex{-s, 0.0};
        v[bits_to_index("0110")] = Complex{-s, 0.0};
        v[bits_to_index("1001")] = Complex{-s, 0.0};
        v[bits_to_index("1010")] = Complex{-s, 0.0};
        v[bits_to_index("1100")] = Complex{2.0 * s, 0.0};
        return StateVector(4, std::move(v));
    }
    unknown_label(label, "0, 1");
}

StateVector six_qubit_state(std::string_view label) {
    const StateVector s = singlet();
    const StateVector one = four_qubit_state("1");
    if (label == "000") return tensor(tensor(s, s), s);
    if (label == "011") return embed({{s, {1, 2}}, {one, {3, 4, 5, 6}}}, 6);
    if (label == "101") return embed({{s, {3, 4}}, {one, {1, 2, 5, 6}}}, 6);
    if (label == "110") return embed({{s, {5, 6}}, {one, {1, 2, 3, 4}}}, 6);
    if (label == "111") return genuine_six_qubit_state();
    unknown_label(label, "000, 011, 101, 110, 111");
}

StateVector eight_qubit_state(std::string_view label) {
    const StateVector s = singlet();
    const StateVector one = four_qubit_state("1");
    if (label == "0000") return tensor(tensor(tensor(s, s), s), s);
    if (label == "0011") return embed({{s, {1, 2}}, {s, {3, 4}}, {one, {5, 6, 7, 8}}}, 8);
    if (label == "0101") return embed({{s, {1, 2}}, {s, {5, 6}}, {one, {3, 4, 7, 8}}}, 8);
    if (label == "0110") return embed({{s, {1, 2}}, {s, {7, 8}}, {one, {3, 4, 5, 6}}}, 8);
    if (label == "1001") return embed({{s, {3, 4}}, {s, {5, 6}}, {one, {1, 2, 7, 8}}}, 8);
    if (label == "1010") return embed({{s, {3, 4}}, {s, {7, 8}}, {one, {1, 2, 5, 6}}}, 8);
    if (label == "1100") return embed({{s, {5, 6}}, {s, {7, 8}}, {one, {1, 2, 3, 4}}}, 8);
    if (label == "1111") return tensor(one, one);
    const StateVector genuine = six_qubit_state("111");
    if (label == "0111") return embed({{s, {1, 2}}, {genuine, {3, 4, 5, 6, 7, 8}}}, 8);
    if (label == "1011") return embed({{s, {3, 4}}, {genuine, {1, 2, 5, 6, 7, 8}}}, 8);
    if (label == "1101") return embed({{s, {5, 6}}, {genuine, {1, 2, 3, 4, 7, 8}}}, 8);
    if (label == "1110") return embed({{s, {7, 8}}, {genuine, {1, 2, 3, 4, 5, 6}}}, 8);
    if (label == "0001") return supersinglet(8);
    if (label == "0010") {
        std::vector<Complex> v(256, Complex{0.0, 0.0});
        const double scale = 1.0 / (4.0 * std::sqrt(3.0));
        for (const Term8& t : kEightQubitCompletionTerms) {
            v[bits_to_index(t.bits)] = Complex{t.coeff * scale, 0.0};
        }
        return StateVector(8, std::move(v));
    }
    unknown_label(label,
                  "0000, 0001, 0010, 0011, 0101, 0110, 0111, 1001, 1010, 1011, "
                  "1100, 1101, 1110, 1111");
}

DfBasis named_basis(int n) {
    DfBasis basis;
    basis.n_qubits = n;
    switch (n) {
        case 2:
            basis.labels = {"s"};
            basis.states = {singlet()};
            break;
        case 4:
            basis.labels = {"0", "1"};
            for (const std::string& l : basis.labels) basis.states.push_back(four_qubit_state(l));
            break;
        case 6:
            basis.labels = {"000", "011", "101", "110", "111"};
            for (const std::string& l : basis.labels) basis.states.push_back(six_qubit_state(l));
            break;
        case 8:
            basis.labels = {"0000", "0011", "0101", "0110", "1001", "1010", "1100",
                            "1111", "0111", "1011", "1101", "1110", "0001", "0010"};
            for (const std::string& l : basis.labels) basis.states.push_back(eight_qubit_state(l));
            break;
        default:
            throw std::invalid_argument("named bases exist for 2, 4, 6 and 8 qubits");
    }
    return basis;
}

StateVector apply_collective_spin(char axis, const StateVector& psi) {
    const int n = psi.n_qubits();
    std::vector<Complex> out(psi.dim(), Complex{0.0, 0.0});
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        const Complex a = psi.amp(k);
        if (a == Complex{0.0, 0.0}) continue;
        switch (axis) {
            case 'z':
                out[k] += a * (0.5 * (n - 2 * std::popcount(k)));
                break;
            case 'x':
                for (int q = 0; q < n; ++q) {
                    out[k ^ (std::uint64_t{1} << q)] += 0.5 * a;
                }
                break;
            case 'y':
                // sigma_y flips the bit with phase +i on 0->1, -i on 1->0;
                // acting on the source bit value at position q.
                for (int q = 0; q < n; ++q) {
                    const bool bit = k >> q & 1u;
                    const Complex phase = bit ? Complex{0.0, -0.5} : Complex{0.0, 0.5};
                    out[k ^ (std::uint64_t{1} << q)] += phase * a;
                }
                break;
            default:
                throw std::invalid_argument("axis must be one of x, y, z");
        }
    }
    return StateVector(n, std::move(out));
}

double df_residual(const StateVector& psi) {
    double worst = 0.0;
    for (char axis : {'x', 'y', 'z'}) {
        worst = std::max(worst, apply_collective_spin(axis, psi).norm());
    }
    return worst;
}

DfBasis df_subspace_basis(int n) {
    if (n < 2 || n % 2 != 0) {
        throw std::domain_error("DF subspace basis is defined for even n >= 2");
    }
    if (n > 8) {
        throw std::length_error("DF subspace solver supports n <= 8");
    }
    const std::uint64_t dim = std::uint64_t{1} << n;

    // Stack J_x, J_y, J_z into one (3 dim) x dim matrix, column by column.
    Eigen::MatrixXcd stacked(3 * dim, dim);
    for (std::uint64_t col = 0; col < dim; ++col) {
        const StateVector e = StateVector::basis_state(n, col);
        int block = 0;
        for (char axis : {'x', 'y', 'z'}) {
            const StateVector je = apply_collective_spin(axis, e);
            for (std::uint64_t row = 0; row < dim; ++row) {
                stacked(block * dim + row, col) = je.amp(row);
            }
            ++block;
        }
    }

    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(stacked, Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    DfBasis basis;
    basis.n_qubits = n;
    for (Eigen::Index j = 0; j < sv.size(); ++j) {
        if (sv(j) >= kSingularValueTol) continue;
        std::vector<Complex> v(dim);
        for (std::uint64_t row = 0; row < dim; ++row) v[row] = svd.matrixV()(row, j);
        basis.states.push_back(StateVector(n, canonicalize(std::move(v))));
        basis.labels.push_back("v" + std::to_string(basis.states.size() - 1));
    }
    const std::uint64_t expected = df_dimension(n).exact_dim;
    if (basis.states.size() != expected) {
        throw std::logic_error("nullspace dimension " + std::to_string(basis.states.size()) +
                               " does not match the dimension formula " +
                               std::to_string(expected));
    }
    return basis;
}

std::vector<StateVector> complete_basis(const std::vector<StateVector>& existing, int n) {
    for (const StateVector& psi : existing) {
        if (psi.n_qubits() != n) {
            throw std::invalid_argument("existing state has wrong qubit count");
        }
        if (!psi.is_normalized(kDefaultTol)) {
            throw std::invalid_argument("existing states must be normalized");
        }
        if (df_residual(psi) >= kDefaultTol) {
            throw std::invalid_argument("existing states must be decoherence free");
        }
    }
    for (std::size_t i = 0; i < existing.size(); ++i) {
        for (std::size_t j = i + 1; j < existing.size(); ++j) {
            if (std::abs(inner(existing[i], existing[j])) >= kDefaultTol) {
                throw std::invalid_argument("existing states must be orthogonal");
            }
        }
    }

    const DfBasis full = df_subspace_basis(n);
    std::vector<std::vector<Complex>> accepted;
    accepted.reserve(full.size());
    for (const StateVector& psi : existing) accepted.push_back(psi.amplitudes());

    std::vector<StateVector> out;
    const std::uint64_t dim = std::uint64_t{1} << n;
    for (const StateVector& candidate : full.states) {
        std::vector<Complex> w = candidate.amplitudes();
        // Modified Gram-Schmidt with one re-orthogonalization pass.
        for (int pass = 0; pass < 2; ++pass) {
            for (const std::vector<Complex>& a : accepted) {
                Complex proj{0.0, 0.0};
                for (std::uint64_t k = 0; k < dim; ++k) proj += std::conj(a[k]) * w[k];
                for (std::uint64_t k = 0; k < dim; ++k) w[k] -= proj * a[k];
            }
        }
        double n2 = 0.0;
        for (const Complex& c : w) n2 += std::norm(c);
        const double residual = std::sqrt(n2);
        if (residual < kResidualDropTol) continue;
        for (Complex& c : w) c /= residual;
        accepted.push_back(w);
        out.push_back(StateVector(n, canonicalize(std::move(w))));
    }
    return out;
}

StateVector encode_logical(const LogicalEncoding& enc) {
    const StateVector a = six_qubit_state("011");
    const StateVector b = six_qubit_state("101");
    const Complex ca{std::cos(enc.theta), 0.0};
    const Complex cb = std::polar(std::sin(enc.theta), enc.phi);
    std::vector<Complex> v(a.dim());
    for (std::uint64_t k = 0; k < a.dim(); ++k) v[k] = ca * a.amp(k) + cb * b.amp(k);
    return StateVector(6, std::move(v));
}

StateVector embed(const std::vector<std::pair<StateVector, std::vector<int>>>& factors,
                  int n) {
    if (factors.empty()) {
        throw std::invalid_argument("embed requires at least one factor");
    }
    std::vector<int> mapping;
    mapping.reserve(n);
    StateVector product = factors[0].first;
    mapping.insert(mapping.end(), factors[0].second.begin(), factors[0].second.end());
    for (std::size_t f = 1; f < factors.size(); ++f) {
        product = tensor(product, factors[f].first);
        mapping.insert(mapping.end(), factors[f].second.begin(), factors[f].second.end());
    }
    if (product.n_qubits() != n || static_cast<int>(mapping.size()) != n) {
        throw std::invalid_argument("factor positions must partition 1..n");
    }
    return permute(QubitPermutation(std::move(mapping)), product);
}

}  // namespace dfq
