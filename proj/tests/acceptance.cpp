// Acceptance suite: one pass/fail line per criterion, nonzero exit if any
// criterion fails. Covers the dimension formula, invariance and
// orthonormality of every named state, the derived completion states, the
// tabulated distinguishing measurements, and the BB84 session statistics.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>
#include <vector>

#include "dfq/bb84.hpp"
#include "dfq/dfstates.hpp"
#include "dfq/measurement.hpp"
#include "dfq/noise.hpp"
#include "dfq/statevec.hpp"

using namespace dfq;

namespace {

int g_passed = 0;
int g_total = 0;

void criterion(int id, bool ok, const std::string& description) {
    ++g_total;
    if (ok) ++g_passed;
    std::printf("criterion %2d: %s — %s\n", id, ok ? "PASS" : "FAIL",
                description.c_str());
}

bool gram_is_identity(const std::vector<StateVector>& states, double tol) {
    for (std::size_t i = 0; i < states.size(); ++i) {
        for (std::size_t j = i; j < states.size(); ++j) {
            const double expected = i == j ? 1.0 : 0.0;
            if (std::abs(inner(states[i], states[j]) - expected) > tol) return false;
        }
    }
    return true;
}

bool anticorrelated_pairs(std::uint64_t k) {
    for (int p = 0; p < 3; ++p) {
        const int b1 = static_cast<int>(k >> (5 - 2 * p) & 1u);
        const int b2 = static_cast<int>(k >> (4 - 2 * p) & 1u);
        if (b1 == b2) return false;
    }
    return true;
}

}  // namespace

int main() {
    // 1. dimension formula and solver agreement
    {
        bool ok = true;
        const std::uint64_t expected[] = {1, 2, 5, 14};
        int i = 0;
        for (int n : {2, 4, 6, 8}) {
            ok = ok && df_dimension(n).exact_dim == expected[i];
            ok = ok && df_subspace_basis(n).size() == expected[i];
            ++i;
        }
        criterion(1, ok, "d(N) = 1, 2, 5, 14 for N = 2, 4, 6, 8 and the nullspace "
                         "solver returns exactly that many vectors");
    }

    // 2. invariance of every named state
    {
        bool ok = true;
        int states = 0;
        for (int n : {2, 4, 6, 8}) {
            for (const StateVector& psi : named_basis(n).states) {
                ++states;
                if (invariance_score(psi, 100, 2024) < 1.0 - 1e-10) ok = false;
                if (df_residual(psi) >= 1e-10) ok = false;
            }
        }
        ok = ok && states == 22;
        criterion(2, ok, "all 22 named states score >= 1 - 1e-10 over 100 Haar draws "
                         "and have ||J_a psi|| < 1e-10");
    }

    // 3. orthonormality of the 6- and 8-qubit bases
    {
        const bool ok = gram_is_identity(named_basis(6).states, 1e-12) &&
                        gram_is_identity(named_basis(8).states, 1e-12);
        criterion(3, ok, "Gram matrices of the 5-state and 14-state bases equal "
                         "the identity within 1e-12");
    }

    // 4. structure of the genuine 6-qubit state
    {
        std::vector<StateVector> products;
        for (const char* label : {"000", "011", "101", "110"}) {
            products.push_back(six_qubit_state(label));
        }
        const std::vector<StateVector> rest = complete_basis(products, 6);
        bool ok = rest.size() == 1;
        if (ok) {
            const StateVector& v = rest[0];
            const double mag = 1.0 / (2.0 * std::sqrt(3.0));
            int nonzero = 0;
            for (std::uint64_t k = 0; k < 64; ++k) {
                const double a = std::abs(v.amp(k));
                if (a > 1e-12) {
                    ++nonzero;
                    if (std::abs(a - mag) > 1e-12) ok = false;
                }
                if (anticorrelated_pairs(k) && a > 1e-12) ok = false;
                if (std::abs(v.amp(k) + v.amp(63 - k)) > 1e-12) ok = false;
            }
            ok = ok && nonzero == 12;
        }
        criterion(4, ok, "the completion of the four product states is one state with "
                         "12 amplitudes of magnitude 1/(2 sqrt 3), vanishing on the 8 "
                         "pairwise-anticorrelated bitstrings, bit-flip antisymmetric");
    }

    // 5. permutation identities, amplitude-wise exact
    {
        const StateVector v011 = six_qubit_state("011");
        const QubitPermutation p24p13 =
            compose(QubitPermutation::transposition(6, 2, 4),
                    QubitPermutation::transposition(6, 1, 3));
        const QubitPermutation p26p15 =
            compose(QubitPermutation::transposition(6, 2, 6),
                    QubitPermutation::transposition(6, 1, 5));
        const bool ok = permute(p24p13, v011) == six_qubit_state("101") &&
                        permute(p26p15, v011) == six_qubit_state("110");
        criterion(5, ok, "P24 P13 |011> = |101> and P26 P15 |011> = |110> exactly");
    }

    // 6. pairwise distinguishing measurements
    {
        const Table1Report report = verify_table1();
        criterion(6, report.passed == 10 && report.total == 10,
                  "all 10 pairs pass disjoint-support discrimination (table1 10 10)");
    }

    // 7. BB84 statics
    {
        bool ok = true;
        try {
            const ProtocolState proto = build_protocol_states();
            const StateVector* comp[2] = {&proto.comp0, &proto.comp1};
            const StateVector* had[2] = {&proto.had_plus, &proto.had_minus};
            for (const StateVector** pair : {comp, had}) {
                if (std::abs(pair[0]->norm() - 1.0) > 1e-12) ok = false;
                if (std::abs(pair[1]->norm() - 1.0) > 1e-12) ok = false;
            }
            if (fidelity(proto.comp0, proto.comp1) > 1e-12) ok = false;
            if (fidelity(proto.had_plus, proto.had_minus) > 1e-12) ok = false;
            for (int i = 0; i < 2; ++i) {
                for (int j = 0; j < 2; ++j) {
                    if (std::abs(fidelity(*had[i], *comp[j]) - 0.5) > 1e-12) ok = false;
                }
            }
        } catch (const std::exception&) {
            ok = false;  // a discriminator could not be built
        }
        criterion(7, ok, "signal-state overlap magnitudes all equal 1/2 within 1e-12, "
                         "both bases are orthonormal, both discriminators exist");
    }

    // 8. BB84 dynamics
    {
        SessionConfig quiet;
        quiet.rounds = 10000;
        quiet.noise = NoiseModel::parse("collective-haar");
        quiet.eve = EveStrategy::kNone;
        quiet.rng_seed = 42;
        const SessionStats a = run_session(quiet);
        bool ok = a.qber == 0.0 && a.errors_in_sifted == 0 &&
                  a.sifted_fraction >= 0.48 && a.sifted_fraction <= 0.52;

        SessionConfig tapped = quiet;
        tapped.eve = EveStrategy::kInterceptResend;
        tapped.rng_seed = 7;
        const SessionStats b = run_session(tapped);
        ok = ok && b.qber >= 0.23 && b.qber <= 0.27;
        ok = ok && b.qber_given_eve_wrong_basis.has_value() &&
             *b.qber_given_eve_wrong_basis >= 0.47 &&
             *b.qber_given_eve_wrong_basis <= 0.53;

        ok = ok && run_session(quiet) == a && run_session(tapped) == b;
        criterion(8, ok, "10^4 rounds: QBER 0 under collective noise without Eve, "
                         "QBER in [0.23, 0.27] and wrong-basis QBER in [0.47, 0.53] "
                         "with Eve, identical stats for identical seeds");
    }

    // 9. 8-qubit residual states
    {
        std::uint64_t sum = 0;
        const std::uint64_t fact[] = {1, 1, 2, 6, 24};
        const std::uint64_t choose4[] = {1, 4, 6, 4, 1};
        for (int z = 0; z <= 4; ++z) {
            const std::uint64_t w = fact[z] * fact[4 - z];
            sum += choose4[z] * choose4[z] * w * w;
        }
        bool ok = sum == 5ull * 24ull * 24ull;
        ok = ok && eight_qubit_state("0001").is_normalized();

        DfBasis basis = named_basis(8);
        std::vector<StateVector> thirteen(basis.states.begin(), basis.states.begin() + 12);
        thirteen.push_back(eight_qubit_state("0001"));
        const std::vector<StateVector> rest = complete_basis(thirteen, 8);
        const StateVector printed = eight_qubit_state("0010");
        ok = ok && rest.size() == 1 && fidelity(rest[0], printed) >= 1.0 - 1e-10;

        const double unit = 2.0 / (4.0 * std::sqrt(3.0));
        ok = ok && std::abs(printed.amp(0b00110011) - Complex{-unit, 0.0}) < 1e-12;
        ok = ok && std::abs(printed.amp(0b00111100) - Complex{unit, 0.0}) < 1e-12;
        criterion(9, ok, "supersinglet normalization identity holds exactly; the "
                         "13-state completion is one state matching the printed "
                         "36-term state with fidelity >= 1 - 1e-10, including the "
                         "-2 and +2 amplitudes at 00110011 and 00111100");
    }

    // 10. falsifiability controls
    {
        bool ok = invariance_score(StateVector::basis_state(6, 0), 100, 5) < 0.999;
        ok = ok && invariance_score(StateVector::basis_state(2, 0b01), 100, 5) < 0.999;

        NoiseModel independent = NoiseModel::parse("independent-haar");
        const StateVector v011 = six_qubit_state("011");
        int below = 0;
        for (int trial = 0; trial < 100; ++trial) {
            if (fidelity(v011, apply_noise(independent, v011, derive_seed(64, trial))) <
                1.0 - 1e-6) {
                ++below;
            }
        }
        ok = ok && below >= 95;
        criterion(10, ok, "|000000> and |01> score below 0.999, and independent "
                          "noise moves |011> on at least 95 of 100 draws");
    }

    std::printf("acceptance %d %d\n", g_passed, g_total);
    return g_passed == g_total ? 0 : 1;
}
