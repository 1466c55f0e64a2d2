// Permutation-based BB84 over 6-qubit decoherence-free states.
//
// All four signal states are qubit permutations of one DF state:
//   |0^> = |011>,  |+^> = P13|0^>,  |1^> = P24|+^> = |101>,  |-^> = P13|1^>.
// The computational pair is read out with the fixed setting zzxxzz and the
// Hadamard pair with xzzxzz; within each basis the two outcome supports are
// disjoint, so one transmission decodes one bit.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfq/measurement.hpp"
#include "dfq/noise.hpp"
#include "dfq/statevec.hpp"

namespace dfq {

struct ProtocolState {
    StateVector comp0, comp1, had_plus, had_minus;
    MeasurementSetting comp_setting, had_setting;
    Discriminator comp_disc, had_disc;

    const StateVector& signal(int bit, int basis) const;
    const MeasurementSetting& setting(int basis) const;
    const Discriminator& disc(int basis) const;
};

// Builds the four signal states from |011> and permutations and derives both
// fixed-setting discriminators; throws std::runtime_error if either support
// pair fails to be disjoint.
ProtocolState build_protocol_states();

enum class EveStrategy { kNone, kInterceptResend };

struct SessionConfig {
    int rounds = 1;
    NoiseModel noise;
    EveStrategy eve = EveStrategy::kNone;
    std::uint64_t rng_seed = 0;
};

struct RoundRecord {
    std::uint8_t alice_bit = 0;
    std::uint8_t alice_basis = 0;  // 0 computational, 1 Hadamard
    std::int8_t eve_basis = -1;    // -1 when Eve is absent
    std::int8_t eve_bit = -1;
    bool eve_out_of_support = false;
    std::uint8_t bob_basis = 0;
    std::uint8_t bob_bit = 0;
    bool bob_out_of_support = false;
    bool sifted = false;
    bool error = false;

    bool operator==(const RoundRecord&) const = default;
};

struct SessionStats {
    int rounds_sent = 0;
    int rounds_sifted = 0;
    int errors_in_sifted = 0;
    double sifted_fraction = 0.0;
    double qber = 0.0;
    // Present only when Eve runs: error rate over sifted rounds where her
    // basis differed from Alice's.
    std::optional<double> qber_given_eve_wrong_basis;

    int sifted_eve_same = 0;
    int errors_eve_same = 0;
    int sifted_eve_wrong = 0;
    int errors_eve_wrong = 0;

    std::vector<std::uint8_t> raw_key_alice;  // bits of sifted rounds, in order
    std::vector<std::uint8_t> raw_key_bob;
    std::vector<RoundRecord> transcript;

    bool operator==(const SessionStats&) const = default;
};

// Runs the session; per-round randomness comes from streams derived from
// cfg.rng_seed, so identical configs give identical stats and keys.
SessionStats run_session(const SessionConfig& cfg);

struct MubReport {
    // |<had_i|comp_j>| for i, j in {0, 1} (rows +,-; columns 0,1).
    double cross_magnitude[2][2] = {};
    double cross_squared[2][2] = {};
    double within_comp = 0.0;  // |<0^|1^>|
    double within_had = 0.0;   // |<+^|-^>|
    double diag_norm_dev = 0.0;
    bool pass = false;

    std::string to_text() const;
};

// Verifies the cross-basis overlap magnitudes (all exactly 1/2) and the
// orthonormality of both bases.
MubReport mutually_unbiased_check();

}  // namespace dfq
