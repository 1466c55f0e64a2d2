// Fixed single-qubit Pauli-product measurements: outcome distributions,
// sampling, and single-copy discrimination of state pairs.
//
// A setting is a string over {z, x}, one character per qubit. Outcome bit 0
// stands for the +1 eigenvalue and bit 1 for the -1 eigenvalue of the
// chosen Pauli; x positions are read out by a Hadamard rotation followed by
// a computational-basis measurement.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfq/rng.hpp"
#include "dfq/statevec.hpp"

namespace dfq {

// Probabilities below this count as outside a state's outcome support; all
// true nonzero outcome probabilities of the named DF states are >= 1/48.
inline constexpr double kSupportTol = 1e-12;

class MeasurementSetting {
public:
    explicit MeasurementSetting(std::string bases);

    int n_qubits() const { return static_cast<int>(bases_.size()); }
    char basis(int qubit) const { return bases_[qubit - 1]; }
    const std::string& str() const { return bases_; }

    // Setting that measures permute(p, psi) the way this one measures psi:
    // the character for qubit i moves to position p.destination(i).
    MeasurementSetting permuted(const QubitPermutation& p) const;

    bool operator==(const MeasurementSetting& other) const = default;

private:
    std::string bases_;
};

struct OutcomeDistribution {
    MeasurementSetting setting;
    std::vector<double> probs;  // indexed by outcome bitstring
};

OutcomeDistribution distribution(const MeasurementSetting& s, const StateVector& psi);

// One outcome drawn from distribution(s, psi) using the caller's stream.
std::uint64_t sample_one(const MeasurementSetting& s, const StateVector& psi, Rng& rng);

// shots i.i.d. outcomes; deterministic for a fixed seed.
std::vector<std::uint64_t> sample(const MeasurementSetting& s, const StateVector& psi,
                                  std::uint64_t rng_seed, int shots);

enum class Decision : unsigned char { kA, kB, kImpossible };

struct Discriminator {
    MeasurementSetting setting;
    std::vector<Decision> decision;  // indexed by outcome bitstring

    Decision decide(std::uint64_t outcome) const { return decision[outcome]; }
};

struct DiscriminationResult {
    bool success = false;
    std::optional<Discriminator> discriminator;  // present on success
    // 1 on success; otherwise the best single-shot success probability
    // (1/2) sum_o max(p_a, p_b) achievable with this setting.
    double best_success_prob = 0.0;
};

// Perfect single-copy discrimination: succeeds iff the outcome supports of
// a and b under s are disjoint (per-outcome min probability < kSupportTol).
DiscriminationResult discriminate(const MeasurementSetting& s, const StateVector& a,
                                  const StateVector& b);

struct Table1Row {
    std::string label_a;
    std::string label_b;
    std::string setting;
    bool pass = false;
    double diagnostic = 0.0;  // single-shot success probability
};

struct Table1Report {
    std::vector<Table1Row> rows;
    int passed = 0;
    int total = 0;

    bool all_pass() const { return passed == total; }
    // One line per pair plus the machine summary `table1 <passed> <total>`.
    std::string to_text() const;
};

// Checks the tabulated distinguishing settings for all 10 pairs of the five
// 6-qubit basis states.
Table1Report verify_table1();

}  // namespace dfq
