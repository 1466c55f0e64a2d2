#include "dfq/bb84.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dfq/dfstates.hpp"
#include "dfq/rng.hpp"

namespace dfq {

namespace {

// Stream index for the session-static noise draw; round streams use the
// round number, which stays far below this.
constexpr std::uint64_t kStaticNoiseStream = 0xffffffffffffffffull;

Discriminator require_disjoint(const MeasurementSetting& s, const StateVector& a,
                               const StateVector& b, const char* what) {
    DiscriminationResult r = discriminate(s, a, b);
    if (!r.success) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "%s states are not perfectly distinguishable under %s "
                      "(best single-shot success %.12g)",
                      what, s.str().c_str(), r.best_success_prob);
        throw std::runtime_error(buf);
    }
    return std::move(*r.discriminator);
}

int decode(const Discriminator& disc, std::uint64_t outcome, Rng& rng,
           bool* out_of_support) {
    switch (disc.decide(outcome)) {
        case Decision::kA:
            return 0;
        case Decision::kB:
            return 1;
        case Decision::kImpossible:
            break;
    }
    // Outcome outside both supports (possible under Eve or non-collective
    // noise): a fixed-measurement receiver decodes a fair coin.
    *out_of_support = true;
    return rng.bit();
}

}  // namespace

const StateVector& ProtocolState::signal(int bit, int basis) const {
    if (basis == 0) return bit == 0 ? comp0 : comp1;
    return bit == 0 ? had_plus : had_minus;
}

const MeasurementSetting& ProtocolState::setting(int basis) const {
    return basis == 0 ? comp_setting : had_setting;
}

const Discriminator& ProtocolState::disc(int basis) const {
    return basis == 0 ? comp_disc : had_disc;
}

ProtocolState build_protocol_states() {
    const QubitPermutation p13 = QubitPermutation::transposition(6, 1, 3);
    const QubitPermutation p24 = QubitPermutation::transposition(6, 2, 4);

    StateVector comp0 = six_qubit_state("011");
    StateVector had_plus = permute(p13, comp0);
    StateVector comp1 = permute(p24, had_plus);
    StateVector had_minus = permute(p13, comp1);

    MeasurementSetting comp_setting("zzxxzz");
    MeasurementSetting had_setting("xzzxzz");
    Discriminator comp_disc =
        require_disjoint(comp_setting, comp0, comp1, "computational-basis");
    Discriminator had_disc =
        require_disjoint(had_setting, had_plus, had_minus, "Hadamard-basis");

    return ProtocolState{std::move(comp0),       std::move(comp1),
                         std::move(had_plus),    std::move(had_minus),
                         std::move(comp_setting), std::move(had_setting),
                         std::move(comp_disc),   std::move(had_disc)};
}

SessionStats run_session(const SessionConfig& cfg) {
    if (cfg.rounds < 1) {
        throw std::invalid_argument("session needs at least one round");
    }
    if (cfg.noise.kind == NoiseKind::kCollectiveFixed && !cfg.noise.fixed) {
        throw std::invalid_argument("collective-fixed noise model carries no unitary");
    }
    const ProtocolState proto = build_protocol_states();

    // A static model draws its unitary (or per-qubit unitaries) once.
    std::optional<CollectiveUnitary> static_collective;
    std::vector<CollectiveUnitary> static_independent;
    if (!cfg.noise.per_round) {
        Rng rng(derive_seed(cfg.rng_seed, kStaticNoiseStream));
        if (cfg.noise.kind == NoiseKind::kCollectiveHaar) {
            static_collective = haar_su2(rng);
        } else if (cfg.noise.kind == NoiseKind::kIndependentHaar) {
            for (int q = 0; q < 6; ++q) static_independent.push_back(haar_su2(rng));
        }
    }

    SessionStats stats;
    stats.rounds_sent = cfg.rounds;
    stats.transcript.reserve(cfg.rounds);

    for (int round = 0; round < cfg.rounds; ++round) {
        Rng rng(derive_seed(cfg.rng_seed, round));
        RoundRecord rec;
        rec.alice_bit = static_cast<std::uint8_t>(rng.bit());
        rec.alice_basis = static_cast<std::uint8_t>(rng.bit());

        // Channel segment between Alice and the first receiver.
        StateVector flying = proto.signal(rec.alice_bit, rec.alice_basis);
        switch (cfg.noise.kind) {
            case NoiseKind::kNone:
                break;
            case NoiseKind::kCollectiveFixed:
                flying = apply_collective(*cfg.noise.fixed, flying);
                break;
            case NoiseKind::kCollectiveHaar:
                flying = apply_collective(
                    cfg.noise.per_round ? haar_su2(rng) : *static_collective, flying);
                break;
            case NoiseKind::kIndependentHaar:
                if (cfg.noise.per_round) {
                    std::vector<CollectiveUnitary> us;
                    for (int q = 0; q < 6; ++q) us.push_back(haar_su2(rng));
                    flying = apply_independent(us, flying);
                } else {
                    flying = apply_independent(static_independent, flying);
                }
                break;
        }

        if (cfg.eve == EveStrategy::kInterceptResend) {
            const int eve_basis = rng.bit();
            const std::uint64_t outcome =
                sample_one(proto.setting(eve_basis), flying, rng);
            bool oos = false;
            const int eve_bit = decode(proto.disc(eve_basis), outcome, rng, &oos);
            rec.eve_basis = static_cast<std::int8_t>(eve_basis);
            rec.eve_bit = static_cast<std::int8_t>(eve_bit);
            rec.eve_out_of_support = oos;
            // She resends the canonical signal state for her inference.
            flying = proto.signal(eve_bit, eve_basis);
        }

        rec.bob_basis = static_cast<std::uint8_t>(rng.bit());
        const std::uint64_t outcome = sample_one(proto.setting(rec.bob_basis), flying, rng);
        bool oos = false;
        rec.bob_bit = static_cast<std::uint8_t>(
            decode(proto.disc(rec.bob_basis), outcome, rng, &oos));
        rec.bob_out_of_support = oos;

        rec.sifted = rec.alice_basis == rec.bob_basis;
        rec.error = rec.sifted && rec.alice_bit != rec.bob_bit;
        stats.transcript.push_back(rec);
    }

    for (const RoundRecord& rec : stats.transcript) {
        if (!rec.sifted) continue;
        ++stats.rounds_sifted;
        stats.raw_key_alice.push_back(rec.alice_bit);
        stats.raw_key_bob.push_back(rec.bob_bit);
        if (rec.error) ++stats.errors_in_sifted;
        if (rec.eve_basis >= 0) {
            if (rec.eve_basis == static_cast<std::int8_t>(rec.alice_basis)) {
                ++stats.sifted_eve_same;
                if (rec.error) ++stats.errors_eve_same;
            } else {
                ++stats.sifted_eve_wrong;
                if (rec.error) ++stats.errors_eve_wrong;
            }
        }
    }
    stats.sifted_fraction = static_cast<double>(stats.rounds_sifted) / cfg.rounds;
    stats.qber = stats.rounds_sifted == 0
                     ? 0.0
                     : static_cast<double>(stats.errors_in_sifted) / stats.rounds_sifted;
    if (cfg.eve == EveStrategy::kInterceptResend) {
        stats.qber_given_eve_wrong_basis =
            stats.sifted_eve_wrong == 0
                ? 0.0
                : static_cast<double>(stats.errors_eve_wrong) / stats.sifted_eve_wrong;
    }
    return stats;
}

std::string MubReport::to_text() const {
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "cross-basis overlap magnitudes (rows +,-; columns 0,1):\n"
                  "  %.12g %.12g\n  %.12g %.12g\n"
                  "squared: %.12g %.12g %.12g %.12g\n"
                  "within-basis overlaps: comp %.12g, had %.12g\n"
                  "max norm deviation: %.12g\n"
                  "mub %s\n",
                  cross_magnitude[0][0], cross_magnitude[0][1], cross_magnitude[1][0],
                  cross_magnitude[1][1], cross_squared[0][0], cross_squared[0][1],
                  cross_squared[1][0], cross_squared[1][1], within_comp, within_had,
                  diag_norm_dev, pass ? "PASS" : "FAIL");
    return buf;
}

MubReport mutually_unbiased_check() {
    const ProtocolState proto = build_protocol_states();
    const StateVector* comp[2] = {&proto.comp0, &proto.comp1};
    const StateVector* had[2] = {&proto.had_plus, &proto.had_minus};

    MubReport report;
    report.pass = true;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            const double mag = fidelity(*had[i], *comp[j]);
            report.cross_magnitude[i][j] = mag;
            report.cross_squared[i][j] = mag * mag;
            if (std::abs(mag - 0.5) > 1e-12) report.pass = false;
        }
    }
    report.within_comp = fidelity(proto.comp0, proto.comp1);
    report.within_had = fidelity(proto.had_plus, proto.had_minus);
    if (report.within_comp > 1e-12 || report.within_had > 1e-12) report.pass = false;
    for (const StateVector* psi : {comp[0], comp[1], had[0], had[1]}) {
        report.diag_norm_dev =
            std::max(report.diag_norm_dev, std::abs(psi->norm() - 1.0));
    }
    if (report.diag_norm_dev > 1e-12) report.pass = false;
    return report;
}

}  // namespace dfq
