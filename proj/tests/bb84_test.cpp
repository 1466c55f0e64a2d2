#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dfq/bb84.hpp"
#include "dfq/dfstates.hpp"

using namespace dfq;

TEST_CASE("signal states are permutations of one DF state") {
    const ProtocolState proto = build_protocol_states();
    CHECK(proto.comp0 == six_qubit_state("011"));
    CHECK(proto.comp1 == six_qubit_state("101"));

    const QubitPermutation p13 = QubitPermutation::transposition(6, 1, 3);
    CHECK(proto.had_plus == permute(p13, proto.comp0));
    CHECK(proto.had_minus == permute(p13, proto.comp1));

    for (const StateVector* psi :
         {&proto.comp0, &proto.comp1, &proto.had_plus, &proto.had_minus}) {
        CHECK(psi->is_normalized());
        CHECK(df_residual(*psi) < 1e-10);
    }
}

TEST_CASE("cross-basis overlap magnitudes are exactly one half") {
    const ProtocolState proto = build_protocol_states();
    CHECK(fidelity(proto.had_plus, proto.comp0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(proto.had_minus, proto.comp0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(proto.had_plus, proto.comp1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(proto.had_minus, proto.comp1) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(fidelity(proto.comp0, proto.comp1) < 1e-12);
    CHECK(fidelity(proto.had_plus, proto.had_minus) < 1e-12);
}

TEST_CASE("mutually unbiased check report") {
    const MubReport report = mutually_unbiased_check();
    CHECK(report.pass);
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            CHECK(report.cross_magnitude[i][j] == doctest::Approx(0.5).epsilon(1e-12));
            CHECK(report.cross_squared[i][j] == doctest::Approx(0.25).epsilon(1e-12));
        }
    }
    CHECK(report.within_comp < 1e-12);
    CHECK(report.within_had < 1e-12);
    CHECK(report.to_text().find("mub PASS") != std::string::npos);
}

TEST_CASE("both fixed-setting discriminators exist") {
    const ProtocolState proto = build_protocol_states();
    CHECK(proto.comp_setting.str() == "zzxxzz");
    CHECK(proto.had_setting.str() == "xzzxzz");
    // spot-check a decision: any comp0 support outcome decodes to bit 0
    const OutcomeDistribution d = distribution(proto.comp_setting, proto.comp0);
    for (std::uint64_t o = 0; o < d.probs.size(); ++o) {
        if (d.probs[o] > kSupportTol) {
            CHECK(proto.comp_disc.decide(o) == Decision::kA);
        }
    }
}

TEST_CASE("collective noise does not disturb the session") {
    SessionConfig cfg;
    cfg.rounds = 10000;
    cfg.noise = NoiseModel::parse("collective-haar");
    cfg.eve = EveStrategy::kNone;
    cfg.rng_seed = 42;

    const SessionStats stats = run_session(cfg);
    CHECK(stats.rounds_sent == 10000);
    CHECK(stats.errors_in_sifted == 0);
    CHECK(stats.qber == 0.0);
    CHECK(stats.sifted_fraction > 0.48);
    CHECK(stats.sifted_fraction < 0.52);
    CHECK(stats.raw_key_alice.size() == static_cast<std::size_t>(stats.rounds_sifted));
    CHECK(stats.raw_key_alice == stats.raw_key_bob);
    CHECK_FALSE(stats.qber_given_eve_wrong_basis.has_value());

    // every sifted round decodes correctly, not merely most
    for (const RoundRecord& rec : stats.transcript) {
        if (rec.sifted) {
            CHECK(rec.alice_bit == rec.bob_bit);
            CHECK_FALSE(rec.bob_out_of_support);
        }
    }
}

TEST_CASE("static collective noise behaves like per-round noise for DF signals") {
    SessionConfig cfg;
    cfg.rounds = 2000;
    cfg.noise = NoiseModel::parse("collective-haar");
    cfg.noise.per_round = false;
    cfg.rng_seed = 43;
    const SessionStats stats = run_session(cfg);
    CHECK(stats.qber == 0.0);
    CHECK(stats.errors_in_sifted == 0);
}

TEST_CASE("intercept-resend eavesdropping raises the error rate to one quarter") {
    SessionConfig cfg;
    cfg.rounds = 10000;
    cfg.noise = NoiseModel::parse("none");
    cfg.eve = EveStrategy::kInterceptResend;
    cfg.rng_seed = 7;

    const SessionStats stats = run_session(cfg);
    CHECK(stats.qber > 0.23);
    CHECK(stats.qber < 0.27);
    REQUIRE(stats.qber_given_eve_wrong_basis.has_value());
    CHECK(*stats.qber_given_eve_wrong_basis > 0.47);
    CHECK(*stats.qber_given_eve_wrong_basis < 0.53);

    // Eve in the right basis resends the exact signal state: zero errors there
    CHECK(stats.errors_eve_same == 0);
    CHECK(stats.sifted_eve_same + stats.sifted_eve_wrong == stats.rounds_sifted);
    CHECK(stats.errors_eve_same + stats.errors_eve_wrong == stats.errors_in_sifted);

    // sifting is independent of Eve
    CHECK(stats.sifted_fraction > 0.48);
    CHECK(stats.sifted_fraction < 0.52);
}

TEST_CASE("eavesdropping with collective noise gives the same picture") {
    SessionConfig cfg;
    cfg.rounds = 10000;
    cfg.noise = NoiseModel::parse("collective-haar");
    cfg.eve = EveStrategy::kInterceptResend;
    cfg.rng_seed = 11;
    const SessionStats stats = run_session(cfg);
    CHECK(stats.qber > 0.23);
    CHECK(stats.qber < 0.27);
    CHECK(stats.errors_eve_same == 0);
}

TEST_CASE("sessions are reproducible for a fixed seed") {
    SessionConfig cfg;
    cfg.rounds = 3000;
    cfg.noise = NoiseModel::parse("collective-haar");
    cfg.eve = EveStrategy::kInterceptResend;
    cfg.rng_seed = 314159;
    const SessionStats a = run_session(cfg);
    const SessionStats b = run_session(cfg);
    CHECK(a == b);

    cfg.rng_seed = 314160;
    const SessionStats c = run_session(cfg);
    CHECK(a.transcript != c.transcript);
}

TEST_CASE("session validation and small sessions") {
    SessionConfig cfg;
    cfg.rounds = 0;
    CHECK_THROWS_AS(run_session(cfg), std::invalid_argument);

    cfg.rounds = 1;
    cfg.rng_seed = 5;
    const SessionStats stats = run_session(cfg);
    CHECK(stats.rounds_sent == 1);
    CHECK(stats.transcript.size() == 1);
    CHECK((stats.rounds_sifted == 0 || stats.rounds_sifted == 1));
}
