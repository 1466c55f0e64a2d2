// dfq: command-line front end for the decoherence-free state library.
//
// Subcommands: gen, verify-invariance, dim, table1, complete, bb84,
// distinguish. Every report ends with one machine-readable summary line.
// Exit status: 0 on success/pass, 1 on verification failure, 2 on usage or
// input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <string>
#include <vector>

#include "dfq/bb84.hpp"
#include "dfq/dfstates.hpp"
#include "dfq/dfvec_io.hpp"
#include "dfq/measurement.hpp"
#include "dfq/noise.hpp"
#include "dfq/statevec.hpp"

namespace {

constexpr const char* kLabelList =
    "s | 0 1 | 000 011 101 110 111 hat0 hatplus hat1 hatminus | "
    "0000 0001 0010 0011 0101 0110 0111 1001 1010 1011 1100 1101 1110 1111";

dfq::StateVector state_by_label(const std::string& label) {
    using namespace dfq;
    if (label == "s") return singlet();
    if (label == "hat0" || label == "hatplus" || label == "hat1" ||
        label == "hatminus") {
        const ProtocolState proto = build_protocol_states();
        if (label == "hat0") return proto.comp0;
        if (label == "hatplus") return proto.had_plus;
        if (label == "hat1") return proto.comp1;
        return proto.had_minus;
    }
    try {
        switch (label.size()) {
            case 1:
                return four_qubit_state(label);
            case 3:
                return six_qubit_state(label);
            case 4:
                return eight_qubit_state(label);
            default:
                break;
        }
    } catch (const std::invalid_argument&) {
    }
    throw std::invalid_argument("unknown state label '" + label +
                                "'; valid labels: " + kLabelList);
}

int count_nonzero(const dfq::StateVector& psi) {
    int count = 0;
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        if (psi.amp(k) != dfq::Complex{0.0, 0.0}) ++count;
    }
    return count;
}

int cmd_gen(const std::string& label, const std::string& path) {
    const dfq::StateVector psi = state_by_label(label);
    dfq::write_dfvec(psi, path);
    std::printf("wrote %d-qubit state '%s' (%d nonzero amplitudes) to %s\n",
                psi.n_qubits(), label.c_str(), count_nonzero(psi), path.c_str());
    std::printf("gen %s %d %s\n", label.c_str(), psi.n_qubits(), path.c_str());
    return 0;
}

int cmd_verify_invariance(const std::string& path, int trials, std::uint64_t seed) {
    const dfq::StateVector psi = dfq::read_dfvec(path);
    const double norm_dev = std::abs(psi.norm() - 1.0);
    const double residual = dfq::df_residual(psi);
    const double score = dfq::invariance_score(psi, trials, seed);
    const bool pass = norm_dev <= 1e-12 && score >= 1.0 - 1e-10 && residual < 1e-10;
    std::printf("state: %d qubits, %d nonzero amplitudes, |norm-1| = %.12g\n",
                psi.n_qubits(), count_nonzero(psi), norm_dev);
    std::printf("collective-spin residual max_a ||J_a psi|| = %.12g\n", residual);
    std::printf("min fidelity over %d Haar draws (seed %llu) = %.12g\n", trials,
                static_cast<unsigned long long>(seed), score);
    std::printf("verify-invariance %.12g %.12g %s\n", score, residual,
                pass ? "PASS" : "FAIL");
    return pass ? 0 : 1;
}

int cmd_dim(int n) {
    const dfq::DimensionRecord rec = dfq::df_dimension(n);
    std::printf("DF subspace of %d qubits: dimension %llu, log2 = %.12g, "
                "asymptotic estimate N - (3/2) log2 N = %.12g\n",
                rec.n_qubits, static_cast<unsigned long long>(rec.exact_dim),
                rec.logical_qubits, rec.asymptotic_estimate);
    std::printf("dim %d %llu\n", n, static_cast<unsigned long long>(rec.exact_dim));
    return 0;
}

int cmd_table1() {
    const dfq::Table1Report report = dfq::verify_table1();
    std::fputs(report.to_text().c_str(), stdout);
    return report.all_pass() ? 0 : 1;
}

int cmd_complete(int n, const std::string& write_prefix) {
    using namespace dfq;
    std::vector<StateVector> products;
    std::vector<std::string> product_labels;
    switch (n) {
        case 2:
            product_labels = {"s"};
            break;
        case 4:
            product_labels = {"0"};
            break;
        case 6:
            product_labels = {"000", "011", "101", "110"};
            break;
        case 8:
            product_labels = {"0000", "0011", "0101", "0110", "1001", "1010",
                              "1100", "1111", "0111", "1011", "1101", "1110"};
            break;
        default:
            throw std::invalid_argument("completion is defined for N in {2, 4, 6, 8}");
    }
    for (const std::string& label : product_labels) products.push_back(state_by_label(label));

    const std::vector<StateVector> rest = complete_basis(products, n);
    std::printf("%zu product state(s); completion adds %zu state(s) to span the "
                "%llu-dimensional DF subspace\n",
                products.size(), rest.size(),
                static_cast<unsigned long long>(df_dimension(n).exact_dim));
    for (std::size_t i = 0; i < rest.size(); ++i) {
        std::printf("  state %zu: %d nonzero amplitudes, collective-spin residual %.12g\n",
                    i, count_nonzero(rest[i]), df_residual(rest[i]));
        if (!write_prefix.empty()) {
            const std::string path = write_prefix + "-" + std::to_string(i) + ".dfvec";
            write_dfvec(rest[i], path);
            std::printf("  wrote %s\n", path.c_str());
        }
    }
    std::printf("complete %d %zu\n", n, rest.size());
    return 0;
}

int cmd_bb84(int rounds, const std::string& noise_text, const std::string& eve_text,
             std::uint64_t seed, bool static_noise) {
    using namespace dfq;
    SessionConfig cfg;
    cfg.rounds = rounds;
    cfg.noise = NoiseModel::parse(noise_text);
    cfg.noise.per_round = !static_noise;
    if (eve_text == "none") {
        cfg.eve = EveStrategy::kNone;
    } else if (eve_text == "intercept") {
        cfg.eve = EveStrategy::kInterceptResend;
    } else {
        throw std::invalid_argument("--eve must be 'none' or 'intercept'");
    }
    cfg.rng_seed = seed;

    const SessionStats stats = run_session(cfg);
    std::printf("rounds sent:      %d\n", stats.rounds_sent);
    std::printf("rounds sifted:    %d (fraction %.12g)\n", stats.rounds_sifted,
                stats.sifted_fraction);
    std::printf("errors in sifted: %d\n", stats.errors_in_sifted);
    std::printf("qber:             %.12g\n", stats.qber);
    if (stats.qber_given_eve_wrong_basis) {
        std::printf("qber | eve wrong basis: %.12g (%d errors / %d rounds)\n",
                    *stats.qber_given_eve_wrong_basis, stats.errors_eve_wrong,
                    stats.sifted_eve_wrong);
        std::printf("qber | eve same basis:  %.12g (%d errors / %d rounds)\n",
                    stats.sifted_eve_same == 0
                        ? 0.0
                        : static_cast<double>(stats.errors_eve_same) /
                              stats.sifted_eve_same,
                    stats.errors_eve_same, stats.sifted_eve_same);
    }
    std::printf("bb84 %d %d %d %.12g\n", stats.rounds_sent, stats.rounds_sifted,
                stats.errors_in_sifted, stats.qber);
    return 0;
}

int cmd_distinguish(const std::string& label_a, const std::string& label_b,
                    const std::string& setting_text) {
    using namespace dfq;
    const StateVector a = state_by_label(label_a);
    const StateVector b = state_by_label(label_b);
    const MeasurementSetting setting(setting_text);
    const DiscriminationResult r = discriminate(setting, a, b);
    if (r.success) {
        std::printf("supports are disjoint: one measurement identifies the state\n");
    } else {
        std::printf("supports overlap; best single-shot success probability %.12g\n",
                    r.best_success_prob);
    }
    std::printf("distinguish %s %s %s %s %.12g\n", label_a.c_str(), label_b.c_str(),
                setting_text.c_str(), r.success ? "PASS" : "FAIL",
                r.best_success_prob);
    return r.success ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"decoherence-free state toolkit"};
    app.require_subcommand(1);

    std::string label, path, prefix;
    std::string label_b, setting_text;
    std::string noise_text = "none";
    std::string eve_text = "none";
    int n = 0;
    int trials = 100;
    int rounds = 1000;
    std::uint64_t seed = 0;
    bool static_noise = false;

    CLI::App* gen = app.add_subcommand("gen", "construct a named state and write a DFVEC file");
    gen->add_option("label", label, "state label")->required();
    gen->add_option("output", path, "output path")->required();

    CLI::App* verify = app.add_subcommand(
        "verify-invariance", "check a DFVEC file for collective-unitary invariance");
    verify->add_option("input", path, "DFVEC file")->required();
    verify->add_option("trials", trials, "number of Haar draws")->check(CLI::PositiveNumber);
    verify->add_option("seed", seed, "RNG seed");

    CLI::App* dim = app.add_subcommand("dim", "DF subspace dimension for N qubits");
    dim->add_option("N", n, "even qubit count")->required();

    app.add_subcommand("table1", "verify the pairwise distinguishing measurements");

    CLI::App* complete = app.add_subcommand(
        "complete", "complete the product states to a DF basis");
    complete->add_option("N", n, "qubit count (2, 4, 6 or 8)")->required();
    complete->add_option("--write", prefix, "write completion states to <prefix>-<i>.dfvec");

    CLI::App* bb84 = app.add_subcommand("bb84", "simulate the permutation-based BB84 session");
    bb84->add_option("--rounds", rounds, "number of rounds")->check(CLI::PositiveNumber);
    bb84->add_option("--noise", noise_text,
                     "none | collective-haar | collective-fixed:<8 floats> | independent-haar");
    bb84->add_option("--eve", eve_text, "none | intercept");
    bb84->add_option("--seed", seed, "RNG seed");
    bb84->add_flag("--static-noise", static_noise, "draw the channel once per session");

    CLI::App* dist = app.add_subcommand("distinguish",
                                        "try to discriminate two states with one setting");
    dist->add_option("labelA", label, "first state label")->required();
    dist->add_option("labelB", label_b, "second state label")->required();
    dist->add_option("setting", setting_text, "per-qubit bases over {z, x}")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return cmd_gen(label, path);
        if (verify->parsed()) return cmd_verify_invariance(path, trials, seed);
        if (dim->parsed()) return cmd_dim(n);
        if (app.get_subcommand("table1")->parsed()) return cmd_table1();
        if (complete->parsed()) return cmd_complete(n, prefix);
        if (bb84->parsed()) return cmd_bb84(rounds, noise_text, eve_text, seed, static_noise);
        if (dist->parsed()) return cmd_distinguish(label, label_b, setting_text);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
