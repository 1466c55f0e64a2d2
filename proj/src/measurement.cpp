#include "dfq/measurement.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "dfq/dfstates.hpp"

namespace dfq {

namespace {

const Mat2 kHadamard = {Complex{1.0, 0.0} / std::sqrt(2.0),
                        Complex{1.0, 0.0} / std::sqrt(2.0),
                        Complex{1.0, 0.0} / std::sqrt(2.0),
                        Complex{-1.0, 0.0} / std::sqrt(2.0)};

void check_length(const MeasurementSetting& s, const StateVector& psi) {
    if (s.n_qubits() != psi.n_qubits()) {
        throw std::invalid_argument("setting length does not match state");
    }
}

}  // namespace

MeasurementSetting::MeasurementSetting(std::string bases) : bases_(std::move(bases)) {
    if (bases_.empty() || bases_.size() > kMaxQubits) {
        throw std::invalid_argument("setting length outside 1.." + std::to_string(kMaxQubits));
    }
    for (char c : bases_) {
        if (c != 'z' && c != 'x') {
            throw std::invalid_argument("setting characters must be z or x");
        }
    }
}

MeasurementSetting MeasurementSetting::permuted(const QubitPermutation& p) const {
    if (p.n_qubits() != n_qubits()) {
        throw std::invalid_argument("permutation size does not match setting");
    }
    std::string out(bases_.size(), '?');
    for (int i = 1; i <= n_qubits(); ++i) out[p.destination(i) - 1] = bases_[i - 1];
    return MeasurementSetting(std::move(out));
}

OutcomeDistribution distribution(const MeasurementSetting& s, const StateVector& psi) {
    check_length(s, psi);
    StateVector rotated = psi;
    for (int q = 1; q <= s.n_qubits(); ++q) {
        if (s.basis(q) == 'x') rotated = apply_one_qubit(kHadamard, q, rotated);
    }
    OutcomeDistribution dist{s, std::vector<double>(psi.dim())};
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        dist.probs[k] = std::norm(rotated.amp(k));
    }
    return dist;
}

namespace {

// Inverse-CDF draw; strict upper_bound never lands on a zero-probability
// outcome, and scaling by the realized total absorbs rounding in the pmf.
std::uint64_t draw(const std::vector<double>& cdf, Rng& rng) {
    if (cdf.back() <= 0.0) {
        throw std::invalid_argument("cannot sample from a zero-norm state");
    }
    const double u = rng.uniform() * cdf.back();
    return std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
}

std::vector<double> cumulative(const std::vector<double>& probs) {
    std::vector<double> cdf(probs.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < probs.size(); ++k) {
        acc += probs[k];
        cdf[k] = acc;
    }
    return cdf;
}

}  // namespace

std::uint64_t sample_one(const MeasurementSetting& s, const StateVector& psi, Rng& rng) {
    return draw(cumulative(distribution(s, psi).probs), rng);
}

std::vector<std::uint64_t> sample(const MeasurementSetting& s, const StateVector& psi,
                                  std::uint64_t rng_seed, int shots) {
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    const std::vector<double> cdf = cumulative(distribution(s, psi).probs);
    Rng rng(rng_seed);
    std::vector<std::uint64_t> out;
    out.reserve(shots);
    for (int t = 0; t < shots; ++t) out.push_back(draw(cdf, rng));
    return out;
}

DiscriminationResult discriminate(const MeasurementSetting& s, const StateVector& a,
                                  const StateVector& b) {
    if (a.n_qubits() != b.n_qubits()) {
        throw std::invalid_argument("states have different qubit counts");
    }
    check_length(s, a);
    const OutcomeDistribution da = distribution(s, a);
    const OutcomeDistribution db = distribution(s, b);

    DiscriminationResult result;
    bool disjoint = true;
    double best = 0.0;
    std::vector<Decision> decision(da.probs.size(), Decision::kImpossible);
    for (std::size_t o = 0; o < da.probs.size(); ++o) {
        const bool in_a = da.probs[o] >= kSupportTol;
        const bool in_b = db.probs[o] >= kSupportTol;
        if (in_a && in_b) disjoint = false;
        if (in_a && !in_b) decision[o] = Decision::kA;
        if (in_b && !in_a) decision[o] = Decision::kB;
        best += std::max(da.probs[o], db.probs[o]);
    }
    result.success = disjoint;
    result.best_success_prob = disjoint ? 1.0 : 0.5 * best;
    if (disjoint) {
        result.discriminator = Discriminator{s, std::move(decision)};
    }
    return result;
}

std::string Table1Report::to_text() const {
    std::string out;
    char buf[160];
    for (const Table1Row& row : rows) {
        std::snprintf(buf, sizeof(buf), "%s %s %s %s %.12g\n", row.label_a.c_str(),
                      row.label_b.c_str(), row.setting.c_str(),
                      row.pass ? "PASS" : "FAIL", row.diagnostic);
        out += buf;
    }
    std::snprintf(buf, sizeof(buf), "table1 %d %d\n", passed, total);
    out += buf;
    return out;
}

Table1Report verify_table1() {
    // The distinguishing setting for each unordered pair of the 6-qubit basis.
    static const struct {
        const char* a;
        const char* b;
        const char* setting;
    } kPairs[] = {
        {"000", "011", "zzxxzz"}, {"000", "101", "zzzzxx"}, {"000", "110", "xxzzzz"},
        {"000", "111", "zzzzzz"}, {"011", "101", "zzxxzz"}, {"011", "110", "zzzzxx"},
        {"011", "111", "xxzzzz"}, {"101", "110", "zzxxzz"}, {"101", "111", "zzxxzz"},
        {"110", "111", "zzzzxx"},
    };

    Table1Report report;
    for (const auto& pair : kPairs) {
        const DiscriminationResult r = discriminate(
            MeasurementSetting(pair.setting), six_qubit_state(pair.a),
            six_qubit_state(pair.b));
        report.rows.push_back(
            {pair.a, pair.b, pair.setting, r.success, r.best_success_prob});
        ++report.total;
        if (r.success) ++report.passed;
    }
    return report;
}

}  // namespace dfq
