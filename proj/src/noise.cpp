#include "dfq/noise.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace dfq {

NoiseModel NoiseModel::parse(std::string_view text) {
    NoiseModel m;
    if (text == "none") {
        m.kind = NoiseKind::kNone;
        return m;
    }
    if (text == "collective-haar") {
        m.kind = NoiseKind::kCollectiveHaar;
        return m;
    }
    if (text == "independent-haar") {
        m.kind = NoiseKind::kIndependentHaar;
        return m;
    }
    constexpr std::string_view prefix = "collective-fixed:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string rest(text.substr(prefix.size()));
        std::replace(rest.begin(), rest.end(), ',', ' ');
        double v[8];
        char trailing = 0;
        if (std::sscanf(rest.c_str(), "%lf %lf %lf %lf %lf %lf %lf %lf %c", &v[0],
                        &v[1], &v[2], &v[3], &v[4], &v[5], &v[6], &v[7],
                        &trailing) != 8) {
            throw std::invalid_argument(
                "collective-fixed needs exactly 8 comma-separated floats "
                "(re00,im00,re01,im01,re10,im10,re11,im11)");
        }
        m.kind = NoiseKind::kCollectiveFixed;
        m.fixed = CollectiveUnitary(Mat2{{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}});
        return m;
    }
    throw std::invalid_argument("unknown noise model '" + std::string(text) +
                                "' (none, collective-haar, collective-fixed:<8 "
                                "floats>, independent-haar)");
}

std::string NoiseModel::str() const {
    switch (kind) {
        case NoiseKind::kNone:
            return "none";
        case NoiseKind::kCollectiveHaar:
            return "collective-haar";
        case NoiseKind::kIndependentHaar:
            return "independent-haar";
        case NoiseKind::kCollectiveFixed: {
            const Mat2& u = fixed->matrix();
            char buf[256];
            std::snprintf(buf, sizeof(buf),
                          "collective-fixed:%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g",
                          u.m00.real(), u.m00.imag(), u.m01.real(), u.m01.imag(),
                          u.m10.real(), u.m10.imag(), u.m11.real(), u.m11.imag());
            return buf;
        }
    }
    return "none";
}

CollectiveUnitary haar_su2(Rng& rng) {
    const Complex alpha{rng.gaussian(), rng.gaussian()};
    const Complex beta{rng.gaussian(), rng.gaussian()};
    const double len = std::sqrt(std::norm(alpha) + std::norm(beta));
    const Complex a = alpha / len;
    const Complex b = beta / len;
    return CollectiveUnitary(Mat2{a, -std::conj(b), b, std::conj(a)});
}

CollectiveUnitary haar_su2(std::uint64_t rng_seed) {
    Rng rng(rng_seed);
    return haar_su2(rng);
}

StateVector apply_noise(const NoiseModel& m, const StateVector& psi,
                        std::uint64_t rng_seed) {
    switch (m.kind) {
        case NoiseKind::kNone:
            return psi;
        case NoiseKind::kCollectiveFixed:
            return apply_collective(*m.fixed, psi);
        case NoiseKind::kCollectiveHaar:
            return apply_collective(haar_su2(rng_seed), psi);
        case NoiseKind::kIndependentHaar: {
            Rng rng(rng_seed);
            std::vector<CollectiveUnitary> us;
            us.reserve(psi.n_qubits());
            for (int q = 0; q < psi.n_qubits(); ++q) us.push_back(haar_su2(rng));
            return apply_independent(us, psi);
        }
    }
    return psi;
}

double invariance_score(const StateVector& psi, int trials, std::uint64_t rng_seed) {
    if (trials < 1) {
        throw std::invalid_argument("trials must be >= 1");
    }
    double worst = 1.0;
    for (int t = 0; t < trials; ++t) {
        const CollectiveUnitary u = haar_su2(derive_seed(rng_seed, t));
        worst = std::min(worst, fidelity(psi, apply_collective(u, psi)));
    }
    return worst;
}

}  // namespace dfq
