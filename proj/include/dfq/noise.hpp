// Collective-noise channels (Haar-sampled or fixed SU(2) applied as U^(x)n),
// an independent per-qubit control channel, and invariance scoring.

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "dfq/rng.hpp"
#include "dfq/statevec.hpp"

namespace dfq {

enum class NoiseKind { kNone, kCollectiveHaar, kCollectiveFixed, kIndependentHaar };

struct NoiseModel {
    NoiseKind kind = NoiseKind::kNone;
    // Fresh draw for every transmission (protocol rounds); a static model
    // draws once per session.
    bool per_round = true;
    std::optional<CollectiveUnitary> fixed;  // kCollectiveFixed only

    // Parses `none`, `collective-haar`, `independent-haar` or
    // `collective-fixed:<8 comma-separated floats>` (re/im pairs, row major).
    static NoiseModel parse(std::string_view text);
    std::string str() const;
};

// Haar-distributed SU(2) element: a unit vector (alpha, beta) of two complex
// Gaussians gives [[alpha, -conj(beta)], [beta, conj(alpha)]].
CollectiveUnitary haar_su2(Rng& rng);
CollectiveUnitary haar_su2(std::uint64_t rng_seed);

StateVector apply_noise(const NoiseModel& m, const StateVector& psi,
                        std::uint64_t rng_seed);

// min over `trials` Haar draws of |<psi|U^(x)n psi>|; DF states score
// >= 1 - 1e-10 regardless of the seed.
double invariance_score(const StateVector& psi, int trials, std::uint64_t rng_seed);

}  // namespace dfq
