#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "burnside/quotient.hpp"

namespace burnside {

inline constexpr int kDefaultPullbackSamples = 1000;

/// Random-instance verification of the fiber-product property: a ghost
/// vector lies in the image of the Burnside ring exactly when its reduction
/// mod n lies in the image subring R. Entries are drawn from [-n^2, n^2];
/// the seed is mixed with the group hash so reports are deterministic.
/// Also probes |G|*e_j for every class (the containment n*C <= image).
bool pullback_check(const MarksTable& t, const QuotientImage& q,
                    int samples = kDefaultPullbackSamples);

/// One verdict of the certificate, with a human-readable evidence note.
struct CertificateCheck {
    std::string name;
    bool pass = false;
    std::string evidence;
};

/// Structured verdicts on every computationally checkable hypothesis of the
/// vanishing argument for the Brauer group of the Burnside ring, for one
/// group. The three inputs that are theorems rather than computations are
/// listed as cited axioms.
struct Certificate {
    std::vector<CertificateCheck> checks; ///< fixed order, see certify()
    std::optional<Int> quotient_ring_order; ///< |R|, recorded when it fits int64
    std::vector<std::pair<Int, int>> local_factors; ///< Z/n = prod Z/p^k per ghost coordinate
    int ghost_copies = 0;                 ///< C(G) = Z^c
    std::array<std::string, 3> cited_axioms;
    std::string conclusion; ///< set only when every check passes

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    const CertificateCheck* first_failure() const {
        for (const auto& c : checks)
            if (!c.pass) return &c;
        return nullptr;
    }
};

Certificate certify(const MarksTable& t, const QuotientImage& q,
                    int pullback_samples = kDefaultPullbackSamples);

} // namespace burnside
