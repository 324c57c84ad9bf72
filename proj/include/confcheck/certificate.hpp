#pragma once

#include <string>
#include <variant>

#include "confcheck/confluence.hpp"
#include "confcheck/nonjoin.hpp"

namespace confcheck {

struct WeaklyOrthogonalProof {};
struct StronglyClosedProof {
    std::size_t bound = 0;
};
struct TerminatingProof {
    std::vector<LinearPolyInterp> rounds;  // rule-removal rounds, applied in order
    JoinMethod method;
};

struct ConfluenceProof {
    std::variant<WeaklyOrthogonalProof, StronglyClosedProof, TerminatingProof> node;
};

struct Certificate {
    std::variant<ConfluenceProof, NonConfluenceProof> node;
};

struct Verdict {
    bool certified = false;
    std::string message;  // rejection reason with technique path and witness

    std::string verdict_line() const {
        return certified ? "CERTIFIED" : "REJECTED: " + message;
    }
};

/// Dispatches the certificate to the matching checker. Malformed
/// certificates are rejected, never a crash.
Verdict check_certificate(const Trs& trs, const Certificate& cert);

}  // namespace confcheck
