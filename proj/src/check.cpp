#include "confcheck/certificate.hpp"

namespace confcheck {

Verdict check_certificate(const Trs& trs, const Certificate& cert) {
    CheckResult result = CheckResult::accept();
    try {
        result = std::visit(
            [&](const auto& proof) -> CheckResult {
                using T = std::decay_t<decltype(proof)>;
                if constexpr (std::is_same_v<T, ConfluenceProof>) {
                    return std::visit(
                        [&](const auto& node) -> CheckResult {
                            using P = std::decay_t<decltype(node)>;
                            if constexpr (std::is_same_v<P, WeaklyOrthogonalProof>) {
                                return check_weakly_orthogonal(trs).under("weakly-orthogonal");
                            } else if constexpr (std::is_same_v<P, StronglyClosedProof>) {
                                return check_strongly_closed(trs, node.bound)
                                    .under("strongly-closed");
                            } else {
                                return check_terminating_confluent(trs, node.rounds, node.method)
                                    .under("terminating");
                            }
                        },
                        proof.node);
                } else {
                    return check_nonconfluence_proof(trs, proof);
                }
            },
            cert.node);
    } catch (const std::exception& e) {
        result = CheckResult::reject(std::string("malformed certificate: ") + e.what());
    }
    return {result.ok, result.reason};
}

}  // namespace confcheck
