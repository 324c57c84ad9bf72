#pragma once

#include <string>
#include <utility>

namespace confcheck {

/// Outcome of a verification step: accepted, or rejected with a reason
/// that embeds the offending witness (rule, pair, state, valuation).
struct CheckResult {
    bool ok = true;
    std::string reason;

    static CheckResult accept() { return {}; }
    static CheckResult reject(std::string why) { return {false, std::move(why)}; }

    /// Prefixes the reason with the enclosing technique name.
    CheckResult under(const std::string& technique) const {
        if (ok) return *this;
        return reject(technique + ": " + reason);
    }

    explicit operator bool() const { return ok; }
};

}  // namespace confcheck
