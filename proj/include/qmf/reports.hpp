#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace qmf {

// Result of checking one congruence/identity claim over a coefficient range.
// pass <=> failures empty and at least one n was actually tested, so a green
// report can never rest on a vacuous range.
struct CongruenceReport {
    std::string claim_id;
    std::int64_t modulus = 0;  // 0 = exact comparison
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    std::optional<std::int64_t> q_prime;
    std::int64_t n_lo = 0;
    std::int64_t n_hi = 0;
    std::string skipped;  // description of excluded n (gcd conditions etc.)
    std::int64_t tested_count = 0;
    struct Failure {
        std::int64_t n;
        std::int64_t value;
    };
    std::vector<Failure> failures;
    bool pass = false;
    std::int64_t wall_time_ms = 0;

    void finalize() { pass = failures.empty() && tested_count > 0; }

    nlohmann::ordered_json to_json() const;
    // Deterministic body: everything except wall_time_ms.
    std::string canonical_body() const;
    static CongruenceReport from_json(const nlohmann::json& j);
};

// One hunt probe: did sum pbar(mn) q^n | T(Q^2) vanish mod m up to `bound`?
// "pass" only ever means pass-to-bound; the serialized verdict says so.
struct HuntRecord {
    unsigned m = 0;
    std::int64_t Q = 0;
    std::int64_t bound = 0;
    enum class Verdict { pass_to_bound, fail, inconclusive };
    Verdict verdict = Verdict::inconclusive;
    std::int64_t fail_n = -1;
    std::int64_t cached_horizon = 0;
    std::int64_t wall_time_ms = 0;

    nlohmann::ordered_json to_json() const;
};

// Merges per-claim reports into a reproduction matrix keyed by claim_id.
// Conflicting duplicate claim_ids (same id, different canonical body) are an
// integrity error.
nlohmann::ordered_json merge_reports(const std::vector<nlohmann::json>& inputs);

std::string render_report_text(const nlohmann::ordered_json& matrix);

}  // namespace qmf
