#include "qmf/reports.hpp"

#include <sstream>
#include <stdexcept>

namespace qmf {

namespace {

nlohmann::ordered_json report_body(const CongruenceReport& r) {
    nlohmann::ordered_json j;
    j["claim_id"] = r.claim_id;
    j["modulus"] = r.modulus;
    j["params"] = r.params;
    if (r.q_prime) j["q_prime"] = *r.q_prime;
    j["n_range"] = {r.n_lo, r.n_hi};
    if (!r.skipped.empty()) j["skipped"] = r.skipped;
    j["tested_count"] = r.tested_count;
    auto fails = nlohmann::ordered_json::array();
    for (const auto& f : r.failures) fails.push_back({{"n", f.n}, {"value", f.value}});
    j["failures"] = fails;
    j["pass"] = r.pass;
    return j;
}

}  // namespace

nlohmann::ordered_json CongruenceReport::to_json() const {
    auto j = report_body(*this);
    j["wall_time_ms"] = wall_time_ms;
    return j;
}

std::string CongruenceReport::canonical_body() const { return report_body(*this).dump(); }

CongruenceReport CongruenceReport::from_json(const nlohmann::json& j) {
    CongruenceReport r;
    r.claim_id = j.at("claim_id").get<std::string>();
    r.modulus = j.at("modulus").get<std::int64_t>();
    if (j.contains("params")) r.params = j.at("params");
    if (j.contains("q_prime")) r.q_prime = j.at("q_prime").get<std::int64_t>();
    if (j.contains("n_range")) {
        r.n_lo = j.at("n_range").at(0).get<std::int64_t>();
        r.n_hi = j.at("n_range").at(1).get<std::int64_t>();
    }
    if (j.contains("skipped")) r.skipped = j.at("skipped").get<std::string>();
    r.tested_count = j.at("tested_count").get<std::int64_t>();
    for (const auto& f : j.at("failures"))
        r.failures.push_back({f.at("n").get<std::int64_t>(), f.at("value").get<std::int64_t>()});
    r.pass = j.at("pass").get<bool>();
    if (j.contains("wall_time_ms")) r.wall_time_ms = j.at("wall_time_ms").get<std::int64_t>();
    return r;
}

nlohmann::ordered_json HuntRecord::to_json() const {
    nlohmann::ordered_json j;
    j["m"] = m;
    j["Q"] = Q;
    j["bound"] = bound;
    switch (verdict) {
        case Verdict::pass_to_bound: j["verdict"] = "inconclusive-positive"; break;
        case Verdict::fail: j["verdict"] = "fail"; break;
        case Verdict::inconclusive: j["verdict"] = "inconclusive"; break;
    }
    if (verdict == Verdict::fail) j["fail_n"] = fail_n;
    j["cached_horizon"] = cached_horizon;
    j["wall_time_ms"] = wall_time_ms;
    return j;
}

nlohmann::ordered_json merge_reports(const std::vector<nlohmann::json>& inputs) {
    nlohmann::ordered_json matrix = nlohmann::ordered_json::object();
    for (const auto& in : inputs) {
        auto one = [&matrix](const nlohmann::json& jr) {
            CongruenceReport r = CongruenceReport::from_json(jr);
            auto it = matrix.find(r.claim_id);
            if (it != matrix.end()) {
                CongruenceReport prev = CongruenceReport::from_json(*it);
                if (prev.canonical_body() != r.canonical_body())
                    throw std::runtime_error("merge_reports: conflicting duplicate claim_id " + r.claim_id);
                return;  // identical duplicate is fine
            }
            matrix[r.claim_id] = r.to_json();
        };
        if (in.is_array())
            for (const auto& jr : in) one(jr);
        else
            one(in);
    }
    return matrix;
}

std::string render_report_text(const nlohmann::ordered_json& matrix) {
    std::ostringstream os;
    for (const auto& [id, j] : matrix.items()) {
        bool pass = j.at("pass").get<bool>();
        os << (pass ? "PASS " : "FAIL ") << id << "  mod=" << j.at("modulus").get<std::int64_t>()
           << " tested=" << j.at("tested_count").get<std::int64_t>();
        auto fails = j.at("failures");
        if (!fails.empty()) {
            os << " failures=[";
            for (std::size_t i = 0; i < fails.size() && i < 5; ++i) {
                if (i) os << ", ";
                os << "n=" << fails[i].at("n").get<std::int64_t>()
                   << ":" << fails[i].at("value").get<std::int64_t>();
            }
            if (fails.size() > 5) os << ", ...";
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace qmf
