#pragma once

#include <string>
#include <vector>

#include "qmf/cache.hpp"
#include "qmf/reports.hpp"

namespace qmf {

struct TheoremParams {
    std::vector<std::int64_t> Qs;  // empty = family defaults
    std::int64_t n_max = 0;        // 0 = family default
};

// Families: mod3-1, mod3-2, mod5, mod7, mod11, mod13-counterexample.
// Q values violating a family's residue condition are rejected up front.
std::vector<CongruenceReport> verify_theorem(const std::string& name, const TheoremParams& p,
                                             CoeffCache& cache);
std::vector<std::string> theorem_names();

// Named identity/structure checks; bound = 0 picks the per-claim default.
// long_mode widens the claims that have an opt-in full-certificate range
// (the Sturm-336 lift relation).
std::vector<CongruenceReport> verify_identity(const std::string& name, std::int64_t bound,
                                              bool long_mode);
std::vector<std::string> identity_names();

// Probes sum pbar(mn) q^n | T(Q^2) = 0 (mod m) up to `bound` for each Q,
// with lambda = (8 + (m mod 8))(m-1)/2 - 1 and trivial character mod 16.
std::vector<HuntRecord> hunt(unsigned m, const std::vector<std::int64_t>& Qs, std::int64_t bound,
                             CoeffCache& cache);

// Exact coefficientwise comparison up to `bound` (modulus 0 in the report).
CongruenceReport exact_compare(const QSeries& f, const QSeries& g, std::int64_t bound,
                               const std::string& claim_id);

}  // namespace qmf
