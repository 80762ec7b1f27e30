#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmf/qseries.hpp"
#include "qmf/reports.hpp"

namespace qmf {

// prod_{delta | N} eta(delta z)^{r_delta}. Zero exponents are omitted.
struct EtaQuotient {
    std::int64_t level = 1;
    std::map<std::int64_t, std::int64_t> exps;

    EtaQuotient(std::int64_t N, std::map<std::int64_t, std::int64_t> r);

    std::int64_t weight_num() const;  // sum r_delta; weight is weight_num / 2
    std::int64_t offset24() const;    // sum delta r_delta = leading exponent in 24ths
};

// Gordon-Hughes admissibility: (i) sum delta r_delta = 0 (24),
// (ii) sum N r_delta / delta = 0 (24), (iii) integral weight. The character
// ((-1)^k prod delta^{r_delta} / n) is returned via its squarefree kernel and
// only when (iii) holds.
struct GhResult {
    bool cond1 = false;
    bool cond2 = false;
    bool cond3 = false;
    std::optional<QuadChar> character;
};
GhResult gh_check(const EtaQuotient& eq);

// Martin vanishing orders at the cusps c/d of Gamma_0(N), one representative
// per divisor d (the formula depends on d only; c is the least positive
// integer coprime to d, i.e. 1, kept for report determinism).
// order24 = 24 * (N/24) sum r_delta (d^2,delta^2) / (delta (d^2,N)).
struct CuspOrder {
    std::int64_t d = 1;
    std::int64_t c = 1;
    std::int64_t order24 = 0;
};
struct CuspReport {
    std::int64_t level = 1;
    std::vector<CuspOrder> cusps;

    const CuspOrder& at_denominator(std::int64_t d) const;
    const CuspOrder& at_infinity() const { return at_denominator(level); }
    const CuspOrder& at_zero() const { return at_denominator(1); }
    nlohmann::ordered_json to_json() const;
};
CuspReport martin_orders(const EtaQuotient& eq);

// Expansion of the quotient to n_terms coefficients; offset24 = sum delta r_delta.
QSeries eta_quotient_series(const EtaQuotient& eq, std::int64_t n_terms, const Ring& ring = Ring());

// floor(k_num * N / 24 * prod_{p|N} (1 + 1/p)) where the weight is k_num / 2;
// computed in exact rationals before the floor.
std::int64_t sturm_bound(std::int64_t k_num, std::int64_t level);

// Lists every n <= bound with f(n) != g(n) mod m; pass iff none. Both series
// must reach `bound`, otherwise this throws rather than silently truncating.
CongruenceReport congruence_to_bound(const QSeries& f, const QSeries& g, unsigned m,
                                     std::int64_t bound, const std::string& claim_id);

// Turns a mod-m form into a cusp-form candidate: drops the n = 0 (mod m)
// coefficients via f - f|U(m)|V(m) and multiplies by the mod-m-trivial
// quotient eta^{m^2}(z)/eta(m^2 z) (m >= 5) or eta^27(z)/eta^3(9z) (m = 3).
// Returns the new weight numerator and level 4 N m^2 / (N, m).
struct CuspationResult {
    QSeries series;
    std::int64_t k_num;
    std::int64_t level;
};
CuspationResult cuspation(const QSeries& f, unsigned m, std::int64_t levelN, std::int64_t lambda);

}  // namespace qmf
