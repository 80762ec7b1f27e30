#pragma once

#include <functional>
#include <optional>
#include <set>

#include "qmf/etaquot.hpp"
#include "qmf/qseries.hpp"

namespace qmf {

// Parameters of the lift Sh_t from S_{lambda+1/2}(Gamma_0(4N), chi).
// The induced character is psi_t(n) = chi(n) (-1/n)^lambda (t/n).
struct LiftParams {
    std::int64_t t = 1;  // squarefree
    std::int64_t lambda = 1;
    QuadChar chi;
    std::int64_t level4N = 4;

    LiftParams(std::int64_t t_, std::int64_t lambda_, QuadChar chi_, std::int64_t level4N_);
    int psi(std::int64_t n) const;
};

// A_t(n) = sum_{d|n} psi_t(d) d^(lambda-1) b(t n^2 / d^2), the Dirichlet
// convolution unfolding of the defining identity. The accessor must reach
// t n^2.
Int shimura_A(const std::function<Int(std::int64_t)>& b, const LiftParams& p, std::int64_t n);

// sum_{n>=1} A_t(n) q^n in b's ring, to n_terms coefficients. b must reach
// t (n_terms-1)^2; works with residues as well, since A_t is integrally
// linear in b.
QSeries shimura_lift_series(const QSeries& b, const LiftParams& p, std::int64_t n_terms);

// Zeroes every coefficient with n mod M outside `allowed`.
QSeries restrict_residues(const QSeries& f, std::int64_t M, const std::set<std::int64_t>& allowed);

// The same restriction to n = 1, 5 (mod 6) written through the operators:
// f - f|U(2)|V(2) - f|U(3)|V(3) + f|U(6)|V(6). Kept as an independent route
// for cross-checking restrict_residues.
QSeries restrict_units_mod6_uv(const QSeries& f);

// The eleven eta-quotients spanning the weight-14 level-8 cusp space, in
// order of leading exponent q^1 .. q^11.
std::vector<EtaQuotient> s14_level8_basis();

// Exact forward elimination of f against basis elements with strictly
// increasing leading exponents; returns the rational coordinates, or nullopt
// if a nonzero residual survives at some n <= bound. Two basis elements with
// the same leading exponent are rejected as degenerate.
std::optional<std::vector<Rat>> basis_decompose(const QSeries& f,
                                                const std::vector<QSeries>& basis,
                                                std::int64_t bound);

// Checks sum_{n = 1,5 (6)} A_1(n) q^n = eta^4(6z) (mod 3) up to `bound`,
// with b = eta^6(z) eta^9(2z) expanded mod 3 to bound^2 terms.
CongruenceReport mod3_relation_check(std::int64_t bound);

}  // namespace qmf
