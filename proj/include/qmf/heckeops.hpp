#pragma once

#include <optional>

#include "qmf/qseries.hpp"

namespace qmf {

// Weight/character/level data the Hecke operators need. The operators never
// infer modularity: they are series transforms whose modular-form claims get
// checked downstream, not assumed.

struct IntWeight {
    std::int64_t k = 0;
    QuadChar chi;
    std::int64_t level = 1;
};

struct HalfIntWeight {
    std::int64_t lambda = 1;  // weight is lambda + 1/2
    QuadChar chi;
    std::int64_t level4N = 4;  // must be divisible by 4

    HalfIntWeight(std::int64_t lam, QuadChar c, std::int64_t lvl);
};

// (sum a(n) q^n) | U(j) = sum a(jn) q^n. Integral exponents required.
QSeries op_U(const QSeries& f, std::int64_t j);

// (sum a(n) q^n) | V(j) = sum a(n) q^(jn).
QSeries op_V(const QSeries& f, std::int64_t j);

// Coefficient n multiplied by (-1)^n; equals 2 f|U(2)|V(2) - f.
QSeries sign_twist(const QSeries& f);

// Integral-weight T(Q): a(Qn) + chi(Q) Q^(k-1) a(n/Q), a(n/Q) = 0 if Q doesn't divide n.
QSeries hecke_T(const QSeries& f, std::int64_t Q, const IntWeight& w);

// Half-integral T(Q^2):
//   a(Q^2 n) + ((-1)^lambda n / Q) chi(Q) Q^(lambda-1) a(n)
//            + chi(Q^2) Q^(2 lambda - 1) a(n/Q^2).
// Q odd prime not dividing the level.
QSeries hecke_T2(const QSeries& f, std::int64_t Q, const HalfIntWeight& w);

// If f|T(Q^2) = mu f coefficientwise up to `bound`, returns mu (a residue in
// mod rings). Requires bound * Q^2 within f's horizon and f nonzero to bound.
std::optional<Int> eigencheck(const QSeries& f, std::int64_t Q, const HalfIntWeight& w,
                              std::int64_t bound);

}  // namespace qmf
