#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "qmf/arith.hpp"

namespace qmf {

// Everything here is graded in units of q^(1/24): a series stores offset24
// and coefficient index i holds the coefficient of q^((offset24 + 24 i)/24).
// Every expansion in scope has unit-q steps after its fractional prefix, so
// only the offset ever carries a denominator.

struct RingMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct GradingError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct HorizonError : std::out_of_range {
    using std::out_of_range::out_of_range;
};
struct NonUnitLead : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InexactDivision : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DegenerateBasis : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Coefficient ring: exact integers, or residues mod an odd prime m < 256.
// Residues are stored one byte each, which is what keeps the 4.3e7-term
// runs inside a ~43 MB footprint.
class Ring {
public:
    Ring() = default;  // exact
    static Ring exact() { return Ring(); }
    static Ring mod(unsigned m);

    bool is_exact() const { return m_ == 0; }
    unsigned modulus() const { return m_; }
    bool operator==(const Ring&) const = default;

private:
    std::uint16_t m_ = 0;
};

class QSeries {
public:
    using ExactVec = std::vector<Int>;
    using ModVec = std::vector<std::uint8_t>;

    QSeries(Ring ring, std::int64_t offset24, ExactVec coeffs);
    QSeries(Ring ring, std::int64_t offset24, ModVec coeffs);

    static QSeries zeros(const Ring& ring, std::int64_t offset24, std::int64_t n_coeffs);
    // The constant series 1 with the given horizon.
    static QSeries unit(const Ring& ring, std::int64_t n_coeffs);

    const Ring& ring() const { return ring_; }
    std::int64_t offset24() const { return offset24_; }

    // Index of the last valid coefficient; indices beyond it are unspecified
    // and reading them throws (never silently zero).
    std::int64_t valid_to() const { return length() - 1; }
    std::int64_t length() const;

    // Coefficient by storage index.
    Int at(std::int64_t i) const;

    // Integer-exponent view: requires offset24 % 24 == 0.
    bool integral() const { return offset24_ % 24 == 0; }
    std::int64_t lead_n() const;             // offset24 / 24
    std::int64_t max_n() const;              // lead_n() + valid_to()
    Int coeff(std::int64_t n) const;         // 0 below lead_n, throws past max_n

    std::int64_t nonzero_count() const;
    // (index, coefficient) pairs of the nonzero entries.
    std::vector<std::pair<std::int64_t, Int>> support() const;

    const ExactVec& exact_data() const;
    const ModVec& mod_data() const;

private:
    Ring ring_;
    std::int64_t offset24_ = 0;
    std::variant<ExactVec, ModVec> coeffs_;
};

// ---- arithmetic ----

// Coefficientwise convolution; offsets add, horizons take the min. Picks a
// sparse x dense path on its own when one operand has few nonzero terms.
QSeries mul(const QSeries& a, const QSeries& b);
QSeries add(const QSeries& a, const QSeries& b);
QSeries sub(const QSeries& a, const QSeries& b);
QSeries negate(const QSeries& a);
QSeries scale(const QSeries& a, const Int& c);

// Reciprocal to n_terms coefficients via the sparse recurrence
//   c(n) = -a(0)^{-1} sum_{k>=1} a(k) c(n-k)
// over the nonzero a(k) only: O(n_terms * nnz(a)). Constant term must be a
// unit; result offset24 = -a.offset24.
QSeries inverse(const QSeries& a, std::int64_t n_terms);

// Binary powering, truncated to a's horizon; negative e goes through inverse.
QSeries pow(const QSeries& a, std::int64_t e);

// Quotient with remainder check: throws InexactDivision if a is not
// divisible by b over the ring up to the shared horizon.
QSeries div_exact(const QSeries& a, const QSeries& b);

QSeries reduce_mod(const QSeries& a, unsigned m);

// Strips leading zero coefficients, moving offset24 up in steps of 24.
// Never applied implicitly.
QSeries normalized(const QSeries& a);

// Multiply by q^k (offset24 moves by 24k).
QSeries shift_q(const QSeries& a, std::int64_t k);

// Sum_n a(Mn + r) q^n for integral series with lead_n >= 0.
QSeries extract_progression(const QSeries& a, std::int64_t M, std::int64_t r);

// Equal after normalization: same ring, same offset24, coefficients agree on
// the common valid range.
bool same_series(const QSeries& a, const QSeries& b);

inline QSeries operator*(const QSeries& a, const QSeries& b) { return mul(a, b); }
inline QSeries operator+(const QSeries& a, const QSeries& b) { return add(a, b); }
inline QSeries operator-(const QSeries& a, const QSeries& b) { return sub(a, b); }
inline QSeries operator*(const Int& c, const QSeries& a) { return scale(a, c); }

// ---- generators ----
// All take the number of coefficients to produce (valid_to = n_terms - 1).

// eta(delta z) = q^(delta/24) prod (1 - q^(delta n)); pentagonal support.
QSeries eta_series(std::int64_t delta, std::int64_t n_terms, const Ring& ring = Ring());

// (q^step; q^step)_inf, the eta product without its fractional prefix.
QSeries euler_product(std::int64_t step, std::int64_t n_terms, const Ring& ring = Ring());

// phi(q) = sum_{n in Z} q^(n^2),  psi(q) = sum_{n>=0} q^(n(n+1)/2).
QSeries theta_phi(std::int64_t n_terms, const Ring& ring = Ring());
QSeries theta_phi_neg(std::int64_t n_terms, const Ring& ring = Ring());  // phi(-q)
QSeries theta_psi(std::int64_t n_terms, const Ring& ring = Ring());

// phi_{s,t}(q) = phi(q)^s (2 q^(1/4) psi(q^2))^t with 4 | t, so exponents are
// integral; offset24 = 6t.
QSeries phi_st(std::int64_t s, std::int64_t t, std::int64_t n_terms, const Ring& ring = Ring());

// a(q) = phi(-q^3) and b(q) = (q;q)(q^6;q^6)^2 / ((q^2;q^2)(q^3;q^3)).
std::pair<QSeries, QSeries> ahs_generators(std::int64_t n_terms, const Ring& ring = Ring());

// E4, E6, E10 with exact integer coefficients.
QSeries eisenstein(int k, std::int64_t n_terms);

// sum pbar(n) q^n = 1/phi(-q); the O(N sqrt N) reciprocal makes the
// 4.3e7-coefficient runs feasible.
QSeries overpartition_series(std::int64_t n_terms, const Ring& ring = Ring());

}  // namespace qmf
