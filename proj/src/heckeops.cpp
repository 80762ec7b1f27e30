#include "qmf/heckeops.hpp"

#include <algorithm>

namespace qmf {

HalfIntWeight::HalfIntWeight(std::int64_t lam, QuadChar c, std::int64_t lvl)
    : lambda(lam), chi(c), level4N(lvl) {
    if (lambda < 1) throw std::invalid_argument("HalfIntWeight: lambda must be >= 1");
    if (level4N % 4 != 0) throw std::invalid_argument("HalfIntWeight: level must be divisible by 4");
}

namespace {

void require_nonneg_integral(const QSeries& f, const char* what) {
    if (!f.integral()) throw GradingError(std::string(what) + ": fractional exponents");
    if (f.lead_n() < 0) throw GradingError(std::string(what) + ": negative leading exponent");
}

// Builds sum_n g(n) q^n (offset 0) in f's ring from an index-only rule.
template <class Fn>
QSeries build_from(const QSeries& f, std::int64_t count, Fn coeff_of) {
    if (count < 1) throw HorizonError("operator result has no valid coefficients");
    if (f.ring().is_exact()) {
        QSeries::ExactVec v(static_cast<std::size_t>(count));
        for (std::int64_t n = 0; n < count; ++n) v[static_cast<std::size_t>(n)] = coeff_of(n);
        return QSeries(f.ring(), 0, std::move(v));
    }
    unsigned m = f.ring().modulus();
    QSeries::ModVec v(static_cast<std::size_t>(count));
    for (std::int64_t n = 0; n < count; ++n) {
        Int r = coeff_of(n) % m;
        if (r < 0) r += m;
        v[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(r.convert_to<unsigned>());
    }
    return QSeries(f.ring(), 0, std::move(v));
}

}  // namespace

QSeries op_U(const QSeries& f, std::int64_t j) {
    if (j < 1) throw std::invalid_argument("op_U: j must be >= 1");
    require_nonneg_integral(f, "op_U");
    return extract_progression(f, j, 0);
}

QSeries op_V(const QSeries& f, std::int64_t j) {
    if (j < 1) throw std::invalid_argument("op_V: j must be >= 1");
    require_nonneg_integral(f, "op_V");
    std::int64_t nmax = f.max_n();
    if (j > 1 && nmax > (std::int64_t(1) << 31) / j)
        throw std::length_error("op_V: dilation exceeds allocation cap");
    std::int64_t count = j * nmax + 1;
    if (f.ring().is_exact()) {
        QSeries::ExactVec v(static_cast<std::size_t>(count));
        for (std::int64_t n = 0; n <= nmax; ++n) v[static_cast<std::size_t>(j * n)] = f.coeff(n);
        return QSeries(f.ring(), 0, std::move(v));
    }
    QSeries::ModVec v(static_cast<std::size_t>(count), 0);
    const auto& src = f.mod_data();
    std::int64_t lead = f.lead_n();
    for (std::int64_t i = 0; i < f.length(); ++i)
        v[static_cast<std::size_t>(j * (lead + i))] = src[static_cast<std::size_t>(i)];
    return QSeries(f.ring(), 0, std::move(v));
}

QSeries sign_twist(const QSeries& f) {
    if (!f.integral()) throw GradingError("sign_twist: fractional exponents");
    std::int64_t lead = f.lead_n();
    if (f.ring().is_exact()) {
        auto v = f.exact_data();
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(v.size()); ++i)
            if ((lead + i) % 2 != 0) v[static_cast<std::size_t>(i)] = -v[static_cast<std::size_t>(i)];
        return QSeries(f.ring(), f.offset24(), std::move(v));
    }
    unsigned m = f.ring().modulus();
    auto v = f.mod_data();
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(v.size()); ++i) {
        auto& x = v[static_cast<std::size_t>(i)];
        if ((lead + i) % 2 != 0 && x) x = static_cast<std::uint8_t>(m - x);
    }
    return QSeries(f.ring(), f.offset24(), std::move(v));
}

QSeries hecke_T(const QSeries& f, std::int64_t Q, const IntWeight& w) {
    if (Q < 2 || !is_prime(static_cast<std::uint64_t>(Q)))
        throw std::invalid_argument("hecke_T: Q must be prime");
    require_nonneg_integral(f, "hecke_T");
    if (w.k < 1) throw std::invalid_argument("hecke_T: weight must be >= 1");
    Int mult = Int(w.chi(Q)) * boost::multiprecision::pow(Int(Q), static_cast<unsigned>(w.k - 1));
    std::int64_t count = f.max_n() / Q + 1;
    return build_from(f, count, [&](std::int64_t n) {
        Int c = f.coeff(Q * n);
        if (mult != 0 && n % Q == 0) c += mult * f.coeff(n / Q);
        return c;
    });
}

QSeries hecke_T2(const QSeries& f, std::int64_t Q, const HalfIntWeight& w) {
    if (Q < 3 || Q % 2 == 0 || !is_prime(static_cast<std::uint64_t>(Q)))
        throw std::invalid_argument("hecke_T2: Q must be an odd prime");
    if (w.level4N % Q == 0) throw std::invalid_argument("hecke_T2: Q divides the level");
    require_nonneg_integral(f, "hecke_T2");

    const std::int64_t q2 = Q * Q;
    // ((-1)^lambda n / Q) is periodic in n mod Q.
    std::vector<int> legendre(static_cast<std::size_t>(Q));
    for (std::int64_t x = 0; x < Q; ++x) legendre[static_cast<std::size_t>(x)] = kronecker(x, Q);
    const int sign_neg1 = (w.lambda % 2 != 0) ? kronecker(-1, Q) : 1;

    const Int mid = Int(w.chi(Q)) * boost::multiprecision::pow(Int(Q), static_cast<unsigned>(w.lambda - 1));
    const Int last = Int(w.chi(Q)) * w.chi(Q) *
                     boost::multiprecision::pow(Int(Q), static_cast<unsigned>(2 * w.lambda - 1));

    std::int64_t count = f.max_n() / q2 + 1;
    return build_from(f, count, [&](std::int64_t n) {
        Int c = f.coeff(q2 * n);
        int kr = legendre[static_cast<std::size_t>(n % Q)] * sign_neg1;
        if (kr != 0) c += Int(kr) * mid * f.coeff(n);
        if (n % q2 == 0) c += last * f.coeff(n / q2);
        return c;
    });
}

std::optional<Int> eigencheck(const QSeries& f, std::int64_t Q, const HalfIntWeight& w,
                              std::int64_t bound) {
    require_nonneg_integral(f, "eigencheck");
    if (bound < 0 || bound * Q * Q > f.max_n())
        throw HorizonError("eigencheck: horizon too small for bound * Q^2");

    std::int64_t pivot = -1;
    for (std::int64_t n = 0; n <= bound; ++n) {
        if (f.coeff(n) != 0) {
            pivot = n;
            break;
        }
    }
    if (pivot < 0) throw std::invalid_argument("eigencheck: series vanishes to bound");

    QSeries g = hecke_T2(f, Q, w);
    Int mu;
    if (f.ring().is_exact()) {
        Int num = g.coeff(pivot), den = f.coeff(pivot), r;
        boost::multiprecision::divide_qr(num, den, mu, r);
        if (r != 0) return std::nullopt;
    } else {
        unsigned m = f.ring().modulus();
        Int den = f.coeff(pivot), inv = 1;
        // den != 0 mod prime m, so den^(m-2) inverts it.
        for (unsigned e = m - 2; e; e >>= 1) {
            if (e & 1) inv = (inv * den) % m;
            den = (den * den) % m;
        }
        mu = (g.coeff(pivot) * inv) % m;
    }
    for (std::int64_t n = 0; n <= bound; ++n) {
        Int want = mu * f.coeff(n);
        if (!f.ring().is_exact()) {
            want %= f.ring().modulus();
            if (want < 0) want += f.ring().modulus();
        }
        if (g.coeff(n) != want) return std::nullopt;
    }
    return mu;
}

}  // namespace qmf
