#include "qmf/qseries.hpp"

#include <algorithm>
#include <cstring>

namespace qmf {

// ---------------------------------------------------------------------------
// Ring
// ---------------------------------------------------------------------------

Ring Ring::mod(unsigned m) {
    if (m <= 2 || m >= 256 || !is_prime(m))
        throw std::invalid_argument("Ring::mod: modulus must be an odd prime < 256");
    Ring r;
    r.m_ = static_cast<std::uint16_t>(m);
    return r;
}

// ---------------------------------------------------------------------------
// QSeries basics
// ---------------------------------------------------------------------------

QSeries::QSeries(Ring ring, std::int64_t offset24, ExactVec coeffs)
    : ring_(ring), offset24_(offset24), coeffs_(std::move(coeffs)) {
    if (!ring_.is_exact()) throw RingMismatch("QSeries: exact storage needs the exact ring");
    if (std::get<ExactVec>(coeffs_).empty()) throw HorizonError("QSeries: empty coefficient vector");
}

QSeries::QSeries(Ring ring, std::int64_t offset24, ModVec coeffs)
    : ring_(ring), offset24_(offset24), coeffs_(std::move(coeffs)) {
    if (ring_.is_exact()) throw RingMismatch("QSeries: byte storage needs a mod ring");
    const auto& v = std::get<ModVec>(coeffs_);
    if (v.empty()) throw HorizonError("QSeries: empty coefficient vector");
    for (auto b : v)
        if (b >= ring_.modulus()) throw RingMismatch("QSeries: residue out of range");
}

QSeries QSeries::zeros(const Ring& ring, std::int64_t offset24, std::int64_t n_coeffs) {
    if (n_coeffs < 1) throw HorizonError("QSeries::zeros: need at least one coefficient");
    if (ring.is_exact()) return QSeries(ring, offset24, ExactVec(static_cast<std::size_t>(n_coeffs)));
    return QSeries(ring, offset24, ModVec(static_cast<std::size_t>(n_coeffs), 0));
}

QSeries QSeries::unit(const Ring& ring, std::int64_t n_coeffs) {
    QSeries s = zeros(ring, 0, n_coeffs);
    if (ring.is_exact())
        std::get<ExactVec>(s.coeffs_)[0] = 1;
    else
        std::get<ModVec>(s.coeffs_)[0] = 1;
    return s;
}

std::int64_t QSeries::length() const {
    return std::visit([](const auto& v) { return static_cast<std::int64_t>(v.size()); }, coeffs_);
}

Int QSeries::at(std::int64_t i) const {
    if (i < 0 || i > valid_to()) throw HorizonError("QSeries::at: index beyond validity horizon");
    if (ring_.is_exact()) return std::get<ExactVec>(coeffs_)[static_cast<std::size_t>(i)];
    return Int(std::get<ModVec>(coeffs_)[static_cast<std::size_t>(i)]);
}

std::int64_t QSeries::lead_n() const {
    if (!integral()) throw GradingError("QSeries: fractional exponents, no integer grading");
    return offset24_ / 24;
}

std::int64_t QSeries::max_n() const { return lead_n() + valid_to(); }

Int QSeries::coeff(std::int64_t n) const {
    std::int64_t lead = lead_n();
    if (n < lead) return Int(0);
    if (n > max_n()) throw HorizonError("QSeries::coeff: exponent beyond validity horizon");
    return at(n - lead);
}

std::int64_t QSeries::nonzero_count() const {
    return std::visit(
        [](const auto& v) {
            std::int64_t c = 0;
            for (const auto& x : v)
                if (x != 0) ++c;
            return c;
        },
        coeffs_);
}

std::vector<std::pair<std::int64_t, Int>> QSeries::support() const {
    std::vector<std::pair<std::int64_t, Int>> out;
    std::visit(
        [&](const auto& v) {
            for (std::size_t i = 0; i < v.size(); ++i)
                if (v[i] != 0) out.emplace_back(static_cast<std::int64_t>(i), Int(v[i]));
        },
        coeffs_);
    return out;
}

const QSeries::ExactVec& QSeries::exact_data() const {
    if (!ring_.is_exact()) throw RingMismatch("QSeries::exact_data on mod-ring series");
    return std::get<ExactVec>(coeffs_);
}

const QSeries::ModVec& QSeries::mod_data() const {
    if (ring_.is_exact()) throw RingMismatch("QSeries::mod_data on exact series");
    return std::get<ModVec>(coeffs_);
}

// ---------------------------------------------------------------------------
// Multiplication
// ---------------------------------------------------------------------------

namespace {

struct ModTerm {
    std::int64_t k;
    std::uint32_t v;
};

std::vector<ModTerm> mod_nonzeros(const QSeries::ModVec& a, std::int64_t limit) {
    std::vector<ModTerm> t;
    std::int64_t n = std::min<std::int64_t>(limit, static_cast<std::int64_t>(a.size()));
    for (std::int64_t i = 0; i < n; ++i)
        if (a[static_cast<std::size_t>(i)]) t.push_back({i, a[static_cast<std::size_t>(i)]});
    return t;
}

QSeries::ModVec mul_mod(const QSeries::ModVec& x, const QSeries::ModVec& y, unsigned m,
                        std::int64_t out_len) {
    auto tx = mod_nonzeros(x, out_len);
    auto ty = mod_nonzeros(y, out_len);
    const auto& outer = (tx.size() <= ty.size()) ? tx : ty;
    const auto& dense = (tx.size() <= ty.size()) ? y : x;
    std::int64_t dense_len = std::min<std::int64_t>(out_len, static_cast<std::int64_t>(dense.size()));

    std::vector<std::uint32_t> acc(static_cast<std::size_t>(out_len), 0);
    const std::uint64_t max_prod = static_cast<std::uint64_t>(m - 1) * (m - 1);
    const std::uint64_t row_limit = max_prod ? 0xFFFFFFFFull / max_prod : 0xFFFFFFFFull;

    std::uint64_t rows = 0;
    for (const auto& t : outer) {
        if (t.k >= out_len) break;
        const std::uint8_t* src = dense.data();
        std::uint32_t* dst = acc.data() + t.k;
        std::int64_t len = std::min(dense_len, out_len - t.k);
        std::uint32_t v = t.v;
        for (std::int64_t j = 0; j < len; ++j) dst[j] += v * static_cast<std::uint32_t>(src[j]);
        if (++rows >= row_limit) {
            for (auto& a : acc) a %= m;
            rows = 0;
        }
    }

    QSeries::ModVec out(static_cast<std::size_t>(out_len));
    for (std::int64_t i = 0; i < out_len; ++i)
        out[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(acc[static_cast<std::size_t>(i)] % m);
    return out;
}

QSeries::ExactVec mul_exact(const QSeries::ExactVec& x, const QSeries::ExactVec& y,
                            std::int64_t out_len) {
    auto count_nnz = [out_len](const QSeries::ExactVec& v) {
        std::int64_t c = 0;
        std::int64_t n = std::min<std::int64_t>(out_len, static_cast<std::int64_t>(v.size()));
        for (std::int64_t i = 0; i < n; ++i)
            if (v[static_cast<std::size_t>(i)] != 0) ++c;
        return c;
    };
    const bool x_outer = count_nnz(x) <= count_nnz(y);
    const auto& outer = x_outer ? x : y;
    const auto& dense = x_outer ? y : x;
    std::int64_t outer_len = std::min<std::int64_t>(out_len, static_cast<std::int64_t>(outer.size()));
    std::int64_t dense_len = std::min<std::int64_t>(out_len, static_cast<std::int64_t>(dense.size()));

    QSeries::ExactVec out(static_cast<std::size_t>(out_len));
    for (std::int64_t i = 0; i < outer_len; ++i) {
        const Int& v = outer[static_cast<std::size_t>(i)];
        if (v == 0) continue;
        std::int64_t len = std::min(dense_len, out_len - i);
        Int* dst = out.data() + i;
        const Int* src = dense.data();
        if (v == 1) {
            for (std::int64_t j = 0; j < len; ++j) dst[j] += src[j];
        } else if (v == -1) {
            for (std::int64_t j = 0; j < len; ++j) dst[j] -= src[j];
        } else {
            for (std::int64_t j = 0; j < len; ++j)
                if (src[j] != 0) dst[j] += v * src[j];
        }
    }
    return out;
}

void check_same_ring(const QSeries& a, const QSeries& b, const char* what) {
    if (!(a.ring() == b.ring())) throw RingMismatch(std::string(what) + ": ring mismatch");
}

}  // namespace

QSeries mul(const QSeries& a, const QSeries& b) {
    check_same_ring(a, b, "mul");
    std::int64_t out_len = std::min(a.length(), b.length());
    std::int64_t off = a.offset24() + b.offset24();
    if (a.ring().is_exact()) return QSeries(a.ring(), off, mul_exact(a.exact_data(), b.exact_data(), out_len));
    return QSeries(a.ring(), off, mul_mod(a.mod_data(), b.mod_data(), a.ring().modulus(), out_len));
}

// ---------------------------------------------------------------------------
// Addition
// ---------------------------------------------------------------------------

namespace {

template <class Vec, class AddFn>
Vec add_aligned(const Vec& a, std::int64_t sa, const Vec& b, std::int64_t sb, std::int64_t len,
                AddFn combine) {
    Vec out(static_cast<std::size_t>(len));
    for (std::int64_t i = 0; i < len; ++i) {
        bool ia = i >= sa && (i - sa) < static_cast<std::int64_t>(a.size());
        bool ib = i >= sb && (i - sb) < static_cast<std::int64_t>(b.size());
        out[static_cast<std::size_t>(i)] =
            combine(ia ? a[static_cast<std::size_t>(i - sa)] : typename Vec::value_type(),
                    ib ? b[static_cast<std::size_t>(i - sb)] : typename Vec::value_type());
    }
    return out;
}

}  // namespace

QSeries add(const QSeries& a, const QSeries& b) {
    check_same_ring(a, b, "add");
    if ((a.offset24() - b.offset24()) % 24 != 0)
        throw GradingError("add: offsets differ by a fraction of a full power");
    std::int64_t off = std::min(a.offset24(), b.offset24());
    std::int64_t sa = (a.offset24() - off) / 24;
    std::int64_t sb = (b.offset24() - off) / 24;
    std::int64_t len = std::min(sa + a.length(), sb + b.length());
    if (a.ring().is_exact()) {
        auto out = add_aligned(a.exact_data(), sa, b.exact_data(), sb, len,
                               [](const Int& x, const Int& y) { return x + y; });
        return QSeries(a.ring(), off, std::move(out));
    }
    unsigned m = a.ring().modulus();
    auto out = add_aligned(a.mod_data(), sa, b.mod_data(), sb, len,
                           [m](std::uint8_t x, std::uint8_t y) {
                               return static_cast<std::uint8_t>((x + y) % m);
                           });
    return QSeries(a.ring(), off, std::move(out));
}

QSeries negate(const QSeries& a) {
    if (a.ring().is_exact()) {
        auto v = a.exact_data();
        for (auto& x : v) x = -x;
        return QSeries(a.ring(), a.offset24(), std::move(v));
    }
    unsigned m = a.ring().modulus();
    auto v = a.mod_data();
    for (auto& x : v) x = static_cast<std::uint8_t>(x ? m - x : 0);
    return QSeries(a.ring(), a.offset24(), std::move(v));
}

QSeries sub(const QSeries& a, const QSeries& b) { return add(a, negate(b)); }

QSeries scale(const QSeries& a, const Int& c) {
    if (a.ring().is_exact()) {
        auto v = a.exact_data();
        for (auto& x : v) x *= c;
        return QSeries(a.ring(), a.offset24(), std::move(v));
    }
    unsigned m = a.ring().modulus();
    Int cr = c % m;
    if (cr < 0) cr += m;
    auto cm = cr.convert_to<std::uint32_t>();
    auto v = a.mod_data();
    for (auto& x : v) x = static_cast<std::uint8_t>((cm * x) % m);
    return QSeries(a.ring(), a.offset24(), std::move(v));
}

// ---------------------------------------------------------------------------
// Reciprocal
// ---------------------------------------------------------------------------

namespace {

std::uint32_t mod_inverse(std::uint32_t a, unsigned m) {
    // m prime; a != 0 mod m.
    std::uint64_t r = 1, b = a % m;
    unsigned e = m - 2;
    while (e) {
        if (e & 1) r = (r * b) % m;
        b = (b * b) % m;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

QSeries::ExactVec inv_exact(const QSeries::ExactVec& a, std::int64_t n_terms) {
    const Int& a0 = a[0];
    if (a0 != 1 && a0 != -1)
        throw NonUnitLead("inverse: constant term is not a unit over the integers");
    std::vector<std::pair<std::int64_t, const Int*>> terms;
    std::int64_t alen = std::min<std::int64_t>(n_terms, static_cast<std::int64_t>(a.size()));
    for (std::int64_t k = 1; k < alen; ++k)
        if (a[static_cast<std::size_t>(k)] != 0) terms.emplace_back(k, &a[static_cast<std::size_t>(k)]);

    QSeries::ExactVec c(static_cast<std::size_t>(n_terms));
    c[0] = a0;  // 1/(+-1)
    const bool pos = (a0 == 1);
    for (std::int64_t n = 1; n < n_terms; ++n) {
        Int s = 0;
        for (const auto& [k, v] : terms) {
            if (k > n) break;
            s += (*v) * c[static_cast<std::size_t>(n - k)];
        }
        c[static_cast<std::size_t>(n)] = pos ? Int(-s) : s;
    }
    return c;
}

// Blocked sparse recurrence mod m. For each output block the contributions
// from earlier blocks are streamed per nonzero divisor term (contiguous
// source runs, so the compiler can vectorize), and only the strides shorter
// than the block need the sequential scalar pass.
QSeries::ModVec inv_mod(const QSeries::ModVec& a, unsigned m, std::int64_t n_terms) {
    if (a[0] == 0) throw NonUnitLead("inverse: constant term is zero mod m");
    std::int64_t alen = std::min<std::int64_t>(n_terms, static_cast<std::int64_t>(a.size()));
    std::vector<ModTerm> terms;
    for (std::int64_t k = 1; k < alen; ++k)
        if (a[static_cast<std::size_t>(k)]) terms.push_back({k, a[static_cast<std::size_t>(k)]});

    const std::uint32_t inv0 = mod_inverse(a[0], m);
    QSeries::ModVec c(static_cast<std::size_t>(n_terms), 0);
    c[0] = static_cast<std::uint8_t>(inv0);
    if (n_terms == 1) return c;

    constexpr std::int64_t B = 1 << 15;
    std::size_t small_count = 0;
    while (small_count < terms.size() && terms[small_count].k < B) ++small_count;

    const std::uint64_t max_prod = static_cast<std::uint64_t>(m - 1) * (m - 1);
    const std::size_t chunk = static_cast<std::size_t>(std::max<std::uint64_t>(1, 0xFFFFFFFFull / std::max<std::uint64_t>(1, max_prod)));

    std::vector<std::uint32_t> acc(B);
    for (std::int64_t lo = 0; lo < n_terms; lo += B) {
        std::int64_t hi = std::min(lo + B, n_terms);
        std::fill(acc.begin(), acc.begin() + (hi - lo), 0u);

        std::size_t done = 0;
        while (done < terms.size()) {
            std::size_t stop = std::min(terms.size(), done + chunk);
            for (std::size_t ti = done; ti < stop; ++ti) {
                const auto& t = terms[ti];
                std::int64_t n_begin = std::max(lo, t.k);
                std::int64_t n_end = std::min(hi, lo + t.k);
                if (n_begin >= n_end) continue;
                const std::uint8_t* src = c.data() + (n_begin - t.k);
                std::uint32_t* dst = acc.data() + (n_begin - lo);
                std::uint32_t v = t.v;
                std::int64_t len = n_end - n_begin;
                for (std::int64_t i = 0; i < len; ++i) dst[i] += v * static_cast<std::uint32_t>(src[i]);
            }
            done = stop;
            if (done < terms.size())
                for (std::int64_t i = 0; i < hi - lo; ++i) acc[static_cast<std::size_t>(i)] %= m;
        }

        for (std::int64_t n = std::max<std::int64_t>(lo, 1); n < hi; ++n) {
            std::uint64_t s = acc[static_cast<std::size_t>(n - lo)];
            for (std::size_t ti = 0; ti < small_count; ++ti) {
                const auto& t = terms[ti];
                if (t.k > n - lo) break;
                s += static_cast<std::uint64_t>(t.v) * c[static_cast<std::size_t>(n - t.k)];
            }
            std::uint32_t r = static_cast<std::uint32_t>(s % m);
            c[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>((inv0 * (m - r)) % m);
        }
    }
    return c;
}

}  // namespace

QSeries inverse(const QSeries& a, std::int64_t n_terms) {
    if (n_terms < 1) throw HorizonError("inverse: need at least one term");
    if (a.ring().is_exact())
        return QSeries(a.ring(), -a.offset24(), inv_exact(a.exact_data(), n_terms));
    return QSeries(a.ring(), -a.offset24(), inv_mod(a.mod_data(), a.ring().modulus(), n_terms));
}

QSeries pow(const QSeries& a, std::int64_t e) {
    if (e < 0) return pow(inverse(a, a.length()), -e);
    QSeries result = QSeries::unit(a.ring(), a.length());
    if (e == 0) return result;
    QSeries base = a;
    for (;;) {
        if (e & 1) result = mul(result, base);
        e >>= 1;
        if (!e) break;
        base = mul(base, base);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Exact division
// ---------------------------------------------------------------------------

QSeries div_exact(const QSeries& a, const QSeries& b) {
    check_same_ring(a, b, "div_exact");
    QSeries na = normalized(a);
    QSeries nb = normalized(b);
    if (nb.nonzero_count() == 0) throw NonUnitLead("div_exact: division by zero series");
    std::int64_t len = std::min(na.length(), nb.length());
    std::int64_t off = na.offset24() - nb.offset24();

    if (a.ring().is_exact()) {
        const auto& av = na.exact_data();
        const auto& bv = nb.exact_data();
        const Int& b0 = bv[0];
        std::vector<std::pair<std::int64_t, const Int*>> terms;
        for (std::int64_t k = 1; k < len; ++k)
            if (k < static_cast<std::int64_t>(bv.size()) && bv[static_cast<std::size_t>(k)] != 0)
                terms.emplace_back(k, &bv[static_cast<std::size_t>(k)]);
        QSeries::ExactVec c(static_cast<std::size_t>(len));
        for (std::int64_t n = 0; n < len; ++n) {
            Int s = (n < static_cast<std::int64_t>(av.size())) ? av[static_cast<std::size_t>(n)] : Int(0);
            for (const auto& [k, v] : terms) {
                if (k > n) break;
                s -= (*v) * c[static_cast<std::size_t>(n - k)];
            }
            if (b0 == 1) {
                c[static_cast<std::size_t>(n)] = s;
            } else if (b0 == -1) {
                c[static_cast<std::size_t>(n)] = -s;
            } else {
                Int q, r;
                boost::multiprecision::divide_qr(s, b0, q, r);
                if (r != 0) throw InexactDivision("div_exact: nonzero remainder at index " + std::to_string(n));
                c[static_cast<std::size_t>(n)] = q;
            }
        }
        return QSeries(a.ring(), off, std::move(c));
    }

    unsigned m = a.ring().modulus();
    const auto& av = na.mod_data();
    const auto& bv = nb.mod_data();
    std::vector<ModTerm> terms;
    for (std::int64_t k = 1; k < len && k < static_cast<std::int64_t>(bv.size()); ++k)
        if (bv[static_cast<std::size_t>(k)]) terms.push_back({k, bv[static_cast<std::size_t>(k)]});
    std::uint32_t ib0 = mod_inverse(bv[0], m);
    QSeries::ModVec c(static_cast<std::size_t>(len));
    for (std::int64_t n = 0; n < len; ++n) {
        std::uint64_t s = (n < static_cast<std::int64_t>(av.size())) ? av[static_cast<std::size_t>(n)] : 0;
        std::uint64_t borrow = 0;
        for (const auto& t : terms) {
            if (t.k > n) break;
            borrow += static_cast<std::uint64_t>(t.v) * c[static_cast<std::size_t>(n - t.k)];
        }
        std::uint64_t val = (s + (m - borrow % m)) % m;
        c[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>((val * ib0) % m);
    }
    return QSeries(a.ring(), off, std::move(c));
}

// ---------------------------------------------------------------------------
// Ring changes, normalization, progressions
// ---------------------------------------------------------------------------

QSeries reduce_mod(const QSeries& a, unsigned m) {
    Ring target = Ring::mod(m);
    if (!a.ring().is_exact()) {
        if (a.ring().modulus() != m)
            throw RingMismatch("reduce_mod: series already reduced mod a different prime");
        return a;
    }
    const auto& v = a.exact_data();
    QSeries::ModVec out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        Int r = v[i] % m;
        if (r < 0) r += m;
        out[i] = static_cast<std::uint8_t>(r.convert_to<unsigned>());
    }
    return QSeries(target, a.offset24(), std::move(out));
}

QSeries normalized(const QSeries& a) {
    std::int64_t lead = 0;
    std::int64_t len = a.length();
    while (lead < len && a.at(lead) == 0) ++lead;
    if (lead == len) return QSeries::zeros(a.ring(), 0, 1);  // canonical zero
    if (lead == 0) return a;
    std::int64_t off = a.offset24() + 24 * lead;
    if (a.ring().is_exact()) {
        QSeries::ExactVec v(a.exact_data().begin() + lead, a.exact_data().end());
        return QSeries(a.ring(), off, std::move(v));
    }
    QSeries::ModVec v(a.mod_data().begin() + lead, a.mod_data().end());
    return QSeries(a.ring(), off, std::move(v));
}

QSeries shift_q(const QSeries& a, std::int64_t k) {
    if (a.ring().is_exact()) return QSeries(a.ring(), a.offset24() + 24 * k, a.exact_data());
    return QSeries(a.ring(), a.offset24() + 24 * k, a.mod_data());
}

QSeries extract_progression(const QSeries& a, std::int64_t M, std::int64_t r) {
    if (M < 1 || r < 0 || r >= M) throw std::invalid_argument("extract_progression: bad progression");
    std::int64_t lead = a.lead_n();
    if (lead < 0) throw GradingError("extract_progression: negative leading exponent");
    std::int64_t nmax = a.max_n();
    if (nmax < r) throw HorizonError("extract_progression: horizon below first term");
    std::int64_t count = (nmax - r) / M + 1;
    if (a.ring().is_exact()) {
        QSeries::ExactVec out(static_cast<std::size_t>(count));
        for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = a.coeff(M * i + r);
        return QSeries(a.ring(), 0, std::move(out));
    }
    const auto& src = a.mod_data();
    QSeries::ModVec out(static_cast<std::size_t>(count), 0);
    for (std::int64_t i = 0; i < count; ++i) {
        std::int64_t n = M * i + r;
        if (n >= lead) out[static_cast<std::size_t>(i)] = src[static_cast<std::size_t>(n - lead)];
    }
    return QSeries(a.ring(), 0, std::move(out));
}

bool same_series(const QSeries& a, const QSeries& b) {
    if (!(a.ring() == b.ring())) return false;
    QSeries na = normalized(a);
    QSeries nb = normalized(b);
    if (na.offset24() != nb.offset24()) return false;
    std::int64_t len = std::min(na.length(), nb.length());
    for (std::int64_t i = 0; i < len; ++i)
        if (na.at(i) != nb.at(i)) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Generators
// ---------------------------------------------------------------------------

namespace {

class Builder {
public:
    Builder(const Ring& ring, std::int64_t len) : ring_(ring) {
        if (len < 1) throw HorizonError("generator: need at least one term");
        if (ring.is_exact())
            ev_.resize(static_cast<std::size_t>(len));
        else
            mv_.assign(static_cast<std::size_t>(len), 0);
        len_ = len;
    }

    std::int64_t length() const { return len_; }

    void set(std::int64_t i, std::int64_t v) {
        if (i < 0 || i >= len_) return;
        if (ring_.is_exact()) {
            ev_[static_cast<std::size_t>(i)] = v;
        } else {
            std::int64_t m = ring_.modulus();
            std::int64_t r = v % m;
            if (r < 0) r += m;
            mv_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r);
        }
    }

    void set(std::int64_t i, const Int& v) {
        if (i < 0 || i >= len_) return;
        if (ring_.is_exact()) {
            ev_[static_cast<std::size_t>(i)] = v;
        } else {
            Int r = v % ring_.modulus();
            if (r < 0) r += ring_.modulus();
            mv_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(r.convert_to<unsigned>());
        }
    }

    QSeries take(std::int64_t offset24) {
        if (ring_.is_exact()) return QSeries(ring_, offset24, std::move(ev_));
        return QSeries(ring_, offset24, std::move(mv_));
    }

private:
    Ring ring_;
    std::int64_t len_ = 0;
    QSeries::ExactVec ev_;
    QSeries::ModVec mv_;
};

}  // namespace

QSeries euler_product(std::int64_t step, std::int64_t n_terms, const Ring& ring) {
    if (step < 1) throw std::invalid_argument("euler_product: step must be >= 1");
    Builder b(ring, n_terms);
    // prod(1 - q^(step n)) = sum_k (-1)^k q^(step k(3k-1)/2), k over Z.
    b.set(0, 1);
    for (std::int64_t k = 1;; ++k) {
        std::int64_t g1 = k * (3 * k - 1) / 2;
        std::int64_t g2 = k * (3 * k + 1) / 2;
        if (step * g1 >= n_terms && step * g2 >= n_terms) break;
        std::int64_t sign = (k % 2 == 0) ? 1 : -1;
        b.set(step * g1, sign);
        b.set(step * g2, sign);
    }
    return b.take(0);
}

QSeries eta_series(std::int64_t delta, std::int64_t n_terms, const Ring& ring) {
    if (delta < 1) throw std::invalid_argument("eta_series: delta must be >= 1");
    QSeries body = euler_product(delta, n_terms, ring);
    if (body.ring().is_exact()) return QSeries(ring, delta, body.exact_data());
    return QSeries(ring, delta, body.mod_data());
}

QSeries theta_phi(std::int64_t n_terms, const Ring& ring) {
    Builder b(ring, n_terms);
    b.set(0, 1);
    for (std::int64_t k = 1; k * k < n_terms; ++k) b.set(k * k, 2);
    return b.take(0);
}

QSeries theta_phi_neg(std::int64_t n_terms, const Ring& ring) {
    Builder b(ring, n_terms);
    b.set(0, 1);
    for (std::int64_t k = 1; k * k < n_terms; ++k) b.set(k * k, (k % 2) ? -2 : 2);
    return b.take(0);
}

QSeries theta_psi(std::int64_t n_terms, const Ring& ring) {
    Builder b(ring, n_terms);
    for (std::int64_t k = 0; k * (k + 1) / 2 < n_terms; ++k) b.set(k * (k + 1) / 2, 1);
    return b.take(0);
}

QSeries phi_st(std::int64_t s, std::int64_t t, std::int64_t n_terms, const Ring& ring) {
    if (s < 0 || t < 0) throw std::invalid_argument("phi_st: s, t must be >= 0");
    if (t % 4 != 0) throw GradingError("phi_st: t must be divisible by 4");
    // psi(q^2): support n(n+1).
    Builder pb(ring, n_terms);
    for (std::int64_t k = 0; k * (k + 1) < n_terms; ++k) pb.set(k * (k + 1), 1);
    QSeries psi2 = pb.take(0);
    QSeries body = mul(pow(theta_phi(n_terms, ring), s), pow(psi2, t));
    QSeries scaled = scale(body, Int(1) << t);
    if (ring.is_exact()) return QSeries(ring, 6 * t, scaled.exact_data());
    return QSeries(ring, 6 * t, scaled.mod_data());
}

std::pair<QSeries, QSeries> ahs_generators(std::int64_t n_terms, const Ring& ring) {
    Builder ab(ring, n_terms);
    ab.set(0, 1);
    for (std::int64_t k = 1; 3 * k * k < n_terms; ++k) ab.set(3 * k * k, (k % 2) ? -2 : 2);
    QSeries a = ab.take(0);

    QSeries e1 = euler_product(1, n_terms, ring);
    QSeries e2 = euler_product(2, n_terms, ring);
    QSeries e3 = euler_product(3, n_terms, ring);
    QSeries e6 = euler_product(6, n_terms, ring);
    QSeries b = mul(mul(e1, mul(e6, e6)), inverse(mul(e2, e3), n_terms));
    return {std::move(a), std::move(b)};
}

QSeries eisenstein(int k, std::int64_t n_terms) {
    std::int64_t factor;
    unsigned power;
    switch (k) {
        case 4: factor = 240; power = 3; break;
        case 6: factor = -504; power = 5; break;
        case 10: factor = -264; power = 9; break;
        default: throw std::invalid_argument("eisenstein: k must be 4, 6 or 10");
    }
    QSeries::ExactVec v(static_cast<std::size_t>(n_terms));
    v[0] = 1;
    for (std::int64_t n = 1; n < n_terms; ++n) v[static_cast<std::size_t>(n)] = factor * sigma_k(n, power);
    return QSeries(Ring::exact(), 0, std::move(v));
}

QSeries overpartition_series(std::int64_t n_terms, const Ring& ring) {
    return inverse(theta_phi_neg(n_terms, ring), n_terms);
}

}  // namespace qmf
