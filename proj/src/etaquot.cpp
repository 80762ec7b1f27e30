#include "qmf/etaquot.hpp"

#include "qmf/heckeops.hpp"

#include <chrono>
#include <numeric>

namespace qmf {

EtaQuotient::EtaQuotient(std::int64_t N, std::map<std::int64_t, std::int64_t> r)
    : level(N), exps(std::move(r)) {
    if (level < 1) throw std::invalid_argument("EtaQuotient: level must be >= 1");
    for (auto it = exps.begin(); it != exps.end();) {
        if (it->first < 1 || level % it->first != 0)
            throw std::invalid_argument("EtaQuotient: delta must divide the level");
        it = (it->second == 0) ? exps.erase(it) : std::next(it);
    }
}

std::int64_t EtaQuotient::weight_num() const {
    std::int64_t s = 0;
    for (const auto& [d, r] : exps) s += r;
    return s;
}

std::int64_t EtaQuotient::offset24() const {
    std::int64_t s = 0;
    for (const auto& [d, r] : exps) s += d * r;
    return s;
}

GhResult gh_check(const EtaQuotient& eq) {
    GhResult out;
    std::int64_t c1 = 0, c2 = 0;
    for (const auto& [d, r] : eq.exps) {
        c1 += d * r;
        c2 += (eq.level / d) * r;
    }
    out.cond1 = (c1 % 24) == 0;
    out.cond2 = (c2 % 24) == 0;
    std::int64_t wnum = eq.weight_num();
    out.cond3 = (wnum % 2) == 0;
    if (out.cond3) {
        // Squarefree kernel of (-1)^k prod delta^{r_delta}; squares drop out
        // of the Kronecker symbol.
        std::map<std::int64_t, std::int64_t> parity;
        for (const auto& [d, r] : eq.exps)
            for (const auto& [p, e] : factorize(d)) parity[p] += static_cast<std::int64_t>(e) * r;
        std::int64_t kernel = 1;
        for (const auto& [p, e] : parity)
            if (e % 2 != 0) kernel *= p;
        std::int64_t k = wnum / 2;
        out.character = QuadChar((k % 2 == 0) ? kernel : -kernel);
    }
    return out;
}

CuspReport martin_orders(const EtaQuotient& eq) {
    CuspReport rep;
    rep.level = eq.level;
    for (std::int64_t d : divisors(eq.level)) {
        Rat sum = 0;
        std::int64_t gdn = std::gcd(d * d, eq.level);
        for (const auto& [delta, r] : eq.exps) {
            std::int64_t g = std::gcd(d, delta);
            sum += Rat(r * g * g, delta * gdn);
        }
        Rat order24 = Rat(eq.level) * sum;  // 24 * (N/24) * sum
        if (boost::multiprecision::denominator(order24) != 1)
            throw std::logic_error("martin_orders: non-integral order24");
        CuspOrder c;
        c.d = d;
        c.c = 1;
        c.order24 = boost::multiprecision::numerator(order24).convert_to<std::int64_t>();
        rep.cusps.push_back(c);
    }
    return rep;
}

const CuspOrder& CuspReport::at_denominator(std::int64_t d) const {
    for (const auto& c : cusps)
        if (c.d == d) return c;
    throw std::invalid_argument("CuspReport: no cusp with denominator " + std::to_string(d));
}

nlohmann::ordered_json CuspReport::to_json() const {
    nlohmann::ordered_json j;
    j["level"] = level;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& c : cusps) arr.push_back({{"d", c.d}, {"c", c.c}, {"order24", c.order24}});
    j["cusps"] = arr;
    return j;
}

QSeries eta_quotient_series(const EtaQuotient& eq, std::int64_t n_terms, const Ring& ring) {
    QSeries num = QSeries::unit(ring, n_terms);
    QSeries den = QSeries::unit(ring, n_terms);
    std::int64_t num_off = 0, den_off = 0;
    for (const auto& [delta, r] : eq.exps) {
        QSeries factor = euler_product(delta, n_terms, ring);
        for (std::int64_t i = 0; i < std::llabs(r); ++i) {
            if (r > 0) {
                num = mul(num, factor);
                num_off += delta;
            } else {
                den = mul(den, factor);
                den_off += delta;
            }
        }
    }
    QSeries body = (den.nonzero_count() == 1 && den.at(0) == 1)
                       ? num
                       : mul(num, inverse(den, n_terms));
    // The eta prefixes contribute q^(sum delta r / 24) on top of the product body.
    std::int64_t off = num_off - den_off;
    if (ring.is_exact()) return QSeries(ring, off, body.exact_data());
    return QSeries(ring, off, body.mod_data());
}

std::int64_t sturm_bound(std::int64_t k_num, std::int64_t level) {
    if (level < 1) throw std::invalid_argument("sturm_bound: level must be >= 1");
    Rat b(k_num * level, 24);
    for (const auto& [p, e] : factorize(level)) b *= Rat(p + 1, p);
    Int num = boost::multiprecision::numerator(b);
    Int den = boost::multiprecision::denominator(b);
    Int q = num / den;  // floors toward zero; bounds here are nonnegative
    if (q * den > num) --q;
    return q.convert_to<std::int64_t>();
}

CongruenceReport congruence_to_bound(const QSeries& f, const QSeries& g, unsigned m,
                                     std::int64_t bound, const std::string& claim_id) {
    auto t0 = std::chrono::steady_clock::now();
    if (f.max_n() < bound || g.max_n() < bound)
        throw HorizonError("congruence_to_bound: horizon below requested bound");
    QSeries fr = reduce_mod(f, m);
    QSeries gr = reduce_mod(g, m);

    CongruenceReport rep;
    rep.claim_id = claim_id;
    rep.modulus = m;
    rep.n_lo = 0;
    rep.n_hi = bound;
    for (std::int64_t n = 0; n <= bound; ++n) {
        Int a = fr.coeff(n);
        Int b = gr.coeff(n);
        ++rep.tested_count;
        if (a != b) {
            std::int64_t diff = ((a - b) % m).convert_to<std::int64_t>();
            if (diff < 0) diff += m;
            rep.failures.push_back({n, diff});
        }
    }
    rep.finalize();
    rep.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0)
            .count();
    return rep;
}

CuspationResult cuspation(const QSeries& f, unsigned m, std::int64_t levelN, std::int64_t lambda) {
    if (m == 2) throw std::invalid_argument("cuspation: m must be an odd prime >= 3");
    if (f.ring().is_exact() || f.ring().modulus() != m)
        throw RingMismatch("cuspation: series must be reduced mod m");
    if (levelN < 1) throw std::invalid_argument("cuspation: bad level");

    QSeries restricted = sub(f, op_V(op_U(f, m), m));
    std::int64_t n_terms = restricted.length();

    EtaQuotient mult = (m == 3)
                           ? EtaQuotient(9, {{1, 27}, {9, -3}})
                           : EtaQuotient(static_cast<std::int64_t>(m) * m,
                                         {{1, static_cast<std::int64_t>(m) * m},
                                          {static_cast<std::int64_t>(m) * m, -1}});
    QSeries mult_series = eta_quotient_series(mult, n_terms, f.ring());

    CuspationResult out{mul(restricted, mult_series),
                        2 * lambda + (m == 3 ? 25 : static_cast<std::int64_t>(m) * m),
                        4 * levelN * static_cast<std::int64_t>(m) * m /
                            std::gcd<std::int64_t>(levelN, m)};
    return out;
}

}  // namespace qmf
