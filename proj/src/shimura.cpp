#include "qmf/shimura.hpp"

#include "qmf/heckeops.hpp"

namespace qmf {

namespace {

bool squarefree(std::int64_t t) {
    for (const auto& [p, e] : factorize(t))
        if (e > 1) return false;
    return true;
}

}  // namespace

LiftParams::LiftParams(std::int64_t t_, std::int64_t lambda_, QuadChar chi_, std::int64_t level4N_)
    : t(t_), lambda(lambda_), chi(chi_), level4N(level4N_) {
    if (t < 1 || !squarefree(t)) throw std::invalid_argument("LiftParams: t must be squarefree positive");
    if (lambda < 1) throw std::invalid_argument("LiftParams: lambda must be >= 1");
    if (level4N % 4 != 0) throw std::invalid_argument("LiftParams: level must be divisible by 4");
}

int LiftParams::psi(std::int64_t n) const {
    int v = chi(n) * kronecker(t, n);
    if (lambda % 2 != 0) v *= kronecker(-1, n);
    return v;
}

Int shimura_A(const std::function<Int(std::int64_t)>& b, const LiftParams& p, std::int64_t n) {
    if (n < 1) throw std::invalid_argument("shimura_A: n must be >= 1");
    Int total = 0;
    for (std::int64_t d : divisors(n)) {
        int sign = p.psi(d);
        if (sign == 0) continue;
        std::int64_t q = n / d;
        total += Int(sign) * boost::multiprecision::pow(Int(d), static_cast<unsigned>(p.lambda - 1)) *
                 b(p.t * q * q);
    }
    return total;
}

QSeries shimura_lift_series(const QSeries& b, const LiftParams& p, std::int64_t n_terms) {
    if (!b.integral() || b.lead_n() < 0) throw GradingError("shimura_lift_series: bad grading");
    std::int64_t need = p.t * (n_terms - 1) * (n_terms - 1);
    if (b.max_n() < need) throw HorizonError("shimura_lift_series: source horizon below t n^2");

    if (b.ring().is_exact()) {
        auto accessor = [&b](std::int64_t k) { return b.coeff(k); };
        QSeries::ExactVec v(static_cast<std::size_t>(n_terms));
        for (std::int64_t n = 1; n < n_terms; ++n)
            v[static_cast<std::size_t>(n)] = shimura_A(accessor, p, n);
        return QSeries(b.ring(), 0, std::move(v));
    }

    unsigned m = b.ring().modulus();
    QSeries::ModVec v(static_cast<std::size_t>(n_terms), 0);
    for (std::int64_t n = 1; n < n_terms; ++n) {
        std::uint64_t acc = 0;
        for (std::int64_t d : divisors(n)) {
            int sign = p.psi(d);
            if (sign == 0) continue;
            std::uint64_t dp = 1;
            for (std::int64_t i = 0; i < p.lambda - 1; ++i) dp = (dp * (static_cast<std::uint64_t>(d) % m)) % m;
            std::int64_t q = n / d;
            std::uint64_t term = (dp * b.coeff(p.t * q * q).convert_to<std::uint64_t>()) % m;
            acc = (acc + (sign > 0 ? term : (m - term) % m)) % m;
        }
        v[static_cast<std::size_t>(n)] = static_cast<std::uint8_t>(acc);
    }
    return QSeries(b.ring(), 0, std::move(v));
}

QSeries restrict_residues(const QSeries& f, std::int64_t M, const std::set<std::int64_t>& allowed) {
    if (M < 1) throw std::invalid_argument("restrict_residues: M must be >= 1");
    if (!f.integral()) throw GradingError("restrict_residues: fractional exponents");
    std::int64_t lead = f.lead_n();
    auto keep = [&](std::int64_t n) {
        std::int64_t r = n % M;
        if (r < 0) r += M;
        return allowed.count(r) > 0;
    };
    if (f.ring().is_exact()) {
        auto v = f.exact_data();
        for (std::int64_t i = 0; i < static_cast<std::int64_t>(v.size()); ++i)
            if (!keep(lead + i)) v[static_cast<std::size_t>(i)] = 0;
        return QSeries(f.ring(), f.offset24(), std::move(v));
    }
    auto v = f.mod_data();
    for (std::int64_t i = 0; i < static_cast<std::int64_t>(v.size()); ++i)
        if (!keep(lead + i)) v[static_cast<std::size_t>(i)] = 0;
    return QSeries(f.ring(), f.offset24(), std::move(v));
}

QSeries restrict_units_mod6_uv(const QSeries& f) {
    QSeries d2 = op_V(op_U(f, 2), 2);
    QSeries d3 = op_V(op_U(f, 3), 3);
    QSeries d6 = op_V(op_U(f, 6), 6);
    return add(sub(sub(f, d2), d3), d6);
}

std::vector<EtaQuotient> s14_level8_basis() {
    return {
        EtaQuotient(8, {{1, 32}, {2, -4}}),           // q^1
        EtaQuotient(8, {{4, 44}, {8, -16}}),          // q^2
        EtaQuotient(8, {{2, 20}, {4, 8}}),            // q^3
        EtaQuotient(8, {{2, 8}, {4, 20}}),            // q^4
        EtaQuotient(8, {{2, -4}, {4, 32}}),           // q^5
        EtaQuotient(8, {{4, 20}, {8, 8}}),            // q^6
        EtaQuotient(8, {{2, 4}, {4, 8}, {8, 16}}),    // q^7
        EtaQuotient(8, {{2, -8}, {4, 20}, {8, 16}}),  // q^8
        EtaQuotient(8, {{2, -4}, {4, 8}, {8, 24}}),   // q^9
        EtaQuotient(8, {{4, -4}, {8, 32}}),           // q^10
        EtaQuotient(8, {{2, 4}, {4, -16}, {8, 40}}),  // q^11
    };
}

std::optional<std::vector<Rat>> basis_decompose(const QSeries& f,
                                                const std::vector<QSeries>& basis,
                                                std::int64_t bound) {
    if (!f.ring().is_exact()) throw RingMismatch("basis_decompose: exact ring required");
    if (!f.integral()) throw GradingError("basis_decompose: fractional exponents");
    if (f.max_n() < bound) throw HorizonError("basis_decompose: f horizon below bound");

    struct Elem {
        const QSeries* s;
        std::int64_t lead;
        std::size_t pos;
    };
    std::vector<Elem> elems;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        const QSeries& b = basis[i];
        if (!b.ring().is_exact()) throw RingMismatch("basis_decompose: exact ring required");
        if (b.max_n() < bound) throw HorizonError("basis_decompose: basis horizon below bound");
        std::int64_t lead = b.lead_n();
        while (lead <= b.max_n() && b.coeff(lead) == 0) ++lead;
        if (lead > bound) throw DegenerateBasis("basis_decompose: basis element vanishes to bound");
        elems.push_back({&b, lead, i});
    }
    std::sort(elems.begin(), elems.end(), [](const Elem& a, const Elem& b) { return a.lead < b.lead; });
    for (std::size_t i = 1; i < elems.size(); ++i)
        if (elems[i].lead == elems[i - 1].lead)
            throw DegenerateBasis("basis_decompose: two basis elements share a leading exponent");

    std::int64_t base = std::min<std::int64_t>(f.lead_n(), elems.empty() ? 0 : elems.front().lead);
    base = std::min<std::int64_t>(base, 0);
    std::vector<Rat> residual(static_cast<std::size_t>(bound - base + 1), Rat(0));
    for (std::int64_t n = base; n <= bound; ++n)
        if (n >= f.lead_n()) residual[static_cast<std::size_t>(n - base)] = Rat(f.coeff(n));

    std::vector<Rat> coords(basis.size(), Rat(0));
    for (const auto& e : elems) {
        Rat c = residual[static_cast<std::size_t>(e.lead - base)] / Rat(e.s->coeff(e.lead));
        coords[e.pos] = c;
        if (c != 0) {
            for (std::int64_t n = e.lead; n <= bound; ++n)
                residual[static_cast<std::size_t>(n - base)] -= c * Rat(e.s->coeff(n));
        }
    }
    for (const auto& r : residual)
        if (r != 0) return std::nullopt;
    return coords;
}

CongruenceReport mod3_relation_check(std::int64_t bound) {
    Ring f3 = Ring::mod(3);
    std::int64_t n_terms = bound + 1;
    std::int64_t b_terms = bound * bound + 1;

    QSeries b = eta_quotient_series(EtaQuotient(16, {{1, 6}, {2, 9}}), b_terms, f3);
    LiftParams params(1, 7, QuadChar(16), 16);
    QSeries lift = shimura_lift_series(b, params, n_terms);
    QSeries restricted = restrict_residues(lift, 6, {1, 5});
    QSeries eta46 = eta_quotient_series(EtaQuotient(36, {{6, 4}}), n_terms, f3);

    return congruence_to_bound(restricted, eta46, 3, bound,
                               "shimura-mod3-relation-" + std::to_string(bound));
}

}  // namespace qmf
