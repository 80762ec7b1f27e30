#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qmf/heckeops.hpp"
#include "qmf/shimura.hpp"

using namespace qmf;

namespace {

QSeries eta69(std::int64_t n_terms, const Ring& ring = Ring()) {
    return eta_quotient_series(EtaQuotient(16, {{1, 6}, {2, 9}}), n_terms, ring);
}

LiftParams lift_params() { return LiftParams(1, 7, QuadChar(16), 16); }

}  // namespace

TEST_CASE("lift params validation") {
    CHECK_THROWS_AS(LiftParams(12, 7, QuadChar(16), 16), std::invalid_argument);  // not squarefree
    CHECK_THROWS_AS(LiftParams(1, 0, QuadChar(16), 16), std::invalid_argument);
    CHECK_THROWS_AS(LiftParams(1, 7, QuadChar(16), 15), std::invalid_argument);

    // psi_1(d) = (-1/d) on odd d, 0 on even d for the eta69 instance
    LiftParams p = lift_params();
    CHECK(p.psi(3) == kronecker(-1, 3));
    CHECK(p.psi(5) == kronecker(-1, 5));
    CHECK(p.psi(2) == 0);
}

TEST_CASE("shimura A at primes") {
    QSeries b = eta69(902);
    auto accessor = [&b](std::int64_t k) { return b.coeff(k); };
    LiftParams p = lift_params();

    CHECK(shimura_A(accessor, p, 1) == 1);  // single divisor, b(1) = 1
    for (std::int64_t q = 3; q <= 30; q += 2) {
        if (!is_prime(static_cast<std::uint64_t>(q))) continue;
        Int expect = b.coeff(q * q) + Int(kronecker(-1, q)) * boost::multiprecision::pow(Int(q), 6);
        CHECK(shimura_A(accessor, p, q) == expect);
    }

    // A_1(5) = 0 (mod 3), the n = 5 (mod 6) congruence
    CHECK(shimura_A(accessor, p, 5) % 3 == 0);
    CHECK(shimura_A(accessor, p, 11) % 3 == 0);
}

TEST_CASE("lift series agrees with termwise A") {
    QSeries b = eta69(402);
    auto accessor = [&b](std::int64_t k) { return b.coeff(k); };
    LiftParams p = lift_params();
    QSeries lift = shimura_lift_series(b, p, 21);
    for (std::int64_t n = 1; n <= 20; ++n) CHECK(lift.coeff(n) == shimura_A(accessor, p, n));

    // residue arithmetic commutes with the lift
    QSeries lift3 = shimura_lift_series(eta69(402, Ring::mod(3)), p, 21);
    CHECK(same_series(reduce_mod(lift, 3), lift3));

    CHECK_THROWS_AS(shimura_lift_series(b, p, 100), HorizonError);
}

TEST_CASE("eigenvalue equals lifted prime coefficient") {
    QSeries b = eta69(500);
    auto accessor = [&b](std::int64_t k) { return b.coeff(k); };
    HalfIntWeight w(7, QuadChar(16), 16);
    for (std::int64_t q : {3, 5, 7}) {
        auto mu = eigencheck(b, q, w, 10);
        REQUIRE(mu.has_value());
        CHECK(*mu == shimura_A(accessor, lift_params(), q));
    }
}

TEST_CASE("restrict residues") {
    QSeries f = overpartition_series(60);
    QSeries all = restrict_residues(f, 6, {0, 1, 2, 3, 4, 5});
    CHECK(same_series(all, f));

    QSeries units = restrict_residues(f, 6, {1, 5});
    for (std::int64_t n = 0; n < 60; ++n) {
        if (n % 6 == 1 || n % 6 == 5)
            CHECK(units.coeff(n) == f.coeff(n));
        else
            CHECK(units.coeff(n) == 0);
    }

    // dual construction through U/V inclusion-exclusion
    QSeries uv = restrict_units_mod6_uv(f);
    for (std::int64_t n = 0; n <= uv.max_n(); ++n) CHECK(uv.coeff(n) == units.coeff(n));
}

TEST_CASE("s14 basis is triangular") {
    auto basis = s14_level8_basis();
    REQUIRE(basis.size() == 11);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        QSeries s = eta_quotient_series(basis[i], 4);
        CHECK(s.offset24() == 24 * static_cast<std::int64_t>(i + 1));
        CHECK(s.at(0) == 1);
        GhResult gh = gh_check(basis[i]);
        CHECK(gh.cond1);
        CHECK(gh.cond2);
        CHECK(gh.cond3);
        // cusp forms: positive order at every cusp of Gamma_0(8)
        for (const auto& c : martin_orders(basis[i]).cusps) CHECK(c.order24 > 0);
    }
}

TEST_CASE("basis decomposition") {
    std::int64_t bound = 20;
    std::vector<QSeries> basis;
    for (const auto& eq : s14_level8_basis())
        basis.push_back(eta_quotient_series(eq, bound + 1));

    // beta_3 decomposes as the third unit vector
    auto unit3 = basis_decompose(basis[2], basis, bound);
    REQUIRE(unit3.has_value());
    for (std::size_t i = 0; i < 11; ++i) CHECK((*unit3)[i] == Rat(i == 2 ? 1 : 0));

    // an integer combination comes back exactly
    QSeries combo = add(scale(basis[0], 7), sub(scale(basis[4], -3), scale(basis[10], 11)));
    auto c = basis_decompose(combo, basis, bound);
    REQUIRE(c.has_value());
    CHECK((*c)[0] == Rat(7));
    CHECK((*c)[4] == Rat(-3));
    CHECK((*c)[10] == Rat(-11));
    CHECK((*c)[1] == Rat(0));

    // something outside the span is rejected
    QSeries junk = add(basis[0], overpartition_series(bound + 1));
    CHECK_FALSE(basis_decompose(junk, basis, bound).has_value());

    // duplicate leading exponents are degenerate
    std::vector<QSeries> bad = {basis[0], basis[0]};
    CHECK_THROWS_AS(basis_decompose(basis[0], bad, bound), DegenerateBasis);
}

TEST_CASE("lift decomposes in the level-8 basis") {
    std::int64_t bound = 30;
    QSeries b = eta69(bound * bound + 1);
    QSeries lift = shimura_lift_series(b, lift_params(), bound + 1);
    std::vector<QSeries> basis;
    for (const auto& eq : s14_level8_basis())
        basis.push_back(eta_quotient_series(eq, bound + 1));
    auto coords = basis_decompose(lift, basis, bound);
    REQUIRE(coords.has_value());
    const std::vector<Int> expect = {1, 96, -2304, 0, -65536, -24576, 0, 393216, 0, -6291456, 0};
    for (std::size_t i = 0; i < 11; ++i) CHECK((*coords)[i] == Rat(expect[i]));
}

TEST_CASE("mod 3 relation to a small bound") {
    CongruenceReport rep = mod3_relation_check(30);
    CHECK(rep.pass);
    CHECK(rep.tested_count == 31);
}
