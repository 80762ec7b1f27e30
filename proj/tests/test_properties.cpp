// Randomized invariants with a fixed seed: operator composition laws, the
// sign-twist identity, restriction dual paths, sparse/dense consistency.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qmf/heckeops.hpp"
#include "qmf/shimura.hpp"

using namespace qmf;

namespace {

std::mt19937 rng(0x5eed1234);

QSeries random_series(std::int64_t len, bool sparse = false, bool unit_lead = false) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    std::uniform_int_distribution<int> gap(1, 12);
    QSeries::ExactVec v(static_cast<std::size_t>(len));
    if (sparse) {
        for (std::int64_t i = 0; i < len; i += gap(rng)) v[static_cast<std::size_t>(i)] = coeff(rng);
    } else {
        for (auto& x : v) x = coeff(rng);
    }
    if (unit_lead) v[0] = (coeff(rng) % 2 == 0) ? 1 : -1;
    return QSeries(Ring::exact(), 0, std::move(v));
}

QSeries random_mod_series(std::int64_t len, unsigned m) {
    std::uniform_int_distribution<unsigned> coeff(0, m - 1);
    QSeries::ModVec v(static_cast<std::size_t>(len));
    for (auto& x : v) x = static_cast<std::uint8_t>(coeff(rng));
    return QSeries(Ring::mod(m), 0, std::move(v));
}

}  // namespace

TEST_CASE("U and V composition laws") {
    for (int trial = 0; trial < 24; ++trial) {
        QSeries f = random_series(240);
        std::uniform_int_distribution<std::int64_t> pick(1, 4);
        std::int64_t a = pick(rng), b = pick(rng);
        CHECK(same_series(op_U(op_U(f, a), b), op_U(f, a * b)));
        QSeries va = op_V(op_V(f, a), b);
        QSeries vab = op_V(f, a * b);
        for (std::int64_t n = 0; n <= std::min(va.max_n(), vab.max_n()); ++n)
            CHECK(va.coeff(n) == vab.coeff(n));
        // U(j) V(j) = id
        QSeries ident = op_U(op_V(f, a), a);
        for (std::int64_t n = 0; n <= ident.max_n(); ++n) CHECK(ident.coeff(n) == f.coeff(n));
    }
}

TEST_CASE("sign twist equals the U(2)V(2) path") {
    for (int trial = 0; trial < 16; ++trial) {
        QSeries f = random_series(101);
        QSeries path = sub(scale(op_V(op_U(f, 2), 2), 2), f);
        QSeries tw = sign_twist(f);
        for (std::int64_t n = 0; n <= path.max_n(); ++n) CHECK(path.coeff(n) == tw.coeff(n));
        CHECK(same_series(sign_twist(tw), f));
    }
}

TEST_CASE("restriction dual paths agree") {
    for (int trial = 0; trial < 12; ++trial) {
        QSeries f = random_series(150);
        QSeries masked = restrict_residues(f, 6, {1, 5});
        QSeries uv = restrict_units_mod6_uv(f);
        for (std::int64_t n = 0; n <= uv.max_n(); ++n) CHECK(uv.coeff(n) == masked.coeff(n));
    }
}

TEST_CASE("inverse round trip on random unit series") {
    for (int trial = 0; trial < 12; ++trial) {
        QSeries f = random_series(60, trial % 2 == 0, true);
        QSeries r = mul(f, inverse(f, 60));
        CHECK(r.coeff(0) == 1);
        for (std::int64_t n = 1; n <= r.max_n(); ++n) CHECK(r.coeff(n) == 0);
    }
}

TEST_CASE("sparse and dense multiplication agree") {
    for (int trial = 0; trial < 16; ++trial) {
        QSeries a = random_series(120, true);
        QSeries d = random_series(120, false);
        // a is the sparse operand either way; both orders must agree and
        // match the schoolbook sum
        QSeries ad = mul(a, d);
        QSeries da = mul(d, a);
        CHECK(same_series(ad, da));
        std::uniform_int_distribution<std::int64_t> pick(0, 119);
        for (int probes = 0; probes < 20; ++probes) {
            std::int64_t n = pick(rng);
            Int want = 0;
            for (std::int64_t i = 0; i <= n; ++i) want += a.at(i) * d.at(n - i);
            CHECK(ad.coeff(n) == want);
        }
    }
}

TEST_CASE("mod ring mirrors exact arithmetic") {
    for (int trial = 0; trial < 10; ++trial) {
        for (unsigned m : {3u, 7u, 251u}) {
            QSeries a = random_series(80);
            QSeries b = random_series(80);
            CHECK(same_series(reduce_mod(mul(a, b), m), mul(reduce_mod(a, m), reduce_mod(b, m))));
            CHECK(same_series(reduce_mod(add(a, b), m), add(reduce_mod(a, m), reduce_mod(b, m))));
        }
    }
}

TEST_CASE("T(Q^2) commutes with reduction and twisting") {
    HalfIntWeight w(3, QuadChar(4), 4);
    for (int trial = 0; trial < 8; ++trial) {
        QSeries f = random_series(9 * 12 + 1);
        QSeries t = hecke_T2(f, 3, w);
        CHECK(same_series(reduce_mod(t, 7), hecke_T2(reduce_mod(f, 7), 3, w)));
        // sign-twist conjugation for odd Q
        QSeries a = sign_twist(hecke_T2(f, 3, w));
        QSeries b = hecke_T2(sign_twist(f), 3, w);
        CHECK(same_series(a, b));
    }
}

TEST_CASE("hecke operators on random mod series stay in range") {
    HalfIntWeight w(5, QuadChar(16), 16);
    for (int trial = 0; trial < 6; ++trial) {
        QSeries f = random_mod_series(9 * 20 + 1, 13);
        QSeries t = hecke_T2(f, 3, w);
        for (std::int64_t n = 0; n <= t.max_n(); ++n) CHECK(t.coeff(n) < 13);
    }
}
