#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <unistd.h>

#include "qmf/cache.hpp"
#include "qmf/reports.hpp"
#include "qmf/verify.hpp"

using namespace qmf;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() /
               ("qmf_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter()++));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
    static int& counter() {
        static int c = 0;
        return c;
    }
};

std::string slurp(const std::filesystem::path& p) {
    std::ifstream is(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(is), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("report json round trip") {
    CongruenceReport r;
    r.claim_id = "demo";
    r.modulus = 7;
    r.q_prime = 5;
    r.n_lo = 1;
    r.n_hi = 10;
    r.skipped = "n with gcd(n, Q) > 1";
    r.tested_count = 8;
    r.failures.push_back({4, 3});
    r.finalize();
    CHECK_FALSE(r.pass);
    r.wall_time_ms = 12;

    CongruenceReport back = CongruenceReport::from_json(r.to_json());
    CHECK(back.canonical_body() == r.canonical_body());
    CHECK(back.wall_time_ms == 12);

    // the canonical body ignores timing
    CongruenceReport other = r;
    other.wall_time_ms = 99999;
    CHECK(other.canonical_body() == r.canonical_body());
}

TEST_CASE("pass requires a nonvacuous range") {
    CongruenceReport r;
    r.claim_id = "vacuous";
    r.finalize();
    CHECK_FALSE(r.pass);
    r.tested_count = 1;
    r.finalize();
    CHECK(r.pass);
}

TEST_CASE("merge reports") {
    CongruenceReport a;
    a.claim_id = "a";
    a.tested_count = 1;
    a.finalize();
    CongruenceReport b;
    b.claim_id = "b";
    b.tested_count = 2;
    b.finalize();

    auto empty = merge_reports({});
    CHECK(empty.empty());

    auto two = merge_reports({nlohmann::json(a.to_json()), nlohmann::json(b.to_json())});
    CHECK(two.size() == 2);

    // identical duplicate is accepted, conflicting duplicate is an error
    auto dup = merge_reports({nlohmann::json(a.to_json()), nlohmann::json(a.to_json())});
    CHECK(dup.size() == 1);
    CongruenceReport a2 = a;
    a2.tested_count = 7;
    a2.finalize();
    CHECK_THROWS_AS(merge_reports({nlohmann::json(a.to_json()), nlohmann::json(a2.to_json())}),
                    std::runtime_error);
}

TEST_CASE("cache file round trip is byte exact") {
    TempDir tmp;
    QSeries s = overpartition_series(1000, Ring::mod(13));
    auto p1 = tmp.path / "a.qser";
    auto p2 = tmp.path / "b.qser";
    write_qser(p1, s);
    QSeries loaded = read_qser(p1);
    CHECK(same_series(loaded, s));
    write_qser(p2, loaded);
    CHECK(slurp(p1) == slurp(p2));

    CHECK_THROWS_AS(write_qser(tmp.path / "x.qser", overpartition_series(4)),
                    std::invalid_argument);
}

TEST_CASE("cache read rejects corrupt files") {
    TempDir tmp;
    auto p = tmp.path / "bad.qser";
    std::ofstream(p) << "QSERX junk";
    CHECK_THROWS_AS(read_qser(p), std::runtime_error);

    QSeries s = overpartition_series(64, Ring::mod(5));
    auto q = tmp.path / "trunc.qser";
    write_qser(q, s);
    auto bytes = slurp(q);
    std::ofstream(q, std::ios::binary | std::ios::trunc) << bytes.substr(0, bytes.size() - 10);
    CHECK_THROWS_AS(read_qser(q), std::runtime_error);
}

TEST_CASE("warm cache reproduces cold results") {
    TempDir tmp;
    CoeffCache cache(tmp.path);
    QSeries cold = cache.overpartitions(11, 5000);
    QSeries warm = cache.overpartitions(11, 5000);
    CHECK(same_series(cold, warm));
    // shorter request served from the longer cached run
    QSeries prefix = cache.overpartitions(11, 100);
    for (std::int64_t n = 0; n < 100; ++n) CHECK(prefix.coeff(n) == cold.coeff(n));
    // longer request recomputes and must extend, not change
    QSeries longer = cache.overpartitions(11, 8000);
    for (std::int64_t n = 0; n < 5000; n += 13) CHECK(longer.coeff(n) == cold.coeff(n));
}

TEST_CASE("verify runs are deterministic") {
    CoeffCache cache;
    auto r1 = verify_theorem("mod3-2", {{5}, 60}, cache);
    auto r2 = verify_theorem("mod3-2", {{5}, 60}, cache);
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i)
        CHECK(r1[i].canonical_body() == r2[i].canonical_body());
    CHECK(r1[0].pass);
    CHECK(r1[0].tested_count > 0);
}

TEST_CASE("theorem preconditions are enforced") {
    CoeffCache cache;
    CHECK_THROWS_AS(verify_theorem("mod3-1", {{7}, 10}, cache), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("mod5", {{7}, 10}, cache), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("nonsense", {}, cache), std::invalid_argument);
    CHECK_THROWS_AS(verify_theorem("mod7", {{4}, 10}, cache), std::invalid_argument);
}

TEST_CASE("hunt records") {
    CoeffCache cache;
    // m = 5, Q = 19 is Treneer's family: no violation to a small bound
    auto recs = hunt(5, {19}, 8, cache);
    REQUIRE(recs.size() == 1);
    CHECK(recs[0].verdict == HuntRecord::Verdict::pass_to_bound);
    CHECK(recs[0].to_json()["verdict"] == "inconclusive-positive");

    // m = 7, Q = 3 likewise
    auto r7 = hunt(7, {3}, 20, cache);
    CHECK(r7[0].verdict == HuntRecord::Verdict::pass_to_bound);

    CHECK_THROWS_AS(hunt(4, {3}, 10, cache), std::invalid_argument);
    CHECK_THROWS_AS(hunt(13, {4}, 10, cache), std::invalid_argument);
}
