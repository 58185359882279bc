#include "harmonic/beta_engine.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/identity_suite.hpp"

#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

using namespace harmonic;

namespace {

std::vector<Rational> random_sequence(std::mt19937_64& rng, std::size_t len)
{
    std::uniform_int_distribution<long> num(-10'000, 10'000);
    std::uniform_int_distribution<long> den(1, 10'000);
    std::vector<Rational> a;
    for (std::size_t i = 0; i < len; ++i)
        a.emplace_back(num(rng), den(rng));
    return a;
}

void require_all_pass(const std::vector<IdentityReport>& reports)
{
    REQUIRE(!reports.empty());
    for (const auto& r : reports) {
        INFO(r.identity_id << " n=" << r.params.n);
        CHECK(r.status == Status::pass);
    }
}

const std::vector<Rational> kXs = {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};

} // namespace

TEST_CASE("binomial inverse examples")
{
    const std::vector<Rational> delta = {Rational(1), Rational(0), Rational(0), Rational(0)};
    const std::vector<Rational> ones(4, Rational(1));
    CHECK(binomial_inverse(delta) == ones);
    CHECK(binomial_inverse(ones) == delta);
    CHECK(binomial_inverse(std::vector<Rational>{}).empty());

    for (const Rational& x : kXs) {
        std::vector<Rational> a;
        for (long k = 0; k <= 20; ++k)
            a.push_back((x + Rational(k + 1)).inverse());
        const auto b = binomial_inverse(a);
        for (std::uint64_t n = 0; n <= 20; ++n)
            CHECK(b[n] == beta_F(n, x));
    }
}

TEST_CASE("binomial inverse is an involution")
{
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> length(0, 64);
    for (int trial = 0; trial < 300; ++trial) {
        const auto a = random_sequence(rng, length(rng));
        REQUIRE(binomial_inverse(binomial_inverse(a)) == a);
    }
}

TEST_CASE("binomial inverse is prefix stable")
{
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        auto a = random_sequence(rng, 30);
        const auto full = binomial_inverse(a);
        for (std::size_t len : {1u, 7u, 18u}) {
            const auto prefix = binomial_inverse(std::span<const Rational>(a.data(), len));
            CHECK(std::equal(prefix.begin(), prefix.end(), full.begin()));
        }
        // Changing a tail entry leaves earlier outputs alone.
        a[25] += Rational(1);
        const auto changed = binomial_inverse(a);
        CHECK(std::equal(changed.begin(), changed.begin() + 25, full.begin()));
        CHECK(changed[25] != full[25]);
    }
}

TEST_CASE("inversion duality: forward and inverted forms map into each other")
{
    // alt_power_sum(n,0,2) = H_{n+1}/(n+1), so pushing H_{n+1}/(n+1) through the
    // inverse returns 1/(k+1)^2.
    std::vector<Rational> forward;
    for (std::uint64_t n = 0; n <= 25; ++n)
        forward.push_back(harmonic_number(n + 1, 1) / Rational(static_cast<long>(n + 1)));
    const auto back = binomial_inverse(forward);
    for (long k = 0; k <= 25; ++k)
        CHECK(back[k] == Rational(1, (k + 1) * (k + 1)));
}

TEST_CASE("generic_check fixtures")
{
    const auto grid = make_grid(10, std::vector<Rational>{Rational(0), Rational(1, 2)});
    CHECK(grid.size() == 22);

    const Evaluator F = [](const GridPoint& p) { return beta_F(p.n, *p.x); };
    const Evaluator Fsum = [](const GridPoint& p) { return beta_F_sum(p.n, *p.x); };
    require_all_pass(generic_check("reflexive", F, F, grid));
    require_all_pass(generic_check("product-vs-sum", F, Fsum, grid));

    const auto zero_grid = make_grid(10, std::vector<Rational>{Rational(0)});
    const auto bad = generic_check(
        "mismatch", [](const GridPoint& p) { return beta_F(p.n, Rational(0)); },
        [](const GridPoint& p) { return Rational(1, static_cast<long>(p.n + 2)); }, zero_grid);
    REQUIRE(bad.size() == 11);
    CHECK(any_failed(bad));
    REQUIRE(bad.front().params.n == 0);
    CHECK(bad.front().status == Status::fail);
    REQUIRE(bad.front().witness);
    CHECK(bad.front().witness->lhs == Rational(1));
    CHECK(bad.front().witness->rhs == Rational(1, 2));
    for (const auto& r : bad)
        CHECK(r.status == Status::fail);
}

TEST_CASE("generic_check marks out-of-domain points skipped")
{
    const auto grid = make_grid(3, std::vector<Rational>{Rational(-1), Rational(-2), Rational(1)});
    const Evaluator F = [](const GridPoint& p) { return beta_F(p.n, *p.x); };
    const auto reports = generic_check("domain", F, F, grid);
    REQUIRE(reports.size() == 12);
    for (const auto& r : reports) {
        if (*r.params.x > Rational(-1)) {
            CHECK(r.status == Status::pass);
        } else {
            CHECK(r.status == Status::skipped);
            CHECK(r.reason);
        }
    }
    CHECK_FALSE(any_failed(reports));
}

TEST_CASE("reports are sorted by parameters")
{
    const auto reports = check_lemma_a(6, 3, std::vector<Rational>{Rational(7, 3), Rational(0)});
    for (std::size_t i = 1; i < reports.size(); ++i)
        if (reports[i].identity_id == reports[i - 1].identity_id)
            CHECK_FALSE(reports[i].params < reports[i - 1].params);
}

TEST_CASE("all check families pass on the standard grid")
{
    require_all_pass(check_beta_equality(25, kXs));
    require_all_pass(check_lemma_a(25, 6, kXs));
    require_all_pass(check_theorem_2_2(25, kXs));
    require_all_pass(check_theorem_2_3(25, kXs));
    require_all_pass(check_theorem_2_5(25, kXs));
    require_all_pass(check_theorem_2_6_finite(6, 25, kXs));
    require_all_pass(check_inversion(25, kXs));
}

TEST_CASE("check_all covers every identity id")
{
    SweepConfig config = SweepConfig::defaults();
    CHECK(config.n_max == 50);
    CHECK(config.r_max == 6);
    CHECK(config.xs.size() == 5);
    config.n_max = 12;
    config.r_max = 4;
    const auto reports = check_all(config);
    CHECK_FALSE(any_failed(reports));

    std::set<std::string> ids;
    for (const auto& r : reports)
        ids.insert(r.identity_id);
    for (const char* id : {"eq13-14", "eq13-binom", "lemma2.1a", "lemma2.1b", "eq15", "eq16", "thm2.2a", "thm2.2b",
                           "thm2.3a", "thm2.3b", "thm2.3c", "thm2.3d", "eq20", "eq21", "eq28a", "eq28b", "eq29a",
                           "eq29b", "thm2.5a", "thm2.5b", "thm2.6-finite", "inversion-r1", "inversion-r5",
                           "inversion-involution"})
        CHECK_MESSAGE(ids.count(id) == 1, id);
}

TEST_CASE("report serialization")
{
    IdentityReport r;
    r.identity_id = "eq15";
    r.params = GridPoint{3, Rational(1, 2), std::nullopt};
    r.status = Status::fail;
    r.witness = Witness{Rational(11, 18), Rational(-1, 30)};
    r.elapsed_ms = 0;
    CHECK(to_json(r)
          == R"({"identity_id":"eq15","params":{"n":3,"x":"1/2"},"status":"fail","witness":{"lhs":"11/18","rhs":"-1/30"},"elapsed_ms":0})");
    CHECK(csv_header() == "identity_id,n,x,r,status,lhs,rhs,elapsed_ms");
    CHECK(to_csv(r) == "eq15,3,1/2,,fail,11/18,-1/30,0");
}
