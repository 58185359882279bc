// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include "harmonic/beta_engine.hpp"
#include "harmonic/float_oracle.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/identity_suite.hpp"
#include "harmonic/series_lab.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace harmonic;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

using Clock = std::chrono::steady_clock;

const std::vector<Rational> kXs = {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3)};

bool all_pass(const std::vector<IdentityReport>& reports, std::string& detail)
{
    std::size_t failed = 0;
    std::size_t skipped = 0;
    for (const auto& r : reports) {
        if (r.status == Status::fail) {
            if (failed == 0)
                detail = "first failure " + r.identity_id + " n=" + std::to_string(r.params.n);
            ++failed;
        }
        skipped += r.status == Status::skipped;
    }
    detail = std::to_string(reports.size()) + " reports, " + std::to_string(failed) + " failed, "
        + std::to_string(skipped) + " skipped" + (failed ? "; " + detail : "");
    return failed == 0 && skipped == 0 && !reports.empty();
}

Outcome bell_coefficients()
{
    Outcome o;
    struct Expected {
        unsigned r;
        std::vector<std::pair<Monomial, long>> terms;
    };
    const std::vector<Expected> expected = {
        {2, {{{0, 1}, 1}, {{2}, 1}}},
        {3, {{{0, 0, 1}, 2}, {{1, 1}, 3}, {{3}, 1}}},
        {4, {{{0, 0, 0, 1}, 6}, {{1, 0, 1}, 8}, {{0, 2}, 3}, {{2, 1}, 6}, {{4}, 1}}},
    };
    for (const auto& e : expected) {
        const auto& p = bell_expansion(e.r).polynomial();
        bool match = p.terms().size() == e.terms.size();
        for (const auto& [m, c] : e.terms)
            match = match && p.coefficient(m) == c;
        if (!match) {
            o.ok = false;
            o.detail += "r=" + std::to_string(e.r) + " got " + p.str() + "; ";
        }
    }
    if (o.ok)
        o.detail = "{1,1} {2,3,1} {6,8,3,6,1}";
    return o;
}

Outcome derivative_closure()
{
    Outcome o;
    std::size_t checked = 0;
    for (const Rational& x : kXs)
        for (std::uint64_t n = 0; n <= 40; ++n)
            for (unsigned r = 0; r <= 8; ++r) {
                Rational sum;
                for (std::uint64_t k = 0; k <= n; ++k) {
                    const Rational term = Rational(binomial(n, static_cast<std::int64_t>(k)))
                        / (x + Rational(static_cast<long>(k + 1))).pow(static_cast<int>(r + 1));
                    sum += (k + r) % 2 == 0 ? term : -term;
                }
                ++checked;
                if (derivative_F(n, x, r) != Rational(factorial(r)) * sum) {
                    o.ok = false;
                    o.detail = "mismatch at n=" + std::to_string(n) + " x=" + x.str() + " r=" + std::to_string(r);
                    return o;
                }
            }
    o.detail = std::to_string(checked) + " exact equalities";
    return o;
}

Outcome closed_form_sweeps()
{
    Outcome o;
    std::vector<IdentityReport> all = check_theorem_2_2(50, kXs);
    for (auto* f : {&check_theorem_2_3, &check_theorem_2_5}) {
        auto more = (*f)(50, kXs);
        all.insert(all.end(), more.begin(), more.end());
    }
    o.ok = all_pass(all, o.detail);
    return o;
}

Outcome finite_double_sum()
{
    Outcome o;
    o.ok = all_pass(check_theorem_2_6_finite(6, 30, std::vector<Rational>{Rational(0), Rational(1, 2)}), o.detail);
    return o;
}

Outcome involution()
{
    Outcome o;
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> length(1, 64);
    std::uniform_int_distribution<long> num(-1'000'000, 1'000'000);
    std::uniform_int_distribution<long> den(1, 1'000'000);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<Rational> a;
        const std::size_t len = length(rng);
        for (std::size_t i = 0; i < len; ++i)
            a.emplace_back(num(rng), den(rng));
        if (binomial_inverse(binomial_inverse(a)) != a) {
            o.ok = false;
            o.detail = "trial " + std::to_string(trial) + " not restored";
            return o;
        }
    }
    o.detail = "1000 sequences restored";
    return o;
}

Outcome series_limits()
{
    Outcome o;
    constexpr std::uint64_t N = 10'000;
    std::vector<SeriesEstimate> estimates;
    for (unsigned r = 1; r <= 6; ++r)
        estimates.push_back(lemma_c_partial(r, N));
    for (auto v : {CorollaryVariant::r3, CorollaryVariant::r4, CorollaryVariant::r5})
        estimates.push_back(corollary_2_4_partial(v, N));
    for (unsigned r = 0; r <= 4; ++r)
        estimates.push_back(eq32_partial(r, N));

    for (const auto& e : estimates) {
        const Rational limit = std::get<Rational>(*e.claimed_limit);
        const Rational& partial = e.exact_partial();
        // Inside means strictly between zero-side partial and the limit.
        const bool below = limit.sign() > 0 ? partial < limit : partial > limit;
        const bool contains = e.brackets_claim();
        const bool narrow = e.width() <= Rational(1, 20) * (limit.sign() < 0 ? -limit : limit);
        char buf[160];
        std::snprintf(buf, sizeof buf, "%s limit=%s partial=%.6f width=%.4g%s%s%s; ", e.target_id.c_str(),
                      limit.str().c_str(), e.partial_value(), e.width().to_double(), below ? "" : " NOT-BELOW",
                      contains ? "" : " EXCLUDED", narrow ? "" : " TOO-WIDE");
        if (!(below && contains && narrow && e.exact)) {
            o.ok = false;
            o.detail += buf;
        }
    }
    if (o.ok)
        o.detail = std::to_string(estimates.size()) + " series bracketed at N=10^4";
    return o;
}

Outcome zeta_brackets()
{
    Outcome o;
    for (int s : {2, 4, 6, 8}) {
        const auto e = hurwitz_partial(Rational(0), s, 1000);
        const auto& claim = std::get<PiPower>(*e.claimed_limit);
        const bool coeff_ok = claim.coeff == zeta_even_coefficient(static_cast<unsigned>(s / 2)) && claim.pi_power == s;
        if (!coeff_ok || !e.brackets_claim(1e-12)) {
            o.ok = false;
            o.detail += "s=" + std::to_string(s) + " failed; ";
        }
    }
    if (o.ok)
        o.detail = "s = 2, 4, 6, 8 bracketed";
    return o;
}

Outcome quadrature_agreement()
{
    Outcome o;
    double worst = 0.0;
    for (const Rational& x : {Rational(0), Rational(1, 2)})
        for (std::uint64_t n = 0; n <= 20; ++n)
            for (unsigned m = 0; m <= 4; ++m) {
                const auto q = log_moment_quadrature(n, m, x);
                const double exact = derivative_F(n, x, m).to_double();
                const double rel = std::fabs(q.value - exact) / std::fabs(exact);
                worst = std::max(worst, rel);
                if (!(rel <= 1e-9)) {
                    o.ok = false;
                    o.detail += "n=" + std::to_string(n) + " m=" + std::to_string(m) + " x=" + x.str() + "; ";
                }
            }
    char buf[64];
    std::snprintf(buf, sizeof buf, "worst relative error %.3g", worst);
    o.detail = buf + (o.ok ? std::string() : "; " + o.detail);
    return o;
}

Outcome monte_carlo()
{
    Outcome o;
    constexpr std::uint64_t seed = 42;
    for (auto [n, r] : {std::pair<std::uint64_t, unsigned>{1, 2}, {3, 2}, {5, 3}}) {
        const auto mc = cube_monte_carlo(n, r, 1'000'000, seed);
        const double exact = multi_integral_exact(n, r).to_double();
        const double z = std::fabs(mc.estimate - exact) / mc.std_error;
        char buf[96];
        std::snprintf(buf, sizeof buf, "%s(%llu,%u) z=%.2f", o.detail.empty() ? "" : "; ", static_cast<unsigned long long>(n), r, z);
        o.detail += buf;
        o.ok = o.ok && z <= 4.0;
    }
    return o;
}

Outcome bernoulli_zeta()
{
    Outcome o;
    const BernoulliTable t = bernoulli_table(20);
    o.ok = t.size() == 21 && t[2] == Rational(1, 6) && t[4] == Rational(-1, 30) && t[6] == Rational(1, 42)
        && t[8] == Rational(-1, 30) && zeta_even_coefficient(1) == Rational(1, 6)
        && zeta_even_coefficient(2) == Rational(1, 90) && zeta_even_coefficient(3) == Rational(1, 945)
        && zeta_even_coefficient(4) == Rational(1, 9450);
    o.detail = "B_2..B_8 and zeta(2..8) coefficients";
    return o;
}

struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds; // 0: no time limit
};

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "bell coefficients r=2,3,4", bell_coefficients, 0.001},
        {2, "derivative closure n<=40 r<=8", derivative_closure, 10.0},
        {3, "closed-form sum sweeps n<=50", closed_form_sweeps, 30.0},
        {4, "finite double-sum identity r<=6 n<=30", finite_double_sum, 30.0},
        {5, "inversion involution", involution, 0.0},
        {6, "series limit brackets", series_limits, 0.0},
        {7, "zeta brackets", zeta_brackets, 0.0},
        {8, "quadrature agreement", quadrature_agreement, 60.0},
        {9, "monte carlo", monte_carlo, 0.0},
        {10, "bernoulli and zeta(2n)", bernoulli_zeta, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = Clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        const bool in_time = c.limit_seconds == 0.0 || seconds < c.limit_seconds;
        const bool ok = o.ok && in_time;
        failures += !ok;
        char timing[96];
        if (c.limit_seconds > 0.0)
            std::snprintf(timing, sizeof timing, "%.3fs (limit %gs)%s", seconds, c.limit_seconds,
                          in_time ? "" : " OVER TIME");
        else
            std::snprintf(timing, sizeof timing, "%.3fs", seconds);
        std::printf("[%s] criterion %d: %s -- %s [%s]\n", ok ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                    timing);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
