#include "harmonic/identity_suite.hpp"

#include "harmonic/beta_engine.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/parallel.hpp"

#include "display_forms.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <memory>
#include <random>
#include <stdexcept>

namespace harmonic {

std::vector<Rational> binomial_inverse(std::span<const Rational> a)
{
    // Work over a common denominator so the O(n^2) inner loop is integer-only.
    BigInt common = 1;
    for (const Rational& v : a) {
        const BigInt d = v.denominator();
        mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<BigInt> scaled;
    scaled.reserve(a.size());
    for (const Rational& v : a)
        scaled.push_back(v.numerator() * (common / v.denominator()));

    std::vector<Rational> out;
    out.reserve(a.size());
    std::vector<BigInt> row{1}; // C(n, 0..n)
    for (std::size_t n = 0; n < a.size(); ++n) {
        if (n > 0) {
            row.push_back(1);
            for (std::size_t k = n - 1; k > 0; --k)
                row[k] += row[k - 1];
        }
        BigInt acc = 0;
        for (std::size_t k = 0; k <= n; ++k) {
            if (k % 2 == 0)
                acc += row[k] * scaled[k];
            else
                acc -= row[k] * scaled[k];
        }
        out.emplace_back(acc, common);
    }
    return out;
}

std::vector<IdentityReport> generic_check(const std::string& identity_id, const Evaluator& lhs,
                                          const Evaluator& rhs, std::span<const GridPoint> grid)
{
    std::vector<IdentityReport> out(grid.size());
    parallel_for(grid.size(), [&](std::size_t i) {
        const auto start = std::chrono::steady_clock::now();
        IdentityReport& report = out[i];
        report.identity_id = identity_id;
        report.params = grid[i];
        try {
            Rational l = lhs(grid[i]);
            Rational r = rhs(grid[i]);
            if (l == r) {
                report.status = Status::pass;
            } else {
                report.status = Status::fail;
                report.witness = Witness{std::move(l), std::move(r)};
            }
        } catch (const std::domain_error& e) {
            report.status = Status::skipped;
            report.reason = e.what();
        } catch (const std::invalid_argument& e) {
            report.status = Status::skipped;
            report.reason = e.what();
        }
        const auto stop = std::chrono::steady_clock::now();
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
    });
    std::stable_sort(out.begin(), out.end(),
                     [](const IdentityReport& a, const IdentityReport& b) { return a.params < b.params; });
    return out;
}

std::vector<GridPoint> make_grid(std::uint64_t n_max, std::span<const Rational> xs)
{
    std::vector<GridPoint> grid;
    for (std::uint64_t n = 0; n <= n_max; ++n)
        for (const Rational& x : xs)
            grid.push_back({n, x, std::nullopt});
    return grid;
}

std::vector<GridPoint> make_grid(std::uint64_t n_max, std::span<const Rational> xs, unsigned r_min,
                                 unsigned r_max)
{
    std::vector<GridPoint> grid;
    for (std::uint64_t n = 0; n <= n_max; ++n)
        for (const Rational& x : xs)
            for (unsigned r = r_min; r <= r_max; ++r)
                grid.push_back({n, x, r});
    return grid;
}

SweepConfig SweepConfig::defaults()
{
    SweepConfig c;
    c.xs = {Rational(0), Rational(1, 2), Rational(1), Rational(7, 3), Rational(-49, 100)};
    return c;
}

namespace {

// Per-x lookup of H_k(x, .), F_k(x) in product form, and F_k(x) in the
// 1/(C(x+k+1,k)(x+1)) form.
struct XTable {
    std::vector<HarmonicVector> h;
    std::vector<Rational> F;
    std::vector<Rational> F_binom;
};

class Tables {
public:
    Tables(std::uint64_t n_max, std::span<const Rational> xs, unsigned order)
    {
        std::vector<Rational> valid;
        for (const Rational& x : xs)
            if (x > Rational(-1) && !tables_.count(x))
                valid.push_back(x);
        std::vector<std::unique_ptr<XTable>> built(valid.size());
        parallel_for(valid.size(), [&](std::size_t i) {
            const Rational& x = valid[i];
            auto t = std::make_unique<XTable>();
            for (std::uint64_t k = 0; k <= n_max; ++k) {
                t->h.push_back(harmonic_vector(k, x, order));
                t->F.push_back(beta_F(k, x));
                t->F_binom.push_back(
                    (generalized_binomial(x + Rational(k + 1), static_cast<unsigned>(k)) * (x + Rational(1)))
                        .inverse());
            }
            built[i] = std::move(t);
        });
        for (std::size_t i = 0; i < valid.size(); ++i)
            tables_.emplace(valid[i], std::move(built[i]));
    }

    /// Throws std::domain_error for x outside the tabulated, valid set.
    const XTable& at(const std::optional<Rational>& x) const
    {
        const Rational v = x.value_or(Rational(0));
        require_beta_domain(v);
        auto it = tables_.find(v);
        if (it == tables_.end())
            throw std::domain_error("x = " + v.str() + " was not tabulated");
        return *it->second;
    }

private:
    std::map<Rational, std::unique_ptr<XTable>> tables_;
};

// H_m^(a) for m <= m_max, a <= order; row m holds (H_m^(1), ..., H_m^(order)).
std::vector<std::vector<Rational>> harmonic_number_table(std::uint64_t m_max, unsigned order)
{
    std::vector<std::vector<Rational>> rows(m_max + 1, std::vector<Rational>(order));
    parallel_for(m_max + 1, [&](std::size_t m) {
        for (unsigned a = 1; a <= order; ++a)
            rows[m][a - 1] = harmonic_number(m, a);
    });
    return rows;
}

template <typename Fn>
Rational alternating_sum(std::uint64_t n, Fn&& term)
{
    Rational sum;
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rational t = Rational(binomial(n, static_cast<std::int64_t>(k))) * term(k);
        if (k % 2 == 0)
            sum += t;
        else
            sum -= t;
    }
    return sum;
}

using display::poly2;
using display::poly3;
using display::poly4;

auto hx(const HarmonicVector& v)
{
    return [&v](unsigned a) -> const Rational& { return v.at(a); };
}

auto hnum(const std::vector<Rational>& row)
{
    return [&row](unsigned a) -> const Rational& { return row.at(a - 1); };
}

Rational inverse_power(const GridPoint& p, int s)
{
    return (p.x.value_or(Rational(0)) + Rational(p.n + 1)).pow(-s);
}

void append(std::vector<IdentityReport>& out, std::vector<IdentityReport> more)
{
    out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

std::vector<GridPoint> zero_grid(std::uint64_t n_max)
{
    const std::vector<Rational> zero{Rational(0)};
    return make_grid(n_max, zero);
}

} // namespace

std::vector<IdentityReport> check_beta_equality(std::uint64_t n_max, std::span<const Rational> xs)
{
    const Tables tables(n_max, xs, 1);
    const auto grid = make_grid(n_max, xs);
    std::vector<IdentityReport> out;
    append(out, generic_check(
                    "eq13-14", [](const GridPoint& p) { return beta_F(p.n, *p.x); },
                    [](const GridPoint& p) { return beta_F_sum(p.n, *p.x); }, grid));
    append(out, generic_check(
                    "eq13-binom", [](const GridPoint& p) { return beta_F(p.n, *p.x); },
                    [&](const GridPoint& p) { return tables.at(p.x).F_binom[p.n]; }, grid));
    return out;
}

std::vector<IdentityReport> check_lemma_a(std::uint64_t n_max, unsigned r_max, std::span<const Rational> xs)
{
    std::vector<IdentityReport> out;
    append(out, generic_check(
                    "lemma2.1a", [](const GridPoint& p) { return derivative_F(p.n, *p.x, *p.r); },
                    [](const GridPoint& p) {
                        const unsigned r = *p.r;
                        Rational s = Rational(factorial(r)) * alt_power_sum(p.n, *p.x, r + 1);
                        return r % 2 == 0 ? s : -s;
                    },
                    make_grid(n_max, xs, 1, r_max)));
    append(out, generic_check(
                    "lemma2.1b", [](const GridPoint& p) { return derivative_F(p.n, *p.x, 1); },
                    [](const GridPoint& p) { return -harmonic_function(p.n, *p.x, 1) * beta_F(p.n, *p.x); },
                    make_grid(n_max, xs)));
    return out;
}

std::vector<IdentityReport> check_theorem_2_2(std::uint64_t n_max, std::span<const Rational> xs)
{
    const Tables tables(n_max, xs, 1);
    const auto hn = harmonic_number_table(n_max + 1, 1);
    const auto grid = make_grid(n_max, xs);
    const auto grid0 = zero_grid(n_max);
    std::vector<IdentityReport> out;

    append(out, generic_check(
                    "eq15", [](const GridPoint& p) { return alt_power_sum(p.n, *p.x, 2); },
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return t.h[p.n].at(1) * t.F_binom[p.n];
                    },
                    grid));
    append(out, generic_check(
                    "eq16",
                    [](const GridPoint& p) {
                        return alternating_sum(p.n, [](std::uint64_t k) { return Rational(k + 1).pow(-2); });
                    },
                    [&](const GridPoint& p) { return hn[p.n + 1][0] / Rational(p.n + 1); }, grid0));
    append(out, generic_check(
                    "thm2.2a",
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return alternating_sum(p.n, [&](std::uint64_t k) { return t.h[k].at(1) * t.F_binom[k]; });
                    },
                    [](const GridPoint& p) { return inverse_power(p, 2); }, grid));
    append(out, generic_check(
                    "thm2.2b",
                    [&](const GridPoint& p) {
                        return alternating_sum(p.n, [&](std::uint64_t k) { return hn[k + 1][0] / Rational(k + 1); });
                    },
                    [](const GridPoint& p) { return inverse_power(p, 2); }, grid0));
    return out;
}

std::vector<IdentityReport> check_theorem_2_3(std::uint64_t n_max, std::span<const Rational> xs)
{
    const Tables tables(n_max, xs, 3);
    const auto hn = harmonic_number_table(n_max + 1, 3);
    const auto grid = make_grid(n_max, xs);
    const auto grid0 = zero_grid(n_max);
    std::vector<IdentityReport> out;

    append(out, generic_check(
                    "thm2.3a",
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return poly2(hx(t.h[p.n])) * t.F_binom[p.n];
                    },
                    [](const GridPoint& p) { return Rational(2) * alt_power_sum(p.n, *p.x, 3); }, grid));
    append(out, generic_check(
                    "thm2.3b",
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return poly3(hx(t.h[p.n])) * t.F_binom[p.n];
                    },
                    [](const GridPoint& p) { return Rational(6) * alt_power_sum(p.n, *p.x, 4); }, grid));
    append(out, generic_check(
                    "thm2.3c",
                    [](const GridPoint& p) {
                        return Rational(2)
                            * alternating_sum(p.n, [](std::uint64_t k) { return Rational(k + 1).pow(-3); });
                    },
                    [&](const GridPoint& p) { return poly2(hnum(hn[p.n + 1])) / Rational(p.n + 1); }, grid0));
    append(out, generic_check(
                    "thm2.3d",
                    [](const GridPoint& p) {
                        return Rational(6)
                            * alternating_sum(p.n, [](std::uint64_t k) { return Rational(k + 1).pow(-4); });
                    },
                    [&](const GridPoint& p) { return poly3(hnum(hn[p.n + 1])) / Rational(p.n + 1); }, grid0));
    append(out, generic_check(
                    "eq20",
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return alternating_sum(p.n, [&](std::uint64_t k) { return poly2(hx(t.h[k])) * t.F_binom[k]; })
                            / Rational(2);
                    },
                    [](const GridPoint& p) { return inverse_power(p, 3); }, grid));
    append(out, generic_check(
                    "eq21",
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return alternating_sum(p.n, [&](std::uint64_t k) { return poly3(hx(t.h[k])) * t.F_binom[k]; })
                            / Rational(6);
                    },
                    [](const GridPoint& p) { return inverse_power(p, 4); }, grid));
    return out;
}

std::vector<IdentityReport> check_theorem_2_5(std::uint64_t n_max, std::span<const Rational> xs)
{
    const Tables tables(n_max, xs, 4);
    const auto hn = harmonic_number_table(n_max + 1, 4);
    const auto grid = make_grid(n_max, xs);
    const auto grid0 = zero_grid(n_max);
    const Rational f24(24);
    std::vector<IdentityReport> out;

    append(out, generic_check(
                    "eq28a", [](const GridPoint& p) { return alt_power_sum(p.n, *p.x, 5); },
                    [&](const GridPoint& p) { return derivative_F(p.n, *p.x, 4) / f24; }, grid));
    append(out, generic_check(
                    "eq28b", [](const GridPoint& p) { return alt_power_sum(p.n, *p.x, 5); },
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return poly4(hx(t.h[p.n])) * t.F_binom[p.n] / f24;
                    },
                    grid));
    append(out, generic_check(
                    "eq29a",
                    [](const GridPoint& p) {
                        return alternating_sum(p.n, [](std::uint64_t k) { return Rational(k + 1).pow(-5); });
                    },
                    [&](const GridPoint& p) { return derivative_F(p.n, Rational(0), 4) / f24; }, grid0));
    append(out, generic_check(
                    "eq29b",
                    [](const GridPoint& p) {
                        return alternating_sum(p.n, [](std::uint64_t k) { return Rational(k + 1).pow(-5); });
                    },
                    [&](const GridPoint& p) { return poly4(hnum(hn[p.n + 1])) / (f24 * Rational(p.n + 1)); },
                    grid0));
    append(out, generic_check(
                    "thm2.5a",
                    [&](const GridPoint& p) {
                        const XTable& t = tables.at(p.x);
                        return alternating_sum(p.n,
                                               [&](std::uint64_t k) { return poly4(hx(t.h[k])) * t.F_binom[k] / f24; });
                    },
                    [](const GridPoint& p) { return inverse_power(p, 5); }, grid));
    append(out, generic_check(
                    "thm2.5b",
                    [&](const GridPoint& p) {
                        return alternating_sum(p.n, [&](std::uint64_t k) { return poly4(hnum(hn[k + 1])) / Rational(k + 1); })
                            / f24;
                    },
                    [](const GridPoint& p) { return inverse_power(p, 5); }, grid0));
    return out;
}

std::vector<IdentityReport> check_theorem_2_6_finite(unsigned r_max, std::uint64_t n_max,
                                                     std::span<const Rational> xs)
{
    const Tables tables(n_max, xs, r_max + 1);
    return generic_check(
        "thm2.6-finite", [](const GridPoint& p) { return alt_power_sum(p.n, *p.x, *p.r + 2); },
        [&](const GridPoint& p) {
            const XTable& t = tables.at(p.x);
            const unsigned r = *p.r;
            const HarmonicVector& h = t.h[p.n];
            Rational sum;
            for (unsigned l = 0; l <= r; ++l) {
                Rational term = Rational(binomial(r, l)) * Rational(factorial(l)) * h.at(l + 1)
                    * derivative_F(h, t.F[p.n], r - l);
                if (l % 2 == 0)
                    sum += term;
                else
                    sum -= term;
            }
            sum /= Rational(factorial(r + 1));
            return r % 2 == 0 ? sum : -sum;
        },
        make_grid(n_max, xs, 0, r_max));
}

std::vector<IdentityReport> check_inversion(std::uint64_t n_max, std::span<const Rational> xs)
{
    constexpr unsigned max_power = 5;
    const Tables tables(n_max, xs, max_power);

    // Forward forms sum_k C(n,k)(-1)^k/(x+k+1)^r = G_{r-1}(H_n(x,.)) F_n(x)/(r-1)!,
    // inverted as whole sequences.
    std::map<std::pair<Rational, unsigned>, std::vector<Rational>> inverted;
    for (const Rational& x : xs) {
        if (x <= Rational(-1))
            continue;
        const XTable& t = tables.at(x);
        for (unsigned r = 1; r <= max_power; ++r) {
            const BellExpansion& g = bell_expansion(r - 1);
            const Rational scale = Rational(factorial(r - 1)).inverse();
            std::vector<Rational> forward;
            for (std::uint64_t k = 0; k <= n_max; ++k)
                forward.push_back(g.evaluate(t.h[k]) * t.F_binom[k] * scale);
            inverted[{x, r}] = binomial_inverse(forward);
        }
    }

    std::vector<IdentityReport> out;
    for (unsigned r = 1; r <= max_power; ++r) {
        append(out, generic_check(
                        "inversion-r" + std::to_string(r),
                        [&, r](const GridPoint& p) {
                            require_beta_domain(*p.x);
                            return inverted.at({*p.x, r})[p.n];
                        },
                        [r](const GridPoint& p) { return inverse_power(p, static_cast<int>(r)); },
                        make_grid(n_max, xs)));
    }

    for (std::uint64_t len = 1; len <= n_max + 1; ++len) {
        const auto start = std::chrono::steady_clock::now();
        std::mt19937_64 rng(len);
        std::uniform_int_distribution<long> num(-1000, 1000);
        std::uniform_int_distribution<long> den(1, 1000);
        std::vector<Rational> a;
        for (std::uint64_t i = 0; i < len; ++i)
            a.emplace_back(BigInt(num(rng)), BigInt(den(rng)));
        const std::vector<Rational> twice = binomial_inverse(binomial_inverse(a));

        IdentityReport report;
        report.identity_id = "inversion-involution";
        report.params.n = len;
        report.status = Status::pass;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (twice[i] != a[i]) {
                report.status = Status::fail;
                report.witness = Witness{twice[i], a[i]};
                break;
            }
        }
        report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
        out.push_back(std::move(report));
    }
    return out;
}

std::vector<IdentityReport> check_all(const SweepConfig& config)
{
    std::vector<IdentityReport> out;
    append(out, check_beta_equality(config.n_max, config.xs));
    append(out, check_lemma_a(config.n_max, config.r_max, config.xs));
    append(out, check_theorem_2_2(config.n_max, config.xs));
    append(out, check_theorem_2_3(config.n_max, config.xs));
    append(out, check_theorem_2_5(config.n_max, config.xs));
    append(out, check_theorem_2_6_finite(config.r_max, config.n_max, config.xs));
    append(out, check_inversion(config.n_max, config.xs));
    return out;
}

} // namespace harmonic
