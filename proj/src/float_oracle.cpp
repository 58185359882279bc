#include "harmonic/float_oracle.hpp"

#include "harmonic/beta_engine.hpp"
#include "harmonic/harmonic_core.hpp"
#include "harmonic/parallel.hpp"
#include "harmonic/series_lab.hpp"

#include <array>
#include <chrono>
#include <cmath>
#include <queue>
#include <random>
#include <stdexcept>

namespace harmonic {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1].
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000,
};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714,
};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327,
};

struct Segment {
    double a;
    double b;
    double value;
    double error;

    bool operator<(const Segment& other) const { return error < other.error; }
};

template <typename F>
Segment gauss_kronrod(const F& f, double a, double b)
{
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double fc = f(center);
    double kronrod = fc * kWgk[7];
    double gauss = fc * kWg[3];
    for (int j = 0; j < 7; ++j) {
        const double dx = half * kXgk[j];
        const double pair = f(center - dx) + f(center + dx);
        kronrod += kWgk[j] * pair;
        if (j % 2 == 1)
            gauss += kWg[j / 2] * pair;
    }
    return {a, b, kronrod * half, std::fabs((kronrod - gauss) * half)};
}

// Global adaptive bisection of the worst segment until the summed error
// estimate meets tolerance or the evaluation budget is spent.
template <typename F>
QuadratureResult adaptive_integrate(const F& f, double a, double b, double rel_tol, std::uint64_t budget)
{
    std::priority_queue<Segment> heap;
    heap.push(gauss_kronrod(f, a, b));
    std::uint64_t evals = 15;
    double value = heap.top().value;
    double error = heap.top().error;
    while (error > rel_tol * std::fabs(value) && evals + 30 <= budget) {
        const Segment worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b))
            break;
        heap.pop();
        const Segment left = gauss_kronrod(f, worst.a, mid);
        const Segment right = gauss_kronrod(f, mid, worst.b);
        evals += 30;
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum from the segments to shed the running-update drift.
    value = 0.0;
    error = 0.0;
    while (!heap.empty()) {
        value += heap.top().value;
        error += heap.top().error;
        heap.pop();
    }
    QuadratureResult out;
    out.value = value;
    out.abs_error_estimate = error;
    out.evaluations = evals;
    out.converged = error <= rel_tol * std::fabs(value) || error == 0.0;
    return out;
}

// int_U^inf u^m e^(-c u) du = e^(-cU) sum_{i=0}^{m} m!/i! U^i / c^(m-i+1)
double envelope_tail(unsigned m, double c, double U)
{
    double sum = 0.0;
    double ratio = 1.0; // m!/i!, i running down from m
    for (int i = static_cast<int>(m); i >= 0; --i) {
        sum += ratio * std::pow(U, i) / std::pow(c, static_cast<double>(m - i + 1));
        ratio *= i;
    }
    return std::exp(-c * U) * sum;
}

std::uint64_t splitmix64(std::uint64_t z)
{
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double unit_uniform(std::mt19937_64& rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace

QuadratureResult log_moment_quadrature(std::uint64_t n, unsigned m, const Rational& x)
{
    require_beta_domain(x);
    const double c = x.to_double() + 1.0;
    const double nd = static_cast<double>(n);
    const double sign = m % 2 == 0 ? 1.0 : -1.0;
    auto f = [=](double u) {
        const double one_minus_t = -std::expm1(-u);
        return sign * std::pow(one_minus_t, nd) * std::pow(u, static_cast<double>(m)) * std::exp(-c * u);
    };

    constexpr double rel_tol = 1e-13;
    constexpr double tail_tol = 1e-14;
    double lower = 0.0;
    double upper = (static_cast<double>(m) + 40.0) / c;
    QuadratureResult total;
    total.converged = true;
    while (true) {
        if (total.evaluations >= kQuadratureEvaluationCap) {
            total.converged = false;
            break;
        }
        const QuadratureResult piece =
            adaptive_integrate(f, lower, upper, rel_tol, kQuadratureEvaluationCap - total.evaluations);
        total.value += piece.value;
        total.abs_error_estimate += piece.abs_error_estimate;
        total.evaluations += piece.evaluations;
        total.converged = total.converged && piece.converged;
        total.upper_limit = upper;
        if (envelope_tail(m, c, upper) <= tail_tol * std::fabs(total.value))
            break;
        lower = upper;
        upper *= 2.0;
    }
    return total;
}

MonteCarloResult cube_monte_carlo(std::uint64_t n, unsigned r, std::uint64_t samples, std::uint64_t seed)
{
    if (samples < 2)
        throw std::invalid_argument("Monte Carlo needs at least two samples");
    if (r == 0)
        throw std::invalid_argument("Monte Carlo dimension must be positive");

    const std::uint64_t batches = (samples + kMonteCarloBatch - 1) / kMonteCarloBatch;
    std::vector<double> sums(batches);
    std::vector<double> squares(batches);
    const double nd = static_cast<double>(n);
    parallel_for(batches, [&](std::size_t b) {
        std::mt19937_64 rng(splitmix64(seed ^ splitmix64(b)));
        const std::uint64_t begin = b * kMonteCarloBatch;
        const std::uint64_t end = std::min(samples, begin + kMonteCarloBatch);
        double s = 0.0;
        double sq = 0.0;
        for (std::uint64_t i = begin; i < end; ++i) {
            double prod = 1.0;
            for (unsigned d = 0; d < r; ++d)
                prod *= unit_uniform(rng);
            const double v = std::pow(1.0 - prod, nd);
            s += v;
            sq += v * v;
        }
        sums[b] = s;
        squares[b] = sq;
    });

    double s = 0.0;
    double sq = 0.0;
    for (std::size_t b = 0; b < batches; ++b) {
        s += sums[b];
        sq += squares[b];
    }
    const double count = static_cast<double>(samples);
    const double mean = s / count;
    const double variance = std::max(0.0, (sq - count * mean * mean) / (count - 1.0));

    MonteCarloResult out;
    out.estimate = mean;
    out.std_error = std::sqrt(variance / count);
    out.samples = samples;
    out.seed = seed;
    out.generator = "mt19937_64/splitmix64-batch" + std::to_string(kMonteCarloBatch);
    return out;
}

IdentityReport quadrature_report(std::uint64_t n, unsigned m, const Rational& x, double rel_tol)
{
    const auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.identity_id = "lemma2.1a-quad";
    report.params = GridPoint{n, x, m};
    try {
        const QuadratureResult q = log_moment_quadrature(n, m, x);
        const Rational exact = derivative_F(n, x, m);
        report.oracle = QuadratureOracle{q.value, q.abs_error_estimate, q.evaluations};
        const double reference = exact.to_double();
        const double rel = std::fabs(q.value - reference) / std::fabs(reference);
        if (!q.converged) {
            report.status = Status::fail;
            report.reason = "quadrature did not converge within the evaluation cap";
            report.witness = Witness{exact, Rational::from_double(q.value)};
        } else if (!(rel <= rel_tol)) {
            report.status = Status::fail;
            report.witness = Witness{exact, Rational::from_double(q.value)};
        } else {
            report.status = Status::pass;
        }
    } catch (const std::domain_error& e) {
        report.status = Status::skipped;
        report.reason = e.what();
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

IdentityReport monte_carlo_report(std::uint64_t n, unsigned r, std::uint64_t samples, std::uint64_t seed,
                                  double k_sigma)
{
    const auto start = std::chrono::steady_clock::now();
    IdentityReport report;
    report.identity_id = "lemma2.1c-mc";
    report.params = GridPoint{n, std::nullopt, r};
    const MonteCarloResult mc = cube_monte_carlo(n, r, samples, seed);
    const Rational exact = multi_integral_exact(n, r);
    report.oracle = MonteCarloOracle{mc.estimate, mc.std_error, mc.samples, mc.seed, mc.generator};
    const double deviation = std::fabs(mc.estimate - exact.to_double());
    if (deviation <= k_sigma * mc.std_error || (mc.std_error == 0.0 && deviation == 0.0)) {
        report.status = Status::pass;
    } else {
        report.status = Status::fail;
        report.witness = Witness{exact, Rational::from_double(mc.estimate)};
    }
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    return report;
}

} // namespace harmonic
