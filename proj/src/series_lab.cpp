#include "harmonic/series_lab.hpp"

#include "harmonic/harmonic_core.hpp"
#include "harmonic/identity_suite.hpp"
#include "harmonic/json_writer.hpp"

#include "display_forms.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace harmonic {

namespace {

// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double v)
    {
        const double t = sum_ + v;
        if (std::fabs(sum_) >= std::fabs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

// p if m = p^k for a prime p and k >= 1, else 0.
std::uint64_t prime_power_base(std::uint64_t m)
{
    if (m < 2)
        return 0;
    std::uint64_t p = 0;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
        if (m % d == 0) {
            p = d;
            break;
        }
    }
    if (p == 0)
        return m;
    while (m % p == 0)
        m /= p;
    return m == 1 ? p : 0;
}

BigInt big(std::uint64_t v)
{
    return BigInt(static_cast<unsigned long>(v));
}

void require_terms(std::uint64_t N)
{
    if (N == 0)
        throw std::invalid_argument("series needs at least one term (N >= 1)");
}

// Upper bound on zeta(a), a >= 2: 1000 explicit terms plus the integral tail.
long double zeta_cap(unsigned a)
{
    constexpr unsigned terms = 1000;
    long double s = 0.0L;
    for (unsigned k = terms; k >= 1; --k)
        s += std::pow(static_cast<long double>(k), -static_cast<long double>(a));
    s += 1.0L / ((a - 1) * std::pow(static_cast<long double>(terms), static_cast<long double>(a - 1)));
    return s;
}

// Floating-point bounds are inflated before conversion so rounding can only
// loosen them.
Rational upper_rational(long double v)
{
    return Rational::from_double(static_cast<double>(v * (1.0L + 1e-9L)) + 1e-300);
}

std::pair<Rational, Rational> hurwitz_tail(const Rational& x, int s, std::uint64_t N)
{
    const Rational k(s - 1);
    const Rational low = ((x + Rational(N + 1)).pow(s - 1) * k).inverse();
    const Rational high = ((x + Rational(N)).pow(s - 1) * k).inverse();
    return {low, high};
}

std::string with_params(std::string id, const std::string& params)
{
    return id + "[" + params + "]";
}

HPolynomial eq32_polynomial(unsigned r)
{
    HPolynomial q;
    for (unsigned l = 0; l <= r; ++l) {
        HPolynomial t = HPolynomial::generator(l + 1) * bell_expansion(r - l).polynomial();
        t *= BigInt(binomial(r, l) * factorial(l));
        q += t;
    }
    return q;
}

std::optional<ClaimedLimit> zeta_claim(const Rational& x, int s)
{
    if (x.is_zero() && s % 2 == 0)
        return PiPower{zeta_even_coefficient(static_cast<unsigned>(s / 2)), s};
    return std::nullopt;
}

// Shared body of the lemma-c, cor2.4-* and eq32 series:
// sign * scale * sum_{n=1}^{N} P(H_{n+1})/(n(n+1)).
SeriesEstimate polynomial_series_estimate(std::string target, const HPolynomial& p, unsigned weight,
                                          const Rational& scale, std::uint64_t N, SeriesMode mode,
                                          ClaimedLimit claim)
{
    require_terms(N);
    SeriesEstimate est;
    est.target_id = std::move(target);
    est.N = N;
    est.claimed_limit = std::move(claim);
    if (mode == SeriesMode::exact) {
        est.partial = harmonic_polynomial_series(p, weight, N) * scale;
        est.exact = true;
    } else {
        est.partial = harmonic_polynomial_series_float(p, N) * scale.to_double();
        est.exact = false;
    }
    const Rational bound = harmonic_polynomial_tail_bound(p, N) * (scale.sign() < 0 ? -scale : scale);
    if (scale.sign() >= 0) {
        est.tail_low = 0;
        est.tail_high = bound;
    } else {
        est.tail_low = -bound;
        est.tail_high = 0;
    }
    return est;
}

} // namespace

long double PiPower::value() const
{
    return static_cast<long double>(coeff.to_double()) * std::pow(std::numbers::pi_v<long double>, pi_power);
}

long double to_long_double(const ClaimedLimit& limit)
{
    if (const auto* q = std::get_if<Rational>(&limit))
        return q->to_double();
    return std::get<PiPower>(limit).value();
}

double SeriesEstimate::partial_value() const
{
    if (const auto* q = std::get_if<Rational>(&partial))
        return q->to_double();
    return std::get<double>(partial);
}

bool SeriesEstimate::brackets_claim(double tolerance) const
{
    if (!claimed_limit)
        return true;
    if (exact) {
        if (const auto* limit = std::get_if<Rational>(&*claimed_limit)) {
            const Rational& p = exact_partial();
            return p + tail_low <= *limit && *limit <= p + tail_high;
        }
    }
    const long double limit = to_long_double(*claimed_limit);
    const long double slack = tolerance * std::max(1.0L, std::fabs(limit));
    const long double p = partial_value();
    const long double lo = p + tail_low.to_double();
    const long double hi = p + tail_high.to_double();
    return lo - slack <= limit && limit <= hi + slack;
}

std::string to_json(const SeriesEstimate& e)
{
    JsonWriter w;
    w.begin_object();
    w.key("target_id").value(e.target_id);
    w.key("N").value(e.N);
    w.key("partial");
    if (const auto* q = std::get_if<Rational>(&e.partial))
        w.value(q->str());
    else
        w.value(std::get<double>(e.partial));
    w.key("exact").value(e.exact);
    w.key("tail_low").value(e.tail_low.str());
    w.key("tail_high").value(e.tail_high.str());
    w.key("claimed_limit");
    if (!e.claimed_limit) {
        w.null();
    } else if (const auto* q = std::get_if<Rational>(&*e.claimed_limit)) {
        w.value(q->str());
    } else {
        const auto& pp = std::get<PiPower>(*e.claimed_limit);
        w.begin_object();
        w.key("coeff").value(pp.coeff.str());
        w.key("pi_power").value(pp.pi_power);
        w.end_object();
    }
    w.end_object();
    return w.str();
}

Rational harmonic_polynomial_series(const HPolynomial& p, unsigned weight, std::uint64_t N)
{
    if (!p.is_homogeneous(weight))
        throw std::invalid_argument("harmonic_polynomial_series needs a polynomial homogeneous in weight");
    const unsigned gens = p.max_generator();
    const unsigned top = weight + 1;

    // L = lcm(1..n+1); lpow[i] = L^i; a[i-1] = L^i H_{n+1}^(i); sum = acc / L^top.
    std::vector<BigInt> lpow(top + 1, BigInt(1));
    std::vector<BigInt> a(gens, BigInt(1));
    std::vector<BigInt> ppow(top + 1);
    BigInt acc = 0;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const std::uint64_t m = n + 1;
        if (const std::uint64_t base = prime_power_base(m)) {
            ppow[0] = 1;
            for (unsigned i = 1; i <= top; ++i)
                ppow[i] = ppow[i - 1] * big(base);
            for (unsigned i = 1; i <= top; ++i)
                lpow[i] *= ppow[i];
            for (unsigned i = 1; i <= gens; ++i)
                a[i - 1] *= ppow[i];
            acc *= ppow[top];
        }
        BigInt mpow = 1;
        for (unsigned i = 1; i <= gens; ++i) {
            mpow *= big(m);
            BigInt q;
            mpz_divexact(q.get_mpz_t(), lpow[i].get_mpz_t(), mpow.get_mpz_t());
            a[i - 1] += q;
        }
        BigInt nn = big(n) * big(m);
        BigInt shift;
        mpz_divexact(shift.get_mpz_t(), lpow[1].get_mpz_t(), nn.get_mpz_t());
        acc += p.evaluate(std::span<const BigInt>(a)) * shift;
    }
    return Rational(acc, lpow[top]);
}

double harmonic_polynomial_series_float(const HPolynomial& p, std::uint64_t N)
{
    const unsigned gens = p.max_generator();
    std::vector<double> h(gens, 1.0);
    std::vector<CompensatedSum> hsum(gens);
    for (auto& s : hsum)
        s.add(1.0);
    CompensatedSum total;
    for (std::uint64_t n = 1; n <= N; ++n) {
        const double m = static_cast<double>(n + 1);
        for (unsigned i = 1; i <= gens; ++i) {
            hsum[i - 1].add(std::pow(m, -static_cast<double>(i)));
            h[i - 1] = hsum[i - 1].value();
        }
        total.add(p.evaluate(std::span<const double>(h)) / (static_cast<double>(n) * m));
    }
    return total.value();
}

Rational harmonic_polynomial_tail_bound(const HPolynomial& p, std::uint64_t N)
{
    require_terms(N);
    // Group P(h) <= sum_j q_j h_1^j with h_a (a >= 2) replaced by zeta caps.
    std::vector<long double> q;
    for (const auto& [m, c] : p.terms()) {
        if (c < 0)
            throw std::invalid_argument("tail bound needs nonnegative coefficients");
        const unsigned j = m.empty() ? 0 : m[0];
        long double prod = c.get_d();
        for (std::size_t a = 1; a < m.size(); ++a)
            if (m[a] != 0)
                prod *= std::pow(zeta_cap(static_cast<unsigned>(a + 1)), static_cast<long double>(m[a]));
        if (q.size() <= j)
            q.resize(j + 1, 0.0L);
        q[j] += prod;
    }

    // For n > N: H_{n+1}^j/(n(n+1)) <= int_{n-1}^{n} (1 + ln(t+2))^j / t^2 dt and
    // 1 + ln(t+2) <= ln t + u0 on t >= N, so the remainder is at most
    // sum_j q_j int_N^inf (ln t + u0)^j / t^2 dt
    //   = sum_j q_j (1/N) sum_{i=0}^{j} j!/(j-i)! (ln N + u0)^(j-i).
    const long double Nl = static_cast<long double>(N);
    const long double u = std::log(Nl) + 1.0L + std::log1p(2.0L / Nl);
    long double total = 0.0L;
    for (std::size_t j = 0; j < q.size(); ++j) {
        if (q[j] == 0.0L)
            continue;
        long double integral = 0.0L;
        long double falling = 1.0L; // j!/(j-i)!
        for (std::size_t i = 0; i <= j; ++i) {
            integral += falling * std::pow(u, static_cast<long double>(j - i));
            falling *= static_cast<long double>(j - i);
        }
        total += q[j] * integral / Nl;
    }
    return upper_rational(total);
}

SeriesEstimate hurwitz_partial(const Rational& x, int s, std::uint64_t N, SeriesMode mode)
{
    if (s <= 1)
        throw std::invalid_argument("hurwitz_partial diverges for s <= 1");
    require_beta_domain(x);
    require_terms(N);
    SeriesEstimate est;
    est.target_id = with_params("zeta", "x=" + x.str() + ",s=" + std::to_string(s));
    est.N = N;
    if (mode == SeriesMode::exact) {
        Rational sum;
        for (std::uint64_t n = 0; n < N; ++n)
            sum += (x + Rational(n + 1)).pow(-s);
        est.partial = sum;
        est.exact = true;
    } else {
        CompensatedSum sum;
        const double xd = x.to_double();
        for (std::uint64_t n = 0; n < N; ++n)
            sum.add(std::pow(static_cast<double>(n) + xd + 1.0, -static_cast<double>(s)));
        est.partial = sum.value();
        est.exact = false;
    }
    std::tie(est.tail_low, est.tail_high) = hurwitz_tail(x, s, N);
    est.claimed_limit = zeta_claim(x, s);
    return est;
}

SeriesEstimate lemma_c_partial(unsigned r, std::uint64_t N, SeriesMode mode)
{
    if (r == 0)
        throw std::invalid_argument("lemma_c_partial requires r >= 1");
    // (1/n) sum_k C(n,k)(-1)^k/(k+1)^r = G_{r-1}(H_{n+1}) / ((r-1)! n (n+1))
    const BellExpansion& g = bell_expansion(r - 1);
    return polynomial_series_estimate(with_params("lemma-c", "r=" + std::to_string(r)), g.polynomial(), r - 1,
                                      Rational(factorial(r - 1)).inverse(), N, mode, Rational(r));
}

SeriesEstimate corollary_2_4_partial(CorollaryVariant variant, std::uint64_t N, SeriesMode mode)
{
    require_terms(N);
    const unsigned r = variant == CorollaryVariant::r3 ? 3 : variant == CorollaryVariant::r4 ? 4 : 5;

    // The displayed numerators over n(n+1) must equal (r-1)! times the
    // lemma-c terms. Checked on a prefix through independent routes.
    constexpr std::uint64_t checked_terms = 64;
    std::vector<Rational> hrow(4);
    auto h = [&hrow](unsigned a) -> const Rational& { return hrow.at(a - 1); };
    for (std::uint64_t n = 1; n <= std::min(N, checked_terms); ++n) {
        for (unsigned a = 1; a <= 4; ++a)
            hrow[a - 1] = harmonic_number(n + 1, a);
        const Rational numerator = r == 3 ? display::poly2(h) : r == 4 ? display::poly3(h) : display::poly4(h);
        const Rational displayed = numerator / Rational(n * (n + 1));
        const Rational lemma_term = Rational(factorial(r - 1)) * alt_power_sum(n, Rational(0), r) / Rational(n);
        if (displayed != lemma_term)
            throw std::logic_error("corollary term mismatch at n = " + std::to_string(n));
    }

    const BellExpansion& g = bell_expansion(r - 1);
    return polynomial_series_estimate("cor2.4-r" + std::to_string(r), g.polynomial(), r - 1, Rational(1), N,
                                      mode, Rational(factorial(r)));
}

SeriesEstimate eq32_partial(unsigned r, std::uint64_t N, SeriesMode mode)
{
    require_terms(N);
    const HPolynomial q = eq32_polynomial(r);

    // The l-sum built from derivative_F must reproduce (-1)^r (r+1)! times the
    // alternating sum at order r+2, and the symbolic numerator must agree.
    constexpr std::uint64_t checked_terms = 16;
    for (std::uint64_t n = 1; n <= std::min(N, checked_terms); ++n) {
        Rational by_derivatives;
        std::vector<Rational> hvals;
        for (unsigned l = 0; l <= r; ++l) {
            const Rational hn = harmonic_number(n + 1, l + 1);
            hvals.push_back(hn);
            Rational t = Rational(binomial(r, l)) * Rational(factorial(l)) * hn
                * derivative_F(n, Rational(0), r - l) / Rational(n);
            by_derivatives += l % 2 == 0 ? t : -t;
        }
        Rational by_sum = Rational(factorial(r + 1)) * alt_power_sum(n, Rational(0), r + 2) / Rational(n);
        if (r % 2 == 1)
            by_sum = -by_sum;
        Rational by_poly = q.evaluate(std::span<const Rational>(hvals)) / Rational(n * (n + 1));
        if (r % 2 == 1)
            by_poly = -by_poly;
        if (by_derivatives != by_sum || by_derivatives != by_poly)
            throw std::logic_error("eq32 term mismatch at n = " + std::to_string(n));
    }

    const Rational sign = r % 2 == 0 ? Rational(1) : Rational(-1);
    Rational limit = Rational(factorial(r + 2)) * sign;
    return polynomial_series_estimate(with_params("eq32", "r=" + std::to_string(r)), q, r + 1, sign, N, mode,
                                      std::move(limit));
}

Theorem26Series theorem_2_6_series(unsigned r, const Rational& x, std::uint64_t N)
{
    require_beta_domain(x);
    require_terms(N);

    // Inner quantity of the double sum, one value per k, from the closed-form
    // side of the finite identity.
    HarmonicVector hv{0, x, std::vector<Rational>(r + 1)};
    Rational F;
    std::vector<Rational> inner;
    inner.reserve(N);
    const Rational norm = Rational(factorial(r + 1)).inverse() * (r % 2 == 0 ? Rational(1) : Rational(-1));
    for (std::uint64_t k = 0; k < N; ++k) {
        const Rational shift = x + Rational(k + 1);
        const Rational base = shift.inverse();
        Rational power = base;
        for (unsigned a = 0; a <= r; ++a) {
            hv.values[a] += power;
            power *= base;
        }
        hv.n = k;
        F = k == 0 ? base : F * Rational(k) * base;

        Rational sum;
        for (unsigned l = 0; l <= r; ++l) {
            Rational t = Rational(binomial(r, l)) * Rational(factorial(l)) * hv.at(l + 1) * derivative_F(hv, F, r - l);
            sum += l % 2 == 0 ? t : -t;
        }
        inner.push_back(sum * norm);
    }

    const std::vector<Rational> outer = binomial_inverse(inner);
    Theorem26Series out;
    out.eq31_matches_hurwitz = true;
    Rational partial;
    const int s = static_cast<int>(r) + 2;
    for (std::uint64_t n = 0; n < N; ++n) {
        if (outer[n] != (x + Rational(n + 1)).pow(-s))
            out.eq31_matches_hurwitz = false;
        partial += outer[n];
    }

    out.eq31.target_id = with_params("eq31", "r=" + std::to_string(r) + ",x=" + x.str());
    out.eq31.N = N;
    out.eq31.partial = partial;
    out.eq31.exact = true;
    std::tie(out.eq31.tail_low, out.eq31.tail_high) = hurwitz_tail(x, s, N);
    out.eq31.claimed_limit = zeta_claim(x, s);

    out.eq32 = eq32_partial(r, N);
    return out;
}

Rational multi_integral_exact(std::uint64_t n, unsigned r)
{
    // (1 - x_1...x_r)^n = sum_k C(n,k)(-1)^k (x_1...x_r)^k, each monomial integrating to (k+1)^(-r).
    Rational sum;
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rational t = Rational(binomial(n, static_cast<std::int64_t>(k))) * Rational(k + 1).pow(-static_cast<int>(r));
        sum += k % 2 == 0 ? t : -t;
    }
    return sum;
}

} // namespace harmonic
