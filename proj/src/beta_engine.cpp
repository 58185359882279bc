#include "harmonic/beta_engine.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace harmonic {

namespace {

void trim(Monomial& m)
{
    while (!m.empty() && m.back() == 0)
        m.pop_back();
}

template <typename T>
T power(const T& base, unsigned e)
{
    T out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= base;
    return out;
}

template <typename T>
T evaluate_terms(const HPolynomial::Terms& terms, std::span<const T> values)
{
    T total = 0;
    for (const auto& [m, c] : terms) {
        if (m.size() > values.size())
            throw std::out_of_range("not enough generator values to evaluate polynomial");
        T term = 1;
        for (std::size_t a = 0; a < m.size(); ++a)
            if (m[a] != 0)
                term *= power(values[a], m[a]);
        if constexpr (std::is_same_v<T, double>)
            total += c.get_d() * term;
        else
            total += T(c) * term;
    }
    return total;
}

} // namespace

unsigned monomial_weight(const Monomial& m)
{
    unsigned w = 0;
    for (std::size_t a = 0; a < m.size(); ++a)
        w += static_cast<unsigned>(a + 1) * m[a];
    return w;
}

unsigned monomial_degree(const Monomial& m)
{
    unsigned d = 0;
    for (unsigned e : m)
        d += e;
    return d;
}

bool GradedLexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const unsigned da = monomial_degree(a);
    const unsigned db = monomial_degree(b);
    if (da != db)
        return da < db;
    const std::size_t len = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < len; ++i) {
        const unsigned ea = i < a.size() ? a[i] : 0;
        const unsigned eb = i < b.size() ? b[i] : 0;
        if (ea != eb)
            return ea > eb;
    }
    return false;
}

HPolynomial HPolynomial::constant(const BigInt& c)
{
    HPolynomial p;
    p.add_term({}, c);
    return p;
}

HPolynomial HPolynomial::generator(unsigned index)
{
    if (index == 0)
        throw std::invalid_argument("generator indices start at 1");
    Monomial m(index, 0);
    m[index - 1] = 1;
    HPolynomial p;
    p.add_term(std::move(m), 1);
    return p;
}

unsigned HPolynomial::max_generator() const
{
    std::size_t out = 0;
    for (const auto& [m, c] : terms_)
        out = std::max(out, m.size());
    return static_cast<unsigned>(out);
}

BigInt HPolynomial::coefficient(const Monomial& m) const
{
    Monomial key = m;
    trim(key);
    auto it = terms_.find(key);
    return it == terms_.end() ? BigInt(0) : it->second;
}

BigInt HPolynomial::coefficient_sum() const
{
    BigInt sum = 0;
    for (const auto& [m, c] : terms_)
        sum += c;
    return sum;
}

bool HPolynomial::is_homogeneous(unsigned weight) const
{
    return std::all_of(terms_.begin(), terms_.end(),
                       [weight](const auto& t) { return monomial_weight(t.first) == weight; });
}

void HPolynomial::add_term(Monomial m, const BigInt& c)
{
    if (c == 0)
        return;
    trim(m);
    auto [it, inserted] = terms_.try_emplace(std::move(m), c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

HPolynomial& HPolynomial::operator+=(const HPolynomial& rhs)
{
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

HPolynomial& HPolynomial::operator*=(const BigInt& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

HPolynomial operator*(const HPolynomial& a, const HPolynomial& b)
{
    HPolynomial out;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m(std::max(ma.size(), mb.size()), 0);
            for (std::size_t i = 0; i < ma.size(); ++i)
                m[i] += ma[i];
            for (std::size_t i = 0; i < mb.size(); ++i)
                m[i] += mb[i];
            out.add_term(std::move(m), BigInt(ca * cb));
        }
    }
    return out;
}

HPolynomial HPolynomial::partial(unsigned index) const
{
    if (index == 0)
        throw std::invalid_argument("generator indices start at 1");
    HPolynomial out;
    for (const auto& [m, c] : terms_) {
        if (m.size() < index || m[index - 1] == 0)
            continue;
        Monomial d = m;
        const unsigned e = d[index - 1]--;
        out.add_term(std::move(d), BigInt(c * e));
    }
    return out;
}

Rational HPolynomial::evaluate(std::span<const Rational> values) const
{
    return evaluate_terms<Rational>(terms_, values);
}

BigInt HPolynomial::evaluate(std::span<const BigInt> values) const
{
    return evaluate_terms<BigInt>(terms_, values);
}

double HPolynomial::evaluate(std::span<const double> values) const
{
    return evaluate_terms<double>(terms_, values);
}

std::string HPolynomial::str() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        BigInt mag = abs(c);
        if (first) {
            if (c < 0)
                out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        first = false;

        std::string factors;
        for (std::size_t a = 0; a < m.size(); ++a) {
            if (m[a] == 0)
                continue;
            if (!factors.empty())
                factors += "*";
            factors += "h" + std::to_string(a + 1);
            if (m[a] > 1)
                factors += "^" + std::to_string(m[a]);
        }
        if (factors.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += factors;
        else
            out += mag.get_str() + "*" + factors;
    }
    return out;
}

BellExpansion BellExpansion::next() const
{
    BellExpansion out;
    out.order_ = order_ + 1;
    out.poly_ = HPolynomial::generator(1) * poly_;
    for (unsigned a = 1; a <= order_; ++a) {
        HPolynomial d = poly_.partial(a);
        if (d.empty())
            continue;
        HPolynomial shifted = HPolynomial::generator(a + 1) * d;
        shifted *= BigInt(a);
        out.poly_ += shifted;
    }
    return out;
}

Rational BellExpansion::evaluate(const HarmonicVector& hv) const
{
    if (hv.order() < order_)
        throw std::invalid_argument("harmonic vector order below expansion order");
    return poly_.evaluate(std::span<const Rational>(hv.values));
}

const BellExpansion& bell_expansion(unsigned r)
{
    static std::shared_mutex mutex;
    static std::map<unsigned, std::unique_ptr<const BellExpansion>> cache;

    BellExpansion seed;
    {
        std::shared_lock lock(mutex);
        auto it = cache.upper_bound(r);
        if (it != cache.begin()) {
            --it;
            if (it->first == r)
                return *it->second;
            seed = *it->second;
        }
    }

    std::vector<BellExpansion> built;
    while (seed.order() < r) {
        seed = seed.next();
        built.push_back(seed);
    }

    std::unique_lock lock(mutex);
    cache.try_emplace(0, std::make_unique<const BellExpansion>());
    for (auto& g : built) {
        const unsigned order = g.order();
        cache.try_emplace(order, std::make_unique<const BellExpansion>(std::move(g)));
    }
    return *cache.at(r);
}

Rational beta_F(std::uint64_t n, const Rational& x)
{
    require_beta_domain(x);
    Rational denom = 1;
    for (std::uint64_t k = 0; k <= n; ++k)
        denom *= x + Rational(k + 1);
    return Rational(factorial(static_cast<unsigned>(n))) / denom;
}

Rational beta_F_sum(std::uint64_t n, const Rational& x)
{
    return alt_power_sum(n, x, 1);
}

Rational alt_power_sum(std::uint64_t n, const Rational& x, unsigned r)
{
    if (r == 0)
        throw std::invalid_argument("alt_power_sum requires r >= 1");
    require_beta_domain(x);
    Rational sum;
    BigInt c = 1; // C(n, k), updated in place
    for (std::uint64_t k = 0; k <= n; ++k) {
        Rational term = Rational(c) * (x + Rational(k + 1)).pow(-static_cast<int>(r));
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
        c *= static_cast<unsigned long>(n - k);
        c /= static_cast<unsigned long>(k + 1);
    }
    return sum;
}

Rational derivative_F(std::uint64_t n, const Rational& x, unsigned r)
{
    require_beta_domain(x);
    const Rational F = beta_F(n, x);
    if (r == 0)
        return F;
    return derivative_F(harmonic_vector(n, x, r), F, r);
}

Rational derivative_F(const HarmonicVector& hv, const Rational& F, unsigned r)
{
    if (r == 0)
        return F;
    Rational g = bell_expansion(r).evaluate(hv) * F;
    return r % 2 == 0 ? g : -g;
}

} // namespace harmonic
