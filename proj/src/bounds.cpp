#include "addramsey/bounds.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace addramsey {

namespace mp = boost::multiprecision;

namespace {

    constexpr double kTop = 1000.0;         // level-1 floor, in log2 units
    const double kCap = std::ldexp(1.0, 1000); // 2^1000
    const double kLog2E = 1.4426950408889634;
    const double kLog10Of2 = 0.30102999566398120;

    Magnitude normalize(int level, double x)
    {
        if (!(x > 0.0))
            x = 0.0;
        while (x > kCap) {
            x = std::log2(x);
            ++level;
        }
        while (level > 0 && x <= kTop) {
            x = std::exp2(x);
            --level;
        }
        return {level, x};
    }

    std::string fmt(double v)
    {
        std::ostringstream out;
        out << std::setprecision(7) << v;
        return out.str();
    }

    // Short rendering for expression traces.
    std::string brief(const BoundValue& v)
    {
        if (v.is_exact()) {
            const auto digits = decimal_digits(v.exact());
            if (digits <= 24)
                return v.exact().str();
            return "<" + std::to_string(digits) + "-digit integer>";
        }
        if (v.expression().size() <= 160)
            return "(" + v.expression() + ")";
        return "(~" + v.magnitude().to_string() + ")";
    }

} // namespace

Magnitude Magnitude::from_double(double v) { return normalize(0, v); }

Magnitude Magnitude::from_log2(double l2)
{
    if (l2 <= kTop)
        return {0, std::exp2(l2)};
    return normalize(1, l2);
}

Magnitude Magnitude::from_int(const BigInt& v)
{
    if (v <= 0)
        return {0, 0.0};
    const auto bits = mp::msb(v);
    if (bits < 990)
        return {0, v.convert_to<double>()};
    // top 53 bits give the mantissa
    const unsigned shift = static_cast<unsigned>(bits) - 52;
    const double top = static_cast<BigInt>(v >> shift).convert_to<double>();
    return from_log2(std::log2(top) + static_cast<double>(shift));
}

Magnitude Magnitude::exp2() const
{
    if (level == 0)
        return from_log2(x);
    return normalize(level + 1, x);
}

Magnitude Magnitude::log2() const
{
    if (level == 0)
        return {0, x > 1.0 ? std::log2(x) : 0.0};
    return normalize(level - 1, x);
}

double Magnitude::log2_value() const
{
    if (level == 0)
        return x > 0.0 ? std::log2(x) : -std::numeric_limits<double>::infinity();
    if (level == 1)
        return x;
    return std::numeric_limits<double>::infinity();
}

std::string Magnitude::to_string() const
{
    switch (level) {
    case 0: return fmt(x);
    case 1: return "2^" + fmt(x);
    case 2: return "2^2^" + fmt(x);
    default: return "2^^" + std::to_string(level) + "(" + fmt(x) + ")";
    }
}

Magnitude add(const Magnitude& a, const Magnitude& b)
{
    const Magnitude& big = a < b ? b : a;
    const Magnitude& small = a < b ? a : b;
    if (big.level == 0)
        return normalize(0, big.x + small.x);
    if (big.level >= 2)
        return big;
    const double gap = big.x - small.log2_value();
    if (gap > 64.0)
        return big;
    return Magnitude::from_log2(big.x + std::log2(1.0 + std::exp2(-gap)));
}

Magnitude mul(const Magnitude& a, const Magnitude& b)
{
    if (a.level == 0 && b.level == 0 && a.x * b.x <= kCap)
        return {0, a.x * b.x};
    if (a.x == 0.0 || b.x == 0.0)
        return {0, 0.0};
    return add(a.log2(), b.log2()).exp2();
}

Magnitude pow(const Magnitude& base, const Magnitude& exponent)
{
    if (base.level == 0 && exponent.level == 0) {
        const double l2 = exponent.x * (base.x > 0 ? std::log2(base.x) : 0.0);
        return Magnitude::from_log2(l2);
    }
    return mul(exponent, base.log2()).exp2();
}

Magnitude log2_factorial(const Magnitude& n)
{
    if (n.level == 0 && n.x < 1e7)
        return Magnitude::from_double(std::lgamma(n.x + 1.0) * kLog2E);
    const Magnitude l = n.log2();
    if (l.level == 0)
        return mul(n, Magnitude::from_double(l.x - kLog2E));
    return mul(n, l);
}

std::size_t decimal_digits(const BigInt& v)
{
    if (v == 0)
        return 1;
    const BigInt a = v < 0 ? BigInt(-v) : v;
    return static_cast<std::size_t>(static_cast<double>(mp::msb(a)) * kLog10Of2) + 1;
}

BoundValue BoundValue::symbolic(Magnitude m, std::string expression)
{
    BoundValue v;
    v.is_exact_ = false;
    v.magnitude_ = m;
    v.expression_ = std::move(expression);
    return v;
}

const BigInt& BoundValue::exact() const
{
    if (!is_exact_)
        throw std::logic_error("bound value is symbolic: " + expression_);
    return exact_;
}

Magnitude BoundValue::magnitude() const { return is_exact_ ? Magnitude::from_int(exact_) : magnitude_; }

std::string BoundValue::to_string() const
{
    if (is_exact_)
        return exact_.str();
    return "~" + magnitude_.to_string() + " [" + expression_ + "]";
}

double BoundValue::log2() const { return magnitude().log2_value(); }

BoundValue BoundValue::labeled(std::string expression) const
{
    if (is_exact_)
        return *this;
    return symbolic(magnitude_, std::move(expression));
}

bool operator==(const BoundValue& a, const BoundValue& b)
{
    if (a.is_exact_ != b.is_exact_)
        return false;
    return a.is_exact_ ? a.exact_ == b.exact_ : a.magnitude_ == b.magnitude_;
}

bool operator<=(const BoundValue& a, const BoundValue& b)
{
    if (a.is_exact_ && b.is_exact_)
        return a.exact_ <= b.exact_;
    return a.magnitude() <= b.magnitude();
}

BoundValue add(const BoundValue& a, const BoundValue& b, std::size_t digit_threshold)
{
    if (a.is_exact() && b.is_exact()) {
        BigInt s = a.exact() + b.exact();
        if (decimal_digits(s) <= digit_threshold)
            return s;
    }
    return BoundValue::symbolic(add(a.magnitude(), b.magnitude()), brief(a) + " + " + brief(b));
}

BoundValue mul(const BoundValue& a, const BoundValue& b, std::size_t digit_threshold)
{
    if (a.is_exact() && b.is_exact() && decimal_digits(a.exact()) + decimal_digits(b.exact()) <= digit_threshold + 1) {
        BigInt p = a.exact() * b.exact();
        if (decimal_digits(p) <= digit_threshold)
            return p;
    }
    return BoundValue::symbolic(mul(a.magnitude(), b.magnitude()), brief(a) + " * " + brief(b));
}

BoundValue pow(const BoundValue& base, const BoundValue& exponent, std::size_t digit_threshold)
{
    if (base.is_exact() && exponent.is_exact()) {
        const BigInt& b = base.exact();
        const BigInt& e = exponent.exact();
        if (e < 0)
            throw std::invalid_argument("pow: negative exponent");
        if (e == 0 || b == 1)
            return BigInt(1);
        if (b == 0)
            return BigInt(0);
        const double est = e.convert_to<double>() * static_cast<double>(mp::msb(b < 0 ? BigInt(-b) : b)) * kLog10Of2;
        if (est <= static_cast<double>(digit_threshold) && e <= std::numeric_limits<unsigned>::max()) {
            BigInt p = mp::pow(b, e.convert_to<unsigned>());
            if (decimal_digits(p) <= digit_threshold)
                return p;
        }
    }
    return BoundValue::symbolic(pow(base.magnitude(), exponent.magnitude()), brief(base) + "^" + brief(exponent));
}

namespace {

    // log2 of e^(1/(k-1)) (k-1)^(c-1) c!, the closed-form size of f(k, c).
    Magnitude f_estimate(const BoundValue& k, const BoundValue& c)
    {
        const Magnitude km = k.magnitude();
        const Magnitude cm = c.magnitude();
        const Magnitude q = km.level == 0 ? Magnitude::from_double(km.x - 1.0) : km;
        // (c - 1) log2(k - 1) + log2 c! + log2(e)/(k - 1)
        Magnitude l2 = log2_factorial(cm);
        if (q.level > 0 || q.x > 1.0) {
            const Magnitude cm1 = cm.level == 0 ? Magnitude::from_double(cm.x - 1.0) : cm;
            l2 = add(l2, mul(cm1, q.log2()));
        }
        if (q.level == 0 && q.x >= 1.0)
            l2 = add(l2, Magnitude::from_double(kLog2E / q.x));
        return l2.exp2();
    }

} // namespace

BoundValue f_recurrence_bound(const BoundValue& k, const BoundValue& c, const BoundOptions& options)
{
    if (k.is_exact() && k.exact() < 1)
        throw std::invalid_argument("f_recurrence_bound: need k >= 1");
    if (c.is_exact() && c.exact() < 1)
        throw std::invalid_argument("f_recurrence_bound: need c >= 1");
    if (k.is_exact() && k.exact() == 1)
        return c;
    const Magnitude est = f_estimate(k, c);
    const double digits = est.log2_value() * kLog10Of2;
    if (k.is_exact() && c.is_exact() && digits <= static_cast<double>(options.digit_threshold) + 2.0
        && c.exact() <= 1'000'000) {
        const BigInt q = k.exact() - 1;
        const auto steps = c.exact().convert_to<long>();
        BigInt f = 1;
        for (long i = 1; i < steps; ++i)
            f = BigInt(i + 1) * (1 + q * f);
        if (decimal_digits(f) <= options.digit_threshold)
            return f;
    }
    return BoundValue::symbolic(est, "f(" + brief(k) + ", " + brief(c) + ") ~ e^(1/(k-1)) (k-1)^(c-1) c!");
}

BoundValue f_recurrence_bound(int k, int c, const BoundOptions& options)
{
    if (k < 1 || c < 1)
        throw std::invalid_argument("f_recurrence_bound: need k, c >= 1");
    return f_recurrence_bound(BoundValue(k), BoundValue(c), options);
}

ClosedForm f_closed_form(int k, int c, const BoundOptions& options)
{
    if (k < 2 || c < 1)
        throw std::invalid_argument("f_closed_form: need k >= 2 and c >= 1");
    ClosedForm out;
    const Magnitude est = f_estimate(BoundValue(k), BoundValue(c));
    if (est.log2_value() * kLog10Of2 > static_cast<double>(options.digit_threshold)) {
        const std::string args = std::to_string(k) + ", " + std::to_string(c);
        out.closed_form_floor = BoundValue::symbolic(est, "floor(e^(1/(k-1)) (k-1)^(c-1) c!) at (" + args + ")");
        out.exact_sum = BoundValue::symbolic(est, "(k-1)^(c-1) c! sum_{j<c} 1/((k-1)^j j!) at (" + args + ")");
        return out;
    }

    const BigInt q = k - 1;
    BigInt cfact = 1;
    for (int i = 2; i <= c; ++i)
        cfact *= i;
    const BigInt m = mp::pow(q, static_cast<unsigned>(c - 1)) * cfact;

    // exact_sum = sum_{j<c} q^(c-1-j) c!/j!
    BigInt sum = 0, jfact = 1;
    for (int j = 0; j < c; ++j) {
        if (j > 0)
            jfact *= j;
        sum += mp::pow(q, static_cast<unsigned>(c - 1 - j)) * (cfact / jfact);
    }
    out.exact_sum = sum;

    // M * sum_{j<=N} 1/(q^j j!) and the tail bound term_{N+1} / (1 - 1/(q (N+2)))
    using Rational = mp::cpp_rational;
    for (int terms = 8;; terms *= 2) {
        Rational partial = 0, term = 1;
        for (int j = 0; j <= terms; ++j) {
            if (j > 0)
                term /= Rational(q * j);
            partial += term;
        }
        const Rational next = term / Rational(q * (terms + 1));
        const Rational tail = next / (1 - Rational(1) / Rational(q * (terms + 2)));
        const Rational lo = partial * m;
        const Rational hi = (partial + tail) * m;
        const BigInt flo = mp::numerator(lo) / mp::denominator(lo);
        const BigInt fhi = mp::numerator(hi) / mp::denominator(hi);
        if (flo == fhi) {
            out.closed_form_floor = flo;
            out.series_terms = terms + 1;
            return out;
        }
        if (terms > (1 << 20))
            throw std::runtime_error("f_closed_form: floor did not settle");
    }
}

int rounded_tree_exponent(int n)
{
    if (n < 1)
        throw std::invalid_argument("E_bound: need n >= 1");
    int l = 1;
    while ((std::int64_t{1} << l) - 1 < n)
        ++l;
    return l;
}

namespace {

    BoundValue e_rec(int k, const BoundValue& c, int l, const BoundOptions& opt)
    {
        if (l == 1)
            return f_recurrence_bound(BoundValue(k), c, opt);
        const int inner = (1 << (l - 1)) - 1;
        const BoundValue y = pow(BoundValue(k), BoundValue(std::int64_t{1} << (l - 1)), opt.digit_threshold);
        const BoundValue last = f_recurrence_bound(y, c, opt);
        const std::string head = "E(" + std::to_string(k) + ", " + brief(c) + ", " + std::to_string((1 << l) - 1) + ")";
        const std::string series = "sum_{i=0}^{f(" + brief(y) + ", " + brief(c) + ")=" + brief(last) + "} E("
                                   + std::to_string(k) + ", " + brief(c) + "^(" + brief(y) + "^i), " + std::to_string(inner) + ")";
        if (last.is_exact() && last.exact() < opt.max_terms) {
            const auto top = last.exact().convert_to<long>();
            BoundValue total(0);
            for (long i = 0; i <= top; ++i) {
                const BoundValue arg = pow(c, pow(y, BoundValue(std::int64_t{i}), opt.digit_threshold), opt.digit_threshold);
                total = add(total, e_rec(k, arg, l - 1, opt), opt.digit_threshold);
            }
            return total.labeled(head + " = " + series);
        }
        const BoundValue arg = pow(c, pow(y, last, opt.digit_threshold), opt.digit_threshold);
        const BoundValue count = add(last, BoundValue(1), opt.digit_threshold);
        const BoundValue est = mul(count, e_rec(k, arg, l - 1, opt), opt.digit_threshold);
        return BoundValue::symbolic(est.magnitude(), head + " <= (terms x last term) of " + series);
    }

} // namespace

BoundValue E_bound(int k, const BoundValue& c, int n, const BoundOptions& options)
{
    if (k < 1)
        throw std::invalid_argument("E_bound: need k >= 1");
    if (c.is_exact() && c.exact() < 1)
        throw std::invalid_argument("E_bound: need c >= 1");
    const int l = rounded_tree_exponent(n);
    if (l > 30)
        throw std::invalid_argument("E_bound: n too large");
    return e_rec(k, c, l, options);
}

BoundValue E_bound(int k, int c, int n, const BoundOptions& options)
{
    return E_bound(k, BoundValue(c), n, options);
}

} // namespace addramsey
