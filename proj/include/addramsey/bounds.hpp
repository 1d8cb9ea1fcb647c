#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <cstdint>
#include <string>

namespace addramsey {

using BigInt = boost::multiprecision::cpp_int;

/// A positive real held as an iterated power of two: the value is
/// exp2 applied `level` times to x. Normalized so that level 0 means
/// x <= 2^1000 and level >= 1 means 1000 < x <= 2^1000.
struct Magnitude {
    int level = 0;
    double x = 1.0;

    static Magnitude from_double(double v);
    static Magnitude from_int(const BigInt& v);
    /// The value 2^l2.
    static Magnitude from_log2(double l2);

    Magnitude exp2() const;
    /// log2 of the value; clamps values below 1 to 0.
    Magnitude log2() const;

    /// log2 of the value as a double; +inf when it does not fit.
    double log2_value() const;
    /// log10 of the number of decimal digits, roughly, for display.
    std::string to_string() const;

    friend bool operator==(const Magnitude&, const Magnitude&) = default;
    friend bool operator<(const Magnitude& a, const Magnitude& b)
    {
        return a.level != b.level ? a.level < b.level : a.x < b.x;
    }
    friend bool operator<=(const Magnitude& a, const Magnitude& b) { return !(b < a); }
};

Magnitude add(const Magnitude& a, const Magnitude& b);
Magnitude mul(const Magnitude& a, const Magnitude& b);
Magnitude pow(const Magnitude& base, const Magnitude& exponent);
/// log2(n!) via Stirling, as a magnitude.
Magnitude log2_factorial(const Magnitude& n);

inline constexpr std::size_t kDefaultDigitThreshold = 10'000;

/// Either an exact integer, or a symbolic magnitude with the expression that
/// produced it. Arithmetic stays exact while results have at most
/// `digit_threshold` decimal digits.
class BoundValue {
public:
    BoundValue() = default;
    BoundValue(BigInt exact) : exact_(std::move(exact)), is_exact_(true) {}
    BoundValue(std::int64_t exact) : exact_(exact), is_exact_(true) {}
    BoundValue(int exact) : exact_(exact), is_exact_(true) {}

    static BoundValue symbolic(Magnitude m, std::string expression);

    bool is_exact() const noexcept { return is_exact_; }
    const BigInt& exact() const;
    Magnitude magnitude() const;
    /// The derivation of a symbolic value; the decimal value when exact.
    const std::string& expression() const noexcept { return expression_; }
    std::string to_string() const;
    /// log2 of the value (exact values converted), +inf if out of range.
    double log2() const;

    /// Labels a symbolic result; exact values keep their decimal form.
    BoundValue labeled(std::string expression) const;

    friend bool operator==(const BoundValue& a, const BoundValue& b);
    /// Exact when both are exact, otherwise compares magnitudes.
    friend bool operator<=(const BoundValue& a, const BoundValue& b);

private:
    BigInt exact_ = 0;
    bool is_exact_ = true;
    Magnitude magnitude_{};
    std::string expression_;
};

std::size_t decimal_digits(const BigInt& v);

BoundValue add(const BoundValue& a, const BoundValue& b, std::size_t digit_threshold = kDefaultDigitThreshold);
BoundValue mul(const BoundValue& a, const BoundValue& b, std::size_t digit_threshold = kDefaultDigitThreshold);
BoundValue pow(const BoundValue& base, const BoundValue& exponent, std::size_t digit_threshold = kDefaultDigitThreshold);

struct BoundOptions {
    std::size_t digit_threshold = kDefaultDigitThreshold;
    /// Series with more terms are estimated as (term count) x (last term).
    std::size_t max_terms = 4096;
};

/// f(k, 1) = 1, f(1, c) = c, f(k, c+1) = (c+1)(1 + (k-1) f(k, c)).
BoundValue f_recurrence_bound(const BoundValue& k, const BoundValue& c, const BoundOptions& options = {});
BoundValue f_recurrence_bound(int k, int c, const BoundOptions& options = {});

struct ClosedForm {
    BoundValue closed_form_floor; // floor(e^(1/(k-1)) (k-1)^(c-1) c!)
    BoundValue exact_sum;   // (k-1)^(c-1) c! sum_{j<c} 1/((k-1)^j j!)
    int series_terms = 0;   // Taylor terms needed to pin the floor
};

/// k >= 2, c >= 1. The floor is certified by enclosing e^(1/(k-1)) between a
/// Taylor partial sum and that sum plus a geometric tail bound, adding terms
/// until both ends have the same floor.
ClosedForm f_closed_form(int k, int c, const BoundOptions& options = {});

/// E(k, c, 1) = f(k, c) and, with Y = k^(2^l),
/// E(k, c, 2^(l+1) - 1) = sum_{i=0}^{f(Y, c)} E(k, c^(Y^i), 2^l - 1).
/// Other n are rounded up to the next 2^l - 1.
BoundValue E_bound(int k, const BoundValue& c, int n, const BoundOptions& options = {});
BoundValue E_bound(int k, int c, int n, const BoundOptions& options = {});

/// Smallest l >= 1 with 2^l - 1 >= n.
int rounded_tree_exponent(int n);

} // namespace addramsey
