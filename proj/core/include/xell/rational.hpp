#ifndef XELL_RATIONAL_HPP
#define XELL_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace xell {

/// Exact arbitrary-precision rational. Thin wrapper over GMP's mpq_class
/// that pins the canonical form (denominator > 0, gcd(num, den) = 1) and
/// the "p/q" string format used throughout the JSON output.
///
/// There is no floating fallback anywhere in this type: every operation is
/// exact, so identity checks downstream can distinguish a true zero from a
/// tiny residual.
class Rat {
public:
    Rat() : v_(0) {}
    Rat(int n) : v_(n) {}
    Rat(long n) : v_(static_cast<signed long>(n)) {}
    Rat(long num, long den);
    explicit Rat(const mpz_class& z) : v_(z) {}
    explicit Rat(mpq_class q);

    /// Parses "p", "p/q" or "-p/q". Rejects decimals and anything else.
    static Rat from_string(std::string_view s);

    /// Exact conversion: every finite double is a dyadic rational.
    static Rat from_double(double d);

    /// Exact square root, if the value is a perfect square of a rational.
    static std::optional<Rat> sqrt_exact(const Rat& r);

    std::string str() const;
    double to_double() const { return v_.get_d(); }

    const mpz_class num() const { return v_.get_num(); }
    const mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rat abs() const;
    Rat inv() const;
    /// Integer power, negative exponents allowed for nonzero values.
    Rat pow_i(long e) const;

    Rat operator-() const;
    Rat& operator+=(const Rat& o) { v_ += o.v_; return *this; }
    Rat& operator-=(const Rat& o) { v_ -= o.v_; return *this; }
    Rat& operator*=(const Rat& o) { v_ *= o.v_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { a += b; return a; }
    friend Rat operator-(Rat a, const Rat& b) { a -= b; return a; }
    friend Rat operator*(Rat a, const Rat& b) { a *= b; return a; }
    friend Rat operator/(Rat a, const Rat& b) { a /= b; return a; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rat& a, const Rat& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rat& a, const Rat& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rat& a, const Rat& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rat& a, const Rat& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rat& a, const Rat& b) { return a.v_ >= b.v_; }

private:
    mpq_class v_; // kept canonical by mpq semantics
};

inline Rat abs(const Rat& r) { return r.abs(); }

} // namespace xell

#endif
