#ifndef XELL_GAUSSIAN_HPP
#define XELL_GAUSSIAN_HPP

#include "xell/rational.hpp"

#include <complex>
#include <string>

namespace xell {

/// Element of Q(i): a + b*i with exact rational parts. Coefficient field
/// for every polynomial in the library. The parameter sets close under
/// complex conjugation, which is what keeps all the physical quantities
/// (energies, norms, polynomial coefficients) real in the end.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(int n) : re_(n) {}
    GaussianRational(long n) : re_(n) {}
    GaussianRational(Rat re) : re_(std::move(re)) {}
    GaussianRational(Rat re, Rat im) : re_(std::move(re)), im_(std::move(im)) {}

    static GaussianRational i() { return {Rat(0), Rat(1)}; }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rat norm2() const { return re_ * re_ + im_ * im_; } // |w|^2, exact

    GaussianRational inv() const;
    GaussianRational pow_i(long e) const;

    GaussianRational operator-() const { return {-re_, -im_}; }
    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { a += b; return a; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { a -= b; return a; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { a *= b; return a; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { a /= b; return a; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::complex<double> to_complex() const { return {re_.to_double(), im_.to_double()}; }

    /// "p/q" for real values, "p/q+r/s*i" (sign-aware) otherwise.
    std::string str() const;

    static GaussianRational from_string(std::string_view s);

private:
    Rat re_, im_;
};

inline GaussianRational conj(const GaussianRational& w) { return w.conj(); }

} // namespace xell

#endif
