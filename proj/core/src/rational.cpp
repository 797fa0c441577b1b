#include "xell/rational.hpp"

#include "xell/errors.hpp"

#include <cmath>

namespace xell {

Rat::Rat(long num, long den) {
    if (den == 0) throw param_error("Rat: zero denominator");
    v_ = mpq_class(static_cast<signed long>(num), static_cast<signed long>(den));
    v_.canonicalize();
}

Rat::Rat(mpq_class q) : v_(std::move(q)) { v_.canonicalize(); }

Rat Rat::from_string(std::string_view s) {
    if (s.empty()) throw param_error("Rat: empty string");
    const auto bad = s.find_first_not_of("0123456789+-/ ");
    if (bad != std::string_view::npos)
        throw param_error("Rat: invalid character in \"" + std::string(s) + "\" (decimals are not accepted)");
    try {
        mpq_class q(std::string(s), 10);
        if (q.get_den() == 0) throw param_error("Rat: zero denominator in \"" + std::string(s) + "\"");
        q.canonicalize();
        return Rat(std::move(q));
    } catch (const std::invalid_argument&) {
        throw param_error("Rat: cannot parse \"" + std::string(s) + "\"");
    }
}

Rat Rat::from_double(double d) {
    if (!std::isfinite(d)) throw param_error("Rat: non-finite double");
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), d);
    return Rat(std::move(q));
}

std::optional<Rat> Rat::sqrt_exact(const Rat& r) {
    if (r.sign() < 0) return std::nullopt;
    const mpz_class n = r.num(), d = r.den();
    if (mpz_perfect_square_p(n.get_mpz_t()) == 0) return std::nullopt;
    if (mpz_perfect_square_p(d.get_mpz_t()) == 0) return std::nullopt;
    mpz_class sn, sd;
    mpz_sqrt(sn.get_mpz_t(), n.get_mpz_t());
    mpz_sqrt(sd.get_mpz_t(), d.get_mpz_t());
    return Rat(mpq_class(sn, sd));
}

std::string Rat::str() const {
    if (v_.get_den() == 1) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rat Rat::abs() const {
    Rat r = *this;
    if (r.sign() < 0) r = -r;
    return r;
}

Rat Rat::inv() const {
    if (is_zero()) throw param_error("Rat: division by zero");
    mpq_class r;
    mpq_inv(r.get_mpq_t(), v_.get_mpq_t());
    return Rat(std::move(r));
}

Rat Rat::pow_i(long e) const {
    if (e == 0) return Rat(1);
    const bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), v_.get_num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), v_.get_den().get_mpz_t(), k);
    Rat r{mpq_class(n, d)};
    return neg ? r.inv() : r;
}

Rat Rat::operator-() const {
    Rat r;
    r.v_ = -v_;
    return r;
}

Rat& Rat::operator/=(const Rat& o) {
    if (o.is_zero()) throw param_error("Rat: division by zero");
    v_ /= o.v_;
    return *this;
}

} // namespace xell
