#include "freelie/rational.hpp"

#include <cctype>
#include <ostream>

#include "freelie/errors.hpp"

namespace freelie {

Rational::Rational(long num, long den) {
    if (den == 0) throw Error("Rational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

Rational::Rational(const mpq_class& q) : q_(q) {
    q_.canonicalize();
}

Rational Rational::from_string(std::string_view s) {
    auto is_int = [](std::string_view t) {
        if (!t.empty() && t.front() == '-') t.remove_prefix(1);
        if (t.empty()) return false;
        for (char c : t)
            if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        return true;
    };
    std::string_view num = s, den = "1";
    if (auto pos = s.find('/'); pos != std::string_view::npos) {
        num = s.substr(0, pos);
        den = s.substr(pos + 1);
    }
    if (!is_int(num) || !is_int(den))
        throw Error("Rational: malformed literal '" + std::string(s) + "'");
    mpz_class n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error("Rational: zero denominator in '" + std::string(s) + "'");
    Rational r;
    r.q_ = mpq_class(n, d);
    r.q_.canonicalize();
    return r;
}

Rational Rational::factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    Rational r;
    r.q_ = mpq_class(f);
    return r;
}

Rational Rational::inv_factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    Rational r;
    r.q_ = mpq_class(1, f);
    r.q_.canonicalize();
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw Error("Rational: division by zero");
    q_ /= o.q_;
    return *this;
}

std::string Rational::str() const {
    if (q_.get_den() == 1) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

bool in_z_inverted(const Rational& r, unsigned long m) {
    if (m == 0) throw Error("in_z_inverted: m must be positive");
    mpz_class d = r.denominator();
    if (d == 1) return true;
    if (m == 1) return false;
    // Strip every prime factor of m out of d; what remains must be 1.
    mpz_class mm(static_cast<unsigned long>(m));
    while (d != 1) {
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), d.get_mpz_t(), mm.get_mpz_t());
        if (g == 1) return false;
        while (mpz_divisible_p(d.get_mpz_t(), g.get_mpz_t()))
            mpz_divexact(d.get_mpz_t(), d.get_mpz_t(), g.get_mpz_t());
    }
    return true;
}

}  // namespace freelie
