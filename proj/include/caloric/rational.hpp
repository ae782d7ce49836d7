#ifndef CALORIC_RATIONAL_HPP
#define CALORIC_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace caloric {

/// Arbitrary-precision rational number, always in canonical form:
/// denominator > 0 and gcd(|numerator|, denominator) = 1.
///
/// All arithmetic in this library is exact; there is no floating-point
/// anywhere. Serialization uses the explicit "num/den" form so that every
/// emitted value parses back to an equal Rational.
class Rational {
public:
    Rational() : q_(0) {}
    Rational(long v) : q_(v) {}  // NOLINT: implicit by design, scalars are pervasive
    Rational(int v) : q_(static_cast<long>(v)) {}

    Rational(long num, long den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }

    Rational(mpz_class num, mpz_class den) {
        if (den == 0) throw std::invalid_argument("Rational: zero denominator");
        q_ = mpq_class(std::move(num), std::move(den));
        q_.canonicalize();
    }

    explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

    /// Parses "num/den" or a bare integer, base 10. Rejects anything else
    /// (decimal points, exponents, whitespace, empty fields).
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        if (slash == std::string::npos) {
            return Rational(parse_integer(s), mpz_class(1));
        }
        mpz_class num = parse_integer(s.substr(0, slash));
        mpz_class den = parse_integer(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("Rational: zero denominator in '" + s + "'");
        return Rational(std::move(num), std::move(den));
    }

    /// Always emits the explicit form "num/den", e.g. "3/1", "-5/2".
    std::string to_string() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    mpz_class numerator() const { return q_.get_num(); }
    mpz_class denominator() const { return q_.get_den(); }

    bool is_zero() const { return q_ == 0; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    Rational abs() const { return Rational(mpq_class(::abs(q_))); }

    Rational pow(unsigned long e) const {
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), q_.get_num().get_mpz_t(), e);
        mpz_pow_ui(den.get_mpz_t(), q_.get_den().get_mpz_t(), e);
        Rational out;
        out.q_ = mpq_class(num, den);  // already canonical: gcd(n,d)=1 implies gcd(n^e,d^e)=1
        return out;
    }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    /// Bit length of the numerator plus denominator; used for pivot selection.
    std::size_t bit_size() const {
        return mpz_sizeinbase(q_.get_num().get_mpz_t(), 2) +
               mpz_sizeinbase(q_.get_den().get_mpz_t(), 2);
    }

private:
    static mpz_class parse_integer(const std::string& s) {
        std::size_t i = 0;
        if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
        if (i == s.size()) throw std::invalid_argument("Rational: empty integer in '" + s + "'");
        for (; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9')
                throw std::invalid_argument("Rational: invalid character in '" + s + "'");
        }
        return mpz_class(s, 10);
    }

    mpq_class q_;
};

}  // namespace caloric

#endif
