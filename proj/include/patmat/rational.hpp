#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace patmat {

// Exact rational scalar. Always kept in lowest terms with positive
// denominator (mpq canonical form); all arithmetic preserves that.
class Rational {
  public:
    Rational() : q_(0) {}
    Rational(long n) : q_(n) {}
    Rational(int n) : q_(n) {}
    Rational(long long n) : q_(static_cast<long>(n)) {
        static_assert(sizeof(long) == sizeof(long long), "needs 64-bit long");
    }
    Rational(const mpz_class& n) : q_(n) {}
    Rational(long n, long d) : q_(n, d) { canonicalize(); }
    Rational(const mpz_class& n, const mpz_class& d) : q_(n, d) { canonicalize(); }
    explicit Rational(const mpq_class& q) : q_(q) { canonicalize(); }

    // Parses "p/q" or "p" (optional sign, arbitrary precision).
    static Rational parse(const std::string& s);

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    double to_double() const { return q_.get_d(); }
    // Always "p/q" form, q >= 1.
    std::string str() const {
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    Rational abs() const { return Rational(::abs(q_), kCanonical); }

    Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
    Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
    Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) {
        return Rational(-a.q_, kCanonical);
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.q_ < b.q_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.q_ <= b.q_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.q_ > b.q_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.q_ >= b.q_; }

    // 2^k for k >= 0, or 1/2^|k| for k < 0.
    static Rational pow2(long k);
    static Rational pow(const Rational& base, unsigned long e);

  private:
    struct canonical_tag {};
    static constexpr canonical_tag kCanonical{};
    Rational(mpq_class q, canonical_tag) : q_(std::move(q)) {}

    void canonicalize() {
        if (q_.get_den() == 0) throw std::domain_error("Rational: zero denominator");
        q_.canonicalize();
    }

    mpq_class q_;
};

inline Rational abs(const Rational& r) { return r.abs(); }

inline Rational Rational::pow2(long k) {
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(k >= 0 ? k : -k));
    return k >= 0 ? Rational(p) : Rational(1, p);
}

inline Rational Rational::pow(const Rational& base, unsigned long e) {
    Rational r(1);
    for (unsigned long i = 0; i < e; ++i) r *= base;
    return r;
}

inline Rational Rational::parse(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(mpz_class(s));
        mpz_class n(s.substr(0, slash)), d(s.substr(slash + 1));
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("Rational: cannot parse \"" + s + "\"");
    }
}

}  // namespace patmat
