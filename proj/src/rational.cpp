#include "noncorr/rational.hpp"

#include <limits>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace noncorr {

namespace {

constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

// Inline values never hold INT64_MIN so that negation is always safe.
bool fits(std::int64_t v) { return v != std::numeric_limits<std::int64_t>::min(); }

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
    return static_cast<std::int64_t>(
        std::gcd(static_cast<std::uint64_t>(a < 0 ? -a : a), static_cast<std::uint64_t>(b < 0 ? -b : b)));
}

bool mpz_fits_i64(const mpz_class& z) {
    return mpz_fits_slong_p(z.get_mpz_t()) && z != mpz_class(std::numeric_limits<long>::min());
}

mpq_class make_mpq(std::int64_t num, std::int64_t den) {
    mpq_class q{mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den))};
    q.canonicalize();
    return q;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("Rational: zero denominator");
    if (!fits(num) || !fits(den)) {
        assign_big(make_mpq(num, den));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = gcd64(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational::Rational(const mpq_class& value) {
    mpq_class copy = value;
    copy.canonicalize();
    assign_big(std::move(copy));
}

Rational::Rational(const Rational& other)
    : num_(other.num_), den_(other.den_), big_(other.big_ ? std::make_unique<mpq_class>(*other.big_) : nullptr) {}

Rational& Rational::operator=(const Rational& other) {
    if (this == &other) return *this;
    num_ = other.num_;
    den_ = other.den_;
    if (other.big_)
        big_ = std::make_unique<mpq_class>(*other.big_);
    else
        big_.reset();
    return *this;
}

void Rational::assign_big(mpq_class value) {
    if (mpz_fits_i64(value.get_num()) && mpz_fits_i64(value.get_den())) {
        num_ = value.get_num().get_si();
        den_ = value.get_den().get_si();
        big_.reset();
        return;
    }
    big_ = std::make_unique<mpq_class>(std::move(value));
    num_ = 0;
    den_ = 1;
}

Rational Rational::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("Rational: empty string");
    std::string s(text);
    if (s.front() == '+') s.erase(0, 1);
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("Rational: cannot parse '" + std::string(text) + "'");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    return Rational(q);
}

int Rational::sign() const {
    if (big_) return sgn(*big_);
    return (num_ > 0) - (num_ < 0);
}

mpq_class Rational::to_mpq() const { return big_ ? *big_ : make_mpq(num_, den_); }

double Rational::to_double() const {
    if (big_) return big_->get_d();
    return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
    if (big_) return big_->get_str(10);
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const {
    if (big_) return Rational(mpq_class(-*big_));
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (rhs.num_ == 0) return *this;
        if (num_ == 0) return *this = rhs;
        std::int64_t a = num_, b = den_, c = rhs.num_, d = rhs.den_;
        if (b == d) {
            std::int64_t n;
            if (!__builtin_add_overflow(a, c, &n) && fits(n)) {
                const std::int64_t g = b == 1 ? 1 : gcd64(n, b);
                num_ = n / g;
                den_ = b / g;
                if (num_ == 0) den_ = 1;
                return *this;
            }
        } else {
            // Knuth's reduced-intermediate addition.
            const std::int64_t g = gcd64(b, d);
            const std::int64_t b1 = b / g, d1 = d / g;
            std::int64_t t1, t2, t, den;
            if (!__builtin_mul_overflow(a, d1, &t1) && !__builtin_mul_overflow(c, b1, &t2) &&
                !__builtin_add_overflow(t1, t2, &t) && fits(t)) {
                const std::int64_t g2 = g == 1 ? 1 : gcd64(t, g);
                if (!__builtin_mul_overflow(b1, d / g2, &den)) {
                    num_ = t / g2;
                    den_ = den;
                    if (num_ == 0) den_ = 1;
                    return *this;
                }
            }
        }
    }
    assign_big(to_mpq() + rhs.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    if (!big_ && !rhs.big_) {
        if (num_ == 0) return *this;
        if (rhs.num_ == 0) return *this = Rational();
        const std::int64_t g1 = gcd64(num_, rhs.den_);
        const std::int64_t g2 = gcd64(rhs.num_, den_);
        std::int64_t n, d;
        if (!__builtin_mul_overflow(num_ / g1, rhs.num_ / g2, &n) &&
            !__builtin_mul_overflow(den_ / g2, rhs.den_ / g1, &d) && fits(n) && d <= kMax) {
            num_ = n;
            den_ = d;
            return *this;
        }
    }
    assign_big(to_mpq() * rhs.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw std::domain_error("Rational: division by zero");
    if (!rhs.big_) {
        Rational inv;
        inv.num_ = rhs.num_ < 0 ? -rhs.den_ : rhs.den_;
        inv.den_ = rhs.num_ < 0 ? -rhs.num_ : rhs.num_;
        return *this *= inv;
    }
    assign_big(to_mpq() / rhs.to_mpq());
    return *this;
}

bool operator==(const Rational& lhs, const Rational& rhs) {
    // Both sides are canonical, and big values are demoted whenever they fit.
    if (!lhs.big_ && !rhs.big_) return lhs.num_ == rhs.num_ && lhs.den_ == rhs.den_;
    if (lhs.big_ && rhs.big_) return *lhs.big_ == *rhs.big_;
    return false;
}

std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs) {
    if (!lhs.big_ && !rhs.big_) {
        const __int128 l = static_cast<__int128>(lhs.num_) * rhs.den_;
        const __int128 r = static_cast<__int128>(rhs.num_) * lhs.den_;
        return l <=> r;
    }
    const int c = cmp(lhs.to_mpq(), rhs.to_mpq());
    return c <=> 0;
}

std::ostream& operator<<(std::ostream& os, const Rational& value) { return os << value.str(); }

}  // namespace noncorr
