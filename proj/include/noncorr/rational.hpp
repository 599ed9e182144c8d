#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace noncorr {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Values whose numerator and denominator fit in 63 bits are kept inline;
/// anything larger is promoted to a GMP rational and demoted again as soon
/// as it fits. Almost every value met by the correlation machinery is small,
/// so the common path never allocates.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t value) : num_(value) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const mpq_class& value);

    Rational(const Rational& other);
    Rational(Rational&&) noexcept = default;
    Rational& operator=(const Rational& other);
    Rational& operator=(Rational&&) noexcept = default;
    ~Rational() = default;

    /// Parses "p" or "p/q" (optional leading sign on p).
    static Rational parse(std::string_view text);

    bool is_zero() const { return !big_ && num_ == 0; }
    int sign() const;
    bool is_small() const { return !big_; }

    mpq_class to_mpq() const;
    double to_double() const;
    /// "p/q", or "p" when the denominator is 1.
    std::string str() const;

    Rational operator-() const;
    Rational abs() const { return sign() < 0 ? -*this : *this; }

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);

    friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
    friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
    friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
    friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

    friend bool operator==(const Rational& lhs, const Rational& rhs);
    friend std::strong_ordering operator<=>(const Rational& lhs, const Rational& rhs);

private:
    void assign_big(mpq_class value);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::unique_ptr<mpq_class> big_;
};

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace noncorr
