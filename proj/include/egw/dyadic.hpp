#ifndef EGW_DYADIC_HPP
#define EGW_DYADIC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <compare>
#include <string>

namespace egw {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational num / 2^exp, kept normalized (num odd or exp == 0).
class Dyadic {
public:
    Dyadic() = default;
    Dyadic(long long v) : num_(v) {}  // NOLINT(google-explicit-constructor)
    Dyadic(BigInt num, unsigned exp) : num_(std::move(num)), exp_(exp) { normalize(); }

    /// 2^k for any integer k.
    static Dyadic pow2(long long k);

    const BigInt& numerator() const { return num_; }
    unsigned exponent() const { return exp_; }
    bool is_integer() const { return exp_ == 0; }
    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_.sign(); }

    /// Multiply by 2^k.
    Dyadic shifted(long long k) const;
    Dyadic half() const { return shifted(-1); }

    Dyadic operator+(const Dyadic& o) const;
    Dyadic operator-(const Dyadic& o) const;
    Dyadic operator-() const { return Dyadic(-num_, exp_); }
    Dyadic operator*(const Dyadic& o) const { return Dyadic(num_ * o.num_, exp_ + o.exp_); }
    Dyadic& operator+=(const Dyadic& o) { return *this = *this + o; }

    bool operator==(const Dyadic& o) const { return exp_ == o.exp_ && num_ == o.num_; }
    std::strong_ordering operator<=>(const Dyadic& o) const;

    /// Floor of the value.
    BigInt floor() const;
    double to_double() const;
    /// "3", "-5/8", "7/2^40" (power form once the denominator exceeds 2^20).
    std::string to_string() const;

private:
    void normalize();

    BigInt num_ = 0;
    unsigned exp_ = 0;
};

}  // namespace egw

#endif
