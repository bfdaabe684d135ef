#include "egw/dyadic.hpp"

#include <cmath>

namespace egw {

void Dyadic::normalize() {
    if (num_ == 0) {
        exp_ = 0;
        return;
    }
    if (exp_ == 0) return;
    unsigned tz = static_cast<unsigned>(boost::multiprecision::lsb(boost::multiprecision::abs(num_)));
    unsigned k = tz < exp_ ? tz : exp_;
    if (k) {
        num_ >>= k;
        exp_ -= k;
    }
}

Dyadic Dyadic::pow2(long long k) {
    if (k >= 0) return Dyadic(BigInt(1) << static_cast<unsigned>(k), 0);
    return Dyadic(BigInt(1), static_cast<unsigned>(-k));
}

Dyadic Dyadic::shifted(long long k) const {
    if (num_ == 0) return {};
    if (k >= 0) {
        auto uk = static_cast<unsigned long long>(k);
        if (uk <= exp_) return Dyadic(num_, exp_ - static_cast<unsigned>(uk));
        return Dyadic(num_ << static_cast<unsigned>(uk - exp_), 0);
    }
    return Dyadic(num_, exp_ + static_cast<unsigned>(-k));
}

Dyadic Dyadic::operator+(const Dyadic& o) const {
    if (exp_ == o.exp_) return Dyadic(num_ + o.num_, exp_);
    if (exp_ > o.exp_) return Dyadic(num_ + (o.num_ << (exp_ - o.exp_)), exp_);
    return Dyadic((num_ << (o.exp_ - exp_)) + o.num_, o.exp_);
}

Dyadic Dyadic::operator-(const Dyadic& o) const { return *this + (-o); }

std::strong_ordering Dyadic::operator<=>(const Dyadic& o) const {
    BigInt a = num_, b = o.num_;
    if (exp_ > o.exp_) b <<= (exp_ - o.exp_);
    else if (o.exp_ > exp_) a <<= (o.exp_ - exp_);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

BigInt Dyadic::floor() const {
    if (exp_ == 0) return num_;
    if (num_ >= 0) return num_ >> exp_;
    BigInt mag = -num_;
    BigInt q = mag >> exp_;
    if ((q << exp_) != mag) q += 1;
    return -q;
}

double Dyadic::to_double() const {
    if (num_ == 0) return 0.0;
    auto bits = static_cast<long long>(boost::multiprecision::msb(boost::multiprecision::abs(num_)));
    long long drop = bits > 60 ? bits - 60 : 0;
    BigInt top = boost::multiprecision::abs(num_) >> static_cast<unsigned>(drop);
    double m = std::ldexp(top.convert_to<double>(), static_cast<int>(drop - static_cast<long long>(exp_)));
    return num_ < 0 ? -m : m;
}

std::string Dyadic::to_string() const {
    if (exp_ == 0) return num_.str();
    if (exp_ <= 20) return num_.str() + "/" + std::to_string(1ull << exp_);
    return num_.str() + "/2^" + std::to_string(exp_);
}

}  // namespace egw
