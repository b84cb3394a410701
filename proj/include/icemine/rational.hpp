#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace icemine {

// Exact non-negative rational. Confidences are support ratios, so int64 is
// ample and comparisons can stay overflow-free via cross multiplication.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t num, std::int64_t den) : num_(num), den_(den) {
        if (den_ <= 0 || num_ < 0) throw std::domain_error("rational must be non-negative with positive denominator");
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }
    friend bool operator<=(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <= b.num_ * a.den_;
    }
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator>=(const Rational& a, const Rational& b) { return b <= a; }

    std::string to_string() const {
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

    // Truncated decimal rendering; 2/3 prints as "0.66" with two digits.
    std::string to_decimal(unsigned digits = 2) const {
        std::int64_t whole = num_ / den_;
        std::int64_t rem = num_ % den_;
        std::string out = std::to_string(whole);
        if (digits == 0) return out;
        out += '.';
        for (unsigned i = 0; i < digits; ++i) {
            rem *= 10;
            out += static_cast<char>('0' + rem / den_);
            rem %= den_;
        }
        return out;
    }

    // Parses a plain decimal like "0.5", "1", ".75" into an exact rational.
    static Rational from_decimal(const std::string& text) {
        std::size_t dot = text.find('.');
        std::string whole = dot == std::string::npos ? text : text.substr(0, dot);
        std::string frac = dot == std::string::npos ? "" : text.substr(dot + 1);
        if (whole.empty() && frac.empty()) throw std::invalid_argument("empty decimal");
        for (char c : whole)
            if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: " + text);
        for (char c : frac)
            if (c < '0' || c > '9') throw std::invalid_argument("bad decimal: " + text);
        if (whole.size() + frac.size() > 15) throw std::invalid_argument("decimal too long: " + text);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t num = (whole.empty() ? 0 : std::stoll(whole)) * den +
                           (frac.empty() ? 0 : std::stoll(frac));
        return Rational(num, den);
    }

private:
    void normalize() {
        std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

} // namespace icemine
