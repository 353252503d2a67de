#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <span>
#include <stdexcept>
#include <string>

namespace pball {

// Norm exponent in (0, inf]. Infinity is an exact, distinguishable value,
// not a large float.
class Exponent {
public:
    explicit Exponent(double value) : value_(value) {
        if (std::isnan(value_) || value_ <= 0.0)
            throw std::invalid_argument("norm exponent must be positive (or inf)");
    }

    static Exponent inf() { return Exponent(std::numeric_limits<double>::infinity()); }

    // Accepts the literal "inf" or a positive decimal.
    static Exponent parse(const std::string& text) {
        if (text == "inf") return inf();
        char* end = nullptr;
        const double v = std::strtod(text.c_str(), &end);
        if (end == text.c_str() || *end != '\0')
            throw std::invalid_argument("cannot parse norm exponent '" + text + "'");
        return Exponent(v);
    }

    double value() const { return value_; }
    bool is_inf() const { return std::isinf(value_); }

    bool operator==(const Exponent& other) const { return value_ == other.value_; }

    std::string str() const {
        if (is_inf()) return "inf";
        char buf[32];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value_);
        return std::string(buf, ptr);
    }

private:
    double value_;
};

// ||(a, b)||_p, scale-factored so extreme exponents neither overflow nor
// underflow the intermediate powers.
inline double pnorm(double a, double b, Exponent p) {
    a = std::abs(a);
    b = std::abs(b);
    const double m = std::max(a, b);
    if (p.is_inf() || m == 0.0) return m;
    const double pe = p.value();
    const double s = std::pow(a / m, pe) + std::pow(b / m, pe);
    return m * std::pow(s, 1.0 / pe);
}

double pnorm(std::span<const double> v, Exponent p);

}  // namespace pball
