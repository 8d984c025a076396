#ifndef PPROG_PROB_HPP
#define PPROG_PROB_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace pprog {

using Rational = boost::multiprecision::cpp_rational;

/// Parses a decimal literal ("0.6", "1", "0.25") into the exact rational it
/// denotes. Throws std::invalid_argument on malformed input.
Rational rational_from_decimal(const std::string& text);

/// Renders a rational whose denominator divides some power of ten as the
/// shortest exact decimal ("3/5" -> "0.6"). Falls back to "n/d" when no
/// finite decimal exists.
std::string decimal_from_rational(const Rational& value);

/// Exact conversion of an IEEE double (doubles are dyadic rationals).
Rational rational_from_double(double value);

/// Renders with a fixed number of decimals (used for sampled-mode output).
std::string format_double(double value, int decimals = 6);

/// A probability value that is either an exact rational (Exact mode) or a
/// double (Sampled mode). Arithmetic stays exact while both operands are
/// exact and degrades to double as soon as one side is sampled. Comparisons
/// are always performed in the rational domain, so they are deterministic
/// in both modes.
class Prob {
public:
    Prob() : exact_(true), rat_(0), dbl_(0.0) {}

    static Prob exact(Rational r) {
        Prob p;
        p.exact_ = true;
        p.rat_ = std::move(r);
        return p;
    }
    static Prob approx(double v) {
        Prob p;
        p.exact_ = false;
        p.dbl_ = v;
        return p;
    }

    bool is_exact() const { return exact_; }

    Rational as_rational() const {
        return exact_ ? rat_ : rational_from_double(dbl_);
    }
    double as_double() const {
        return exact_ ? static_cast<double>(rat_) : dbl_;
    }

    bool is_zero() const { return exact_ ? rat_.is_zero() : dbl_ == 0.0; }

    friend Prob operator+(const Prob& a, const Prob& b) {
        if (a.exact_ && b.exact_) return exact(a.rat_ + b.rat_);
        return approx(a.as_double() + b.as_double());
    }
    friend Prob operator-(const Prob& a, const Prob& b) {
        if (a.exact_ && b.exact_) return exact(a.rat_ - b.rat_);
        return approx(a.as_double() - b.as_double());
    }
    friend Prob operator*(const Prob& a, const Prob& b) {
        if (a.exact_ && b.exact_) return exact(a.rat_ * b.rat_);
        return approx(a.as_double() * b.as_double());
    }
    /// Division with the join convention 0/0 = 0. Nonzero/0 is a caller bug.
    friend Prob operator/(const Prob& a, const Prob& b) {
        if (a.is_zero() && b.is_zero()) return Prob();
        if (a.exact_ && b.exact_) return exact(a.rat_ / b.rat_);
        return approx(a.as_double() / b.as_double());
    }
    Prob& operator+=(const Prob& o) { return *this = *this + o; }

    friend bool operator==(const Prob& a, const Prob& b) {
        return a.as_rational() == b.as_rational();
    }
    friend bool operator<(const Prob& a, const Prob& b) {
        return a.as_rational() < b.as_rational();
    }

    /// exact n/d (or integer) in Exact mode, fixed decimals in Sampled mode
    std::string str() const {
        return exact_ ? rat_.str() : format_double(dbl_);
    }

private:
    bool exact_;
    Rational rat_;
    double dbl_;
};

inline Prob abs_diff(const Prob& a, const Prob& b) {
    return a < b ? b - a : a - b;
}

}  // namespace pprog

#endif
