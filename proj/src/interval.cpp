#include "volcert/interval.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

namespace volcert {

double next_up(double x) noexcept {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}

double next_down(double x) noexcept {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}

namespace {

Interval outward(double lo, double hi) {
    return IntervalInternal::raw(next_down(lo), next_up(hi));
}

void require_finite(double lo, double hi) {
    if (!std::isfinite(lo) || !std::isfinite(hi)) {
        throw std::invalid_argument("interval endpoints must be finite");
    }
    if (lo > hi) {
        throw std::invalid_argument("interval requires lo <= hi");
    }
}

// Parses an unsigned decimal "123.456e-7" into (mantissa, exp10).
// Returns false when the mantissa does not fit 18 digits; callers fall
// back to the widened strtod path.
bool parse_decimal_parts(std::string_view s, std::uint64_t& mantissa, int& exp10, bool& neg) {
    std::size_t i = 0;
    neg = false;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        neg = (s[i] == '-');
        ++i;
    }
    mantissa = 0;
    exp10 = 0;
    int digits = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) return false;
            seen_dot = true;
            continue;
        }
        if (c == 'e' || c == 'E') break;
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
        seen_digit = true;
        if (digits >= 18) return false;
        mantissa = mantissa * 10 + static_cast<std::uint64_t>(c - '0');
        if (mantissa != 0) ++digits;
        if (seen_dot) --exp10;
    }
    if (!seen_digit) return false;
    if (i < s.size()) {
        // explicit exponent
        int e = 0;
        auto res = std::from_chars(s.data() + i + 1, s.data() + s.size(), e);
        if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return false;
        exp10 += e;
    }
    return true;
}

// Exact double for mantissa * 10^exp10, when one exists.
std::optional<double> exact_decimal_value(std::uint64_t m, int exp10) {
    constexpr std::uint64_t kMaxExact = (1ULL << 53);
    if (m == 0) return 0.0;
    if (exp10 >= 0) {
        if (exp10 > 22) return std::nullopt;
        for (int k = 0; k < exp10; ++k) {
            if (m > kMaxExact / 10) return std::nullopt;
            m *= 10;
        }
        if (m > kMaxExact) return std::nullopt;
        return static_cast<double>(m);
    }
    // m / 10^k = (m / 5^k) / 2^k — exact iff 5^k divides m.
    int k = -exp10;
    if (k > 27) return std::nullopt;
    for (int j = 0; j < k; ++j) {
        if (m % 5 != 0) return std::nullopt;
        m /= 5;
    }
    if (m > kMaxExact) return std::nullopt;
    return std::ldexp(static_cast<double>(m), -k);
}

double parse_nearest(std::string_view s) {
    std::string buf(s);
    char* end = nullptr;
    double v = std::strtod(buf.c_str(), &end);
    if (end != buf.c_str() + buf.size() || buf.empty()) {
        throw std::invalid_argument("malformed decimal literal: " + buf);
    }
    if (!std::isfinite(v)) {
        throw std::invalid_argument("decimal literal out of range: " + buf);
    }
    return v;
}

}  // namespace

Interval Interval::make(double lo, double hi) {
    require_finite(lo, hi);
    return Interval(lo, hi);
}

Interval Interval::from_decimal(std::string_view text) {
    std::uint64_t m = 0;
    int exp10 = 0;
    bool neg = false;
    if (parse_decimal_parts(text, m, exp10, neg)) {
        if (auto exact = exact_decimal_value(m, exp10)) {
            double v = neg ? -*exact : *exact;
            return Interval(v, v);
        }
    }
    // Nearest double is within half an ulp of the exact decimal, so one
    // step each way encloses it.
    double v = parse_nearest(text);
    return Interval(next_down(v), next_up(v));
}

Interval Interval::from_decimal(std::string_view lo_text, std::string_view hi_text) {
    Interval a = from_decimal(lo_text);
    Interval b = from_decimal(hi_text);
    if (a.lo_ > b.hi_) {
        throw std::invalid_argument("decimal interval requires lo <= hi");
    }
    return Interval(a.lo_, b.hi_);
}

double Interval::mid() const noexcept {
    double m = lo_ + 0.5 * (hi_ - lo_);
    if (!(m >= lo_ && m <= hi_)) m = lo_;  // guards against rounding out of range
    return m;
}

double Interval::width() const noexcept {
    return next_up(hi_ - lo_);
}

std::pair<Interval, Interval> Interval::bisect() const {
    double m = mid();
    return {Interval(lo_, m), Interval(m, hi_)};
}

Interval operator+(const Interval& a, const Interval& b) {
    return outward(a.lo_ + b.lo_, a.hi_ + b.hi_);
}

Interval operator-(const Interval& a, const Interval& b) {
    return outward(a.lo_ - b.hi_, a.hi_ - b.lo_);
}

Interval operator-(const Interval& a) {
    return IntervalInternal::raw(-a.hi_, -a.lo_);
}

Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo_ * b.lo_;
    const double p2 = a.lo_ * b.hi_;
    const double p3 = a.hi_ * b.lo_;
    const double p4 = a.hi_ * b.hi_;
    return outward(std::min(std::min(p1, p2), std::min(p3, p4)),
                   std::max(std::max(p1, p2), std::max(p3, p4)));
}

Interval operator/(const Interval& a, const Interval& b) {
    if (b.lo_ <= 0.0 && b.hi_ >= 0.0) {
        throw std::domain_error("division by an interval containing zero");
    }
    const double q1 = a.lo_ / b.lo_;
    const double q2 = a.lo_ / b.hi_;
    const double q3 = a.hi_ / b.lo_;
    const double q4 = a.hi_ / b.hi_;
    return outward(std::min(std::min(q1, q2), std::min(q3, q4)),
                   std::max(std::max(q1, q2), std::max(q3, q4)));
}

Interval sqrt(const Interval& a, double clamp_tol) {
    if (a.hi_ < 0.0) {
        throw std::domain_error("sqrt of a negative interval");
    }
    double lo = a.lo_;
    if (lo < 0.0) {
        double scale = std::max(1.0, std::abs(a.hi_));
        if (lo < -clamp_tol * scale) {
            throw std::domain_error("sqrt lower endpoint below clamp tolerance");
        }
        lo = 0.0;
    }
    double rlo = lo == 0.0 ? 0.0 : std::max(0.0, next_down(std::sqrt(lo)));
    double rhi = next_up(std::sqrt(a.hi_));
    return IntervalInternal::raw(rlo, rhi);
}

Interval hull(const Interval& a, const Interval& b) {
    return IntervalInternal::raw(std::min(a.lo_, b.lo_), std::max(a.hi_, b.hi_));
}

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
    double lo = std::max(a.lo_, b.lo_);
    double hi = std::min(a.hi_, b.hi_);
    if (lo > hi) return std::nullopt;
    return IntervalInternal::raw(lo, hi);
}

std::string shortest_decimal(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string Interval::to_json() const {
    return "{\"lo\": \"" + shortest_decimal(lo_) + "\", \"hi\": \"" + shortest_decimal(hi_) + "\"}";
}

Interval Interval::from_json(std::string_view json) {
    auto grab = [&](std::string_view key) -> std::string {
        auto pos = json.find(key);
        if (pos == std::string_view::npos) throw std::invalid_argument("missing interval key");
        auto open = json.find('"', pos + key.size());
        auto close = open == std::string_view::npos ? open : json.find('"', open + 1);
        if (open == std::string_view::npos || close == std::string_view::npos) {
            throw std::invalid_argument("malformed interval json");
        }
        return std::string(json.substr(open + 1, close - open - 1));
    };
    double lo = parse_nearest(grab("\"lo\""));
    double hi = parse_nearest(grab("\"hi\""));
    return make(lo, hi);
}

}  // namespace volcert
