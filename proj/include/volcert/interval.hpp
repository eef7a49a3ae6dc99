#ifndef VOLCERT_INTERVAL_HPP
#define VOLCERT_INTERVAL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <utility>

namespace volcert {

// One representable step outward/inward.
double next_up(double x) noexcept;
double next_down(double x) noexcept;

// Default relative tolerance for clamping small domain dips (sqrt of a
// barely-negative lower endpoint, arccosh slightly below 1).
inline constexpr double kDefaultClampTol = 1e-12;

// Closed real interval [lo, hi] with outward-rounded endpoints.
//
// Every arithmetic operation returns an interval containing the exact
// real-arithmetic image of its operands (enclosure property).  Outward
// rounding is done by stepping each endpoint one representable value
// past the round-to-nearest result, so no rounding-mode control is needed.
class Interval {
public:
    Interval() = default;

    // Exact construction from machine numbers; throws std::invalid_argument
    // on lo > hi or non-finite input.
    static Interval make(double lo, double hi);
    static Interval point(double v) { return make(v, v); }

    // Tightest interval enclosing the exact value of a decimal literal.
    // Exactly representable decimals (e.g. "1.5", "2") give point intervals;
    // anything else is widened one step each way around the nearest double.
    static Interval from_decimal(std::string_view text);
    static Interval from_decimal(std::string_view lo_text, std::string_view hi_text);

    double lo() const noexcept { return lo_; }
    double hi() const noexcept { return hi_; }
    double mid() const noexcept;
    double width() const noexcept;

    bool contains(double x) const noexcept { return lo_ <= x && x <= hi_; }
    bool contains(const Interval& o) const noexcept { return lo_ <= o.lo_ && o.hi_ <= hi_; }
    bool is_point() const noexcept { return lo_ == hi_; }

    // Splits at the midpoint; the two halves cover *this.
    std::pair<Interval, Interval> bisect() const;

    // {"lo": "<shortest round-trip decimal>", "hi": "..."} — endpoints as
    // strings so certificates stay human-auditable.
    std::string to_json() const;
    static Interval from_json(std::string_view json);

    friend Interval operator+(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a, const Interval& b);
    friend Interval operator-(const Interval& a);
    friend Interval operator*(const Interval& a, const Interval& b);
    friend Interval operator/(const Interval& a, const Interval& b);

private:
    Interval(double lo, double hi) noexcept : lo_(lo), hi_(hi) {}
    static Interval raw(double lo, double hi) noexcept { return Interval(lo, hi); }

    double lo_ = 0.0;
    double hi_ = 0.0;

    friend Interval sqrt(const Interval&, double);
    friend Interval hull(const Interval&, const Interval&);
    friend std::optional<Interval> intersect(const Interval&, const Interval&);
    friend class IntervalInternal;
};

// Enclosure of sqrt on a ∩ [0, ∞).  Lower endpoints below zero by less
// than clamp_tol (relative) are clamped to zero; anything lower throws
// std::domain_error, as does a.hi < 0.
Interval sqrt(const Interval& a, double clamp_tol = kDefaultClampTol);

Interval hull(const Interval& a, const Interval& b);
std::optional<Interval> intersect(const Interval& a, const Interval& b);

inline double width(const Interval& a) noexcept { return a.width(); }
inline bool contains(const Interval& a, double x) noexcept { return a.contains(x); }

// Shortest round-trip decimal representation of a double.
std::string shortest_decimal(double v);

// Backdoor for modules that derive endpoints by their own rigorous
// argument (clamps, known range restrictions).  Not part of the public
// arithmetic surface.
class IntervalInternal {
public:
    static Interval raw(double lo, double hi) noexcept { return Interval::raw(lo, hi); }
};

}  // namespace volcert

#endif
