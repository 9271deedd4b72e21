#pragma once

#include <compare>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <string>

namespace spindec {

/// Exact half-integer, stored as twice its value. HalfInt::from_doubled(3)
/// is 3/2, HalfInt(2) is 2. All arithmetic and comparisons are exact.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t whole) : doubled_(2 * whole) {}

    static constexpr HalfInt from_doubled(std::int64_t d) {
        HalfInt h;
        h.doubled_ = d;
        return h;
    }
    /// Exact parse of "k" or "k/2" (k a possibly signed integer).
    /// Returns false on anything else; no floating point involved.
    static bool parse(const std::string& text, HalfInt& out);

    constexpr std::int64_t doubled() const { return doubled_; }
    constexpr bool is_integer() const { return doubled_ % 2 == 0; }
    constexpr std::int64_t as_integer() const { return doubled_ / 2; }
    constexpr bool is_zero() const { return doubled_ == 0; }
    constexpr bool is_negative() const { return doubled_ < 0; }

    constexpr HalfInt operator-() const { return from_doubled(-doubled_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_doubled(doubled_ + o.doubled_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_doubled(doubled_ - o.doubled_); }
    constexpr HalfInt& operator+=(HalfInt o) {
        doubled_ += o.doubled_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) {
        doubled_ -= o.doubled_;
        return *this;
    }
    constexpr HalfInt operator*(std::int64_t k) const { return from_doubled(doubled_ * k); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    constexpr HalfInt abs() const { return doubled_ < 0 ? -*this : *this; }
    double to_double() const { return static_cast<double>(doubled_) / 2.0; }

    /// "2", "0", "-3", or "3/2", "-1/2" — the exact wire format.
    std::string to_string() const;

private:
    std::int64_t doubled_ = 0;
};

constexpr HalfInt half(std::int64_t doubled) { return HalfInt::from_doubled(doubled); }

inline HalfInt operator*(std::int64_t k, HalfInt h) { return h * k; }

} // namespace spindec

template <> struct std::hash<spindec::HalfInt> {
    std::size_t operator()(const spindec::HalfInt& h) const noexcept {
        return std::hash<std::int64_t>{}(h.doubled());
    }
};
