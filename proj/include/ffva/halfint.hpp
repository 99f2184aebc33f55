#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ffva {

/// An exact element of (1/2)Z, stored as a count of half units.
class HalfInt {
public:
    constexpr HalfInt() = default;
    constexpr explicit HalfInt(std::int64_t integer) : halves_(2 * integer) {}

    static constexpr HalfInt from_halves(std::int64_t h) {
        HalfInt x;
        x.halves_ = h;
        return x;
    }
    static constexpr HalfInt half() { return from_halves(1); }

    constexpr std::int64_t halves() const { return halves_; }
    constexpr bool is_integer() const { return halves_ % 2 == 0; }
    constexpr bool is_half_odd() const { return halves_ % 2 != 0; }

    /// Largest integer <= value.
    constexpr std::int64_t floor() const {
        return halves_ >= 0 ? halves_ / 2 : -((-halves_ + 1) / 2);
    }

    constexpr HalfInt operator-() const { return from_halves(-halves_); }
    constexpr HalfInt& operator+=(HalfInt o) { halves_ += o.halves_; return *this; }
    constexpr HalfInt& operator-=(HalfInt o) { halves_ -= o.halves_; return *this; }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return a -= b; }
    friend constexpr HalfInt operator*(std::int64_t k, HalfInt a) { return from_halves(k * a.halves_); }

    friend constexpr bool operator==(HalfInt, HalfInt) = default;
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

    /// "3/2", "-1/2", "2"
    std::string to_string() const;
    /// Accepts "n", "n/2" (any sign). Throws std::invalid_argument otherwise.
    static HalfInt parse(std::string_view text);

private:
    std::int64_t halves_ = 0;
};

}  // namespace ffva
