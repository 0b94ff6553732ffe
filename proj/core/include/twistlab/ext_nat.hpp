#pragma once

#include <cstdint>
#include <string>

namespace twistlab {

/// Saturating extended natural number. Values that would exceed the
/// threshold collapse to a symbolic Huge marker; arithmetic on Huge yields
/// Huge, and n < Huge holds for every finite n.
class ExtNat {
public:
    static constexpr std::uint64_t kDefaultThreshold = UINT64_MAX;

    constexpr ExtNat() = default;
    constexpr ExtNat(std::uint64_t value) : value_(value) {}
    static constexpr ExtNat huge() {
        ExtNat x;
        x.huge_ = true;
        return x;
    }

    constexpr bool is_huge() const { return huge_; }
    constexpr std::uint64_t value() const { return value_; }  // meaningless when huge

    ExtNat operator+(ExtNat other) const;
    ExtNat operator*(ExtNat other) const;
    /// this^exponent with saturation.
    ExtNat pow(std::uint64_t exponent) const;
    /// 2^this with saturation.
    static ExtNat two_to(ExtNat exponent);

    bool operator==(const ExtNat& other) const {
        return huge_ == other.huge_ && (huge_ || value_ == other.value_);
    }
    bool operator<(const ExtNat& other) const {
        if (huge_) return false;
        if (other.huge_) return true;
        return value_ < other.value_;
    }
    bool operator<=(const ExtNat& other) const { return *this < other || *this == other; }

    std::string to_string() const { return huge_ ? "Huge" : std::to_string(value_); }

private:
    std::uint64_t value_ = 0;
    bool huge_ = false;
};

}  // namespace twistlab
