#pragma once

#include <compare>
#include <cstdint>
#include <string>

namespace dualph {

/// A real number or one of the two infinities.
///
/// Used for filtration values and bar endpoints. Infinities are tagged
/// explicitly so that negation and comparison are exact; NaN is rejected.
class ExtendedValue
{
public:
    enum class Kind : std::uint8_t { NegInf = 0, Finite = 1, PosInf = 2 };

    constexpr ExtendedValue() = default;
    ExtendedValue(double value); // NOLINT(google-explicit-constructor)

    static constexpr ExtendedValue infinity() { return ExtendedValue(Kind::PosInf); }
    static constexpr ExtendedValue neg_infinity() { return ExtendedValue(Kind::NegInf); }

    Kind kind() const { return kind_; }
    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }

    /// Finite payload; throws std::logic_error on an infinity.
    double finite() const;

    ExtendedValue operator-() const;

    friend bool operator==(ExtendedValue const& a, ExtendedValue const& b)
    {
        return a.kind_ == b.kind_ && a.value_ == b.value_;
    }
    friend std::weak_ordering operator<=>(ExtendedValue const& a, ExtendedValue const& b);

    /// "inf", "-inf", or the shortest decimal that round-trips.
    std::string to_string() const;

    /// Inverse of to_string; also accepts "+inf". Throws std::invalid_argument.
    static ExtendedValue parse(std::string const& text);

private:
    constexpr explicit ExtendedValue(Kind kind) : kind_(kind) {}

    Kind kind_ = Kind::Finite;
    double value_ = 0.0;
};

std::string format_double(double value);

} // namespace dualph
