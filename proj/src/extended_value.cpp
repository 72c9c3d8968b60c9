#include "dualph/extended_value.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>
#include <system_error>

namespace dualph {

ExtendedValue::ExtendedValue(double value)
{
    if (std::isnan(value))
        throw std::invalid_argument("filtration value is NaN");
    if (std::isinf(value)) {
        kind_ = value > 0 ? Kind::PosInf : Kind::NegInf;
        return;
    }
    // collapse -0.0 so that negation of 0 prints and compares as 0
    value_ = value == 0.0 ? 0.0 : value;
}

double ExtendedValue::finite() const
{
    if (kind_ != Kind::Finite)
        throw std::logic_error("finite() called on an infinite value");
    return value_;
}

ExtendedValue ExtendedValue::operator-() const
{
    switch (kind_) {
    case Kind::PosInf:
        return neg_infinity();
    case Kind::NegInf:
        return infinity();
    case Kind::Finite:
        break;
    }
    return ExtendedValue(-value_);
}

std::weak_ordering operator<=>(ExtendedValue const& a, ExtendedValue const& b)
{
    if (a.kind_ != b.kind_)
        return a.kind_ < b.kind_ ? std::weak_ordering::less : std::weak_ordering::greater;
    if (a.value_ < b.value_)
        return std::weak_ordering::less;
    if (b.value_ < a.value_)
        return std::weak_ordering::greater;
    return std::weak_ordering::equivalent;
}

std::string format_double(double value)
{
    char buffer[64];
    auto const result = std::to_chars(buffer, buffer + sizeof(buffer), value);
    return std::string(buffer, result.ptr);
}

std::string ExtendedValue::to_string() const
{
    switch (kind_) {
    case Kind::PosInf:
        return "inf";
    case Kind::NegInf:
        return "-inf";
    case Kind::Finite:
        break;
    }
    return format_double(value_);
}

ExtendedValue ExtendedValue::parse(std::string const& text)
{
    if (text == "inf" || text == "+inf")
        return infinity();
    if (text == "-inf")
        return neg_infinity();

    double value = 0.0;
    char const* first = text.data();
    char const* last = text.data() + text.size();
    if (first != last && *first == '+')
        ++first;
    auto const [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || first == last || !std::isfinite(value))
        throw std::invalid_argument("not a number: '" + text + "'");
    return ExtendedValue(value);
}

} // namespace dualph
