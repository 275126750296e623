#include "atq/numbers.hpp"

#include <cctype>

#include "atq/errors.hpp"

namespace atq {

Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if (a % b != 0 && (a < 0) != (b < 0))
        --q;
    return q;
}

Integer ceil_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if (a % b != 0 && (a < 0) == (b < 0))
        ++q;
    return q;
}

Integer rat_floor(const Rational& r)
{
    return floor_div(numerator(r), denominator(r));
}

Integer rat_ceil(const Rational& r)
{
    return ceil_div(numerator(r), denominator(r));
}

bool is_integral(const Rational& r)
{
    return denominator(r) == 1;
}

namespace {

bool parse_integer(const std::string& text, Integer& out)
{
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && text[i] == '-') {
        negative = true;
        ++i;
    }
    if (i == text.size())
        return false;
    Integer value = 0;
    for (; i < text.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            return false;
        value = value * 10 + (text[i] - '0');
    }
    out = negative ? -value : value;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    const std::size_t slash = text.find('/');
    Integer num, den = 1;
    bool ok = parse_integer(text.substr(0, slash), num);
    if (slash != std::string::npos) {
        ok = ok && parse_integer(text.substr(slash + 1), den) && den > 0;
    }
    if (!ok)
        throw DomainError("invalid_rational",
                          "expected \"num\" or \"num/den\" with den > 0, got \""
                              + text + "\"");
    return Rational(num, den);
}

std::string format_rational(const Rational& r)
{
    return r.str();
}

}  // namespace atq
