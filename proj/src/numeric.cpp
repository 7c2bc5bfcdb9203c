#include "embfilt/numeric.hpp"

#include <limits>

namespace embfilt {

std::string to_string(const Rational& q) {
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

Rational rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) throw error("rational with zero denominator: " + text);
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw error("malformed rational: '" + text + "'");
    }
}

Int to_int(const BigInt& value) {
    if (value > std::numeric_limits<Int>::max() || value < std::numeric_limits<Int>::min())
        throw error("integer out of machine range: " + value.str());
    return static_cast<Int>(value);
}

} // namespace embfilt
