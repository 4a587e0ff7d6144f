#include "sgc/arith.hpp"

#include <numeric>
#include <set>

#include "sgc/error.hpp"

namespace sgc {

auto EvenRational::normalize(std::int64_t p, std::int64_t q) -> EvenRational {
    if (p < 1 || q < 1) {
        throw Error(Errc::domain, "circumference needs positive numerator and denominator");
    }
    if (p < 2 * q) {
        throw Error(Errc::domain, "circumference below 2: " + std::to_string(p) + "/" +
                                      std::to_string(q));
    }
    const auto g = std::gcd(p, q);
    p /= g;
    q /= g;
    if (p % 2 != 0) {
        p *= 2;
        q *= 2;
    }
    return EvenRational(p, q);
}

auto EvenRational::value() const -> Rational { return Rational(p_, q_); }

auto EvenRational::str() const -> std::string { return format_rational(value()); }

auto operator<=>(const EvenRational& a, const EvenRational& b) noexcept -> std::strong_ordering {
    const auto lhs = static_cast<__int128>(a.p_) * b.q_;
    const auto rhs = static_cast<__int128>(b.p_) * a.q_;
    if (lhs < rhs) {
        return std::strong_ordering::less;
    }
    if (lhs > rhs) {
        return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

auto normalize_even(std::int64_t p, std::int64_t q) -> EvenRational {
    return EvenRational::normalize(p, q);
}

auto normalize_even(const Rational& r) -> EvenRational {
    const BigInt num = numerator(r);
    const BigInt den = denominator(r);
    if (num > std::numeric_limits<std::int64_t>::max() / 2 ||
        den > std::numeric_limits<std::int64_t>::max() / 2) {
        throw Error(Errc::capacity, "rational does not fit 64-bit even form");
    }
    return EvenRational::normalize(static_cast<std::int64_t>(num), static_cast<std::int64_t>(den));
}

auto circ_dist(std::int64_t i, std::int64_t j, std::int64_t p) -> std::int64_t {
    const auto d = i > j ? i - j : j - i;
    return std::min(d, p - d);
}

auto antipode(std::int64_t i, std::int64_t p) -> std::int64_t {
    if (p % 2 != 0) {
        throw Error(Errc::domain, "antipode needs an even number of colors");
    }
    return (i + p / 2) % p;
}

auto candidates(int n, const EvenRational& lo, const EvenRational& hi) -> std::vector<EvenRational> {
    std::set<EvenRational> found;
    for (std::int64_t p = 2; p <= 2 * static_cast<std::int64_t>(n); p += 2) {
        for (std::int64_t q = 1; 2 * q <= p; ++q) {
            const auto r = EvenRational::normalize(p, q);
            if (lo <= r && r <= hi) {
                found.insert(r);
            }
        }
    }
    return {found.begin(), found.end()};
}

auto format_lowest(const Rational& r) -> std::string {
    return numerator(r).str() + "/" + denominator(r).str();
}

auto format_rational(const Rational& r) -> std::string {
    auto out = format_lowest(r);
    if (numerator(r) % 2 != 0) {
        const BigInt p = numerator(r) * 2;
        const BigInt q = denominator(r) * 2;
        out += " (" + p.str() + "/" + q.str() + ")";
    }
    return out;
}

auto mod_circle(const Rational& x, const Rational& r) -> Rational {
    // floor(x / r) via integer division on the exact quotient
    const Rational quotient = x / r;
    BigInt fl = numerator(quotient) / denominator(quotient);
    if (quotient < 0 && Rational(fl) != quotient) {
        fl -= 1;
    }
    return x - Rational(fl) * r;
}

auto parse_rational(const std::string& text) -> Rational {
    const auto slash = text.find('/');
    try {
        std::size_t used = 0;
        if (slash == std::string::npos) {
            const auto a = std::stoll(text, &used);
            if (used != text.size()) {
                throw Error(Errc::parse, "bad rational: " + text);
            }
            return Rational(a);
        }
        const auto num_text = text.substr(0, slash);
        const auto den_text = text.substr(slash + 1);
        const auto a = std::stoll(num_text, &used);
        if (used != num_text.size()) {
            throw Error(Errc::parse, "bad rational: " + text);
        }
        const auto b = std::stoll(den_text, &used);
        if (used != den_text.size() || b == 0) {
            throw Error(Errc::parse, "bad rational: " + text);
        }
        return Rational(a, b);
    } catch (const std::logic_error&) {
        throw Error(Errc::parse, "bad rational: " + text);
    }
}

} // namespace sgc
