#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sgc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// A circumference r = p/q >= 2 with the smallest even numerator.
class EvenRational {
  public:
    EvenRational() = default;

    static auto normalize(std::int64_t p, std::int64_t q) -> EvenRational;

    auto p() const noexcept -> std::int64_t { return p_; }
    auto q() const noexcept -> std::int64_t { return q_; }
    auto value() const -> Rational;
    // "a/b" in lowest terms, followed by " (p/q)" when the even form differs.
    auto str() const -> std::string;

    friend auto operator==(const EvenRational& a, const EvenRational& b) noexcept -> bool {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend auto operator<=>(const EvenRational& a, const EvenRational& b) noexcept
        -> std::strong_ordering;

  private:
    EvenRational(std::int64_t p, std::int64_t q) : p_(p), q_(q) {}
    std::int64_t p_ = 2;
    std::int64_t q_ = 1;
};

auto normalize_even(std::int64_t p, std::int64_t q) -> EvenRational;

// Even normal form of an arbitrary rational >= 2.
auto normalize_even(const Rational& r) -> EvenRational;

auto circ_dist(std::int64_t i, std::int64_t j, std::int64_t p) -> std::int64_t;
auto antipode(std::int64_t i, std::int64_t p) -> std::int64_t;

// Every distinct value p/q with even p <= 2n inside [lo, hi], ascending.
auto candidates(int n, const EvenRational& lo, const EvenRational& hi) -> std::vector<EvenRational>;

// Display form shared by reports: lowest terms plus the even form when different.
auto format_rational(const Rational& r) -> std::string;
auto format_lowest(const Rational& r) -> std::string;

// x reduced into [0, r).
auto mod_circle(const Rational& x, const Rational& r) -> Rational;

// Parses "a/b" or "a".
auto parse_rational(const std::string& text) -> Rational;

} // namespace sgc
