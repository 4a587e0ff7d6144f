#pragma once

#include <array>
#include <cstdint>

namespace sgc::detail {

// Color sets over {0..p-1} packed into W words.
template <int W>
struct Bits {
    std::array<std::uint64_t, W> w{};

    static auto full(int p) -> Bits {
        Bits b;
        for (int i = 0; i < W; ++i) {
            const int lo = 64 * i;
            if (p >= lo + 64) {
                b.w[i] = ~std::uint64_t{0};
            } else if (p > lo) {
                b.w[i] = (std::uint64_t{1} << (p - lo)) - 1;
            }
        }
        return b;
    }

    static auto single(int c) -> Bits {
        Bits b;
        b.w[c / 64] = std::uint64_t{1} << (c % 64);
        return b;
    }

    // Colors lo..hi inclusive, 0 <= lo <= hi < p.
    static auto range(int lo, int hi) -> Bits {
        Bits b;
        for (int c = lo; c <= hi; ++c) {
            b.set(c);
        }
        return b;
    }

    void set(int c) { w[c / 64] |= std::uint64_t{1} << (c % 64); }
    auto test(int c) const -> bool { return (w[c / 64] >> (c % 64)) & 1U; }

    auto none() const -> bool {
        for (const auto x : w) {
            if (x) {
                return false;
            }
        }
        return true;
    }

    auto count() const -> int {
        int n = 0;
        for (const auto x : w) {
            n += __builtin_popcountll(x);
        }
        return n;
    }

    auto lowest() const -> int {
        for (int i = 0; i < W; ++i) {
            if (w[i]) {
                return 64 * i + __builtin_ctzll(w[i]);
            }
        }
        return -1;
    }

    // Next set bit strictly after c, or -1.
    auto next(int c) const -> int {
        ++c;
        int i = c / 64;
        if (i >= W) {
            return -1;
        }
        std::uint64_t x = w[i] & (~std::uint64_t{0} << (c % 64));
        while (true) {
            if (x) {
                return 64 * i + __builtin_ctzll(x);
            }
            if (++i >= W) {
                return -1;
            }
            x = w[i];
        }
    }

    auto subset_of(const Bits& o) const -> bool {
        for (int i = 0; i < W; ++i) {
            if (w[i] & ~o.w[i]) {
                return false;
            }
        }
        return true;
    }

    auto operator&=(const Bits& o) -> Bits& {
        for (int i = 0; i < W; ++i) {
            w[i] &= o.w[i];
        }
        return *this;
    }
    auto operator|=(const Bits& o) -> Bits& {
        for (int i = 0; i < W; ++i) {
            w[i] |= o.w[i];
        }
        return *this;
    }
    friend auto operator&(Bits a, const Bits& b) -> Bits { return a &= b; }
    friend auto operator==(const Bits&, const Bits&) -> bool = default;

    auto shl(int s) const -> Bits {
        Bits r;
        const int ws = s / 64;
        const int bs = s % 64;
        for (int i = W - 1; i >= ws; --i) {
            std::uint64_t x = w[i - ws] << bs;
            if (bs && i - ws - 1 >= 0) {
                x |= w[i - ws - 1] >> (64 - bs);
            }
            r.w[i] = x;
        }
        return r;
    }

    auto shr(int s) const -> Bits {
        Bits r;
        const int ws = s / 64;
        const int bs = s % 64;
        for (int i = 0; i + ws < W; ++i) {
            std::uint64_t x = w[i + ws] >> bs;
            if (bs && i + ws + 1 < W) {
                x |= w[i + ws + 1] << (64 - bs);
            }
            r.w[i] = x;
        }
        return r;
    }

    // Cyclic shift within p bits: color c moves to (c + s) mod p.
    auto rotl(int s, int p, const Bits& mask) const -> Bits {
        if (s == 0) {
            return *this;
        }
        Bits r = shl(s);
        r |= shr(p - s);
        return r &= mask;
    }
};

} // namespace sgc::detail
