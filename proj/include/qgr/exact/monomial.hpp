#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace qgr {

// Global variable slots. Every polynomial in the library lives in the
// same 16-variable ring; unused slots simply carry exponent 0.
namespace var {
inline constexpr int x1 = 0;
inline constexpr int x2 = 1;
inline constexpr int hbar = 2;
inline constexpr int z = 3;
inline constexpr int alpha0 = 4;  // alpha_1 lives here, alpha_m at alpha0 + m - 1
inline constexpr int max_alpha = 10;
inline constexpr int aux_t = 14;
inline constexpr int aux_w = 15;
inline constexpr int count = 16;

inline int alpha(int m) {
    if (m < 1 || m > max_alpha) throw std::out_of_range("alpha index out of range");
    return alpha0 + m - 1;
}

inline std::string name(int v) {
    switch (v) {
        case x1: return "x1";
        case x2: return "x2";
        case hbar: return "hbar";
        case z: return "z";
        case aux_t: return "t";
        case aux_w: return "w";
        default:
            if (v >= alpha0 && v < alpha0 + max_alpha) return "a" + std::to_string(v - alpha0 + 1);
            throw std::out_of_range("bad variable slot");
    }
}
}  // namespace var

struct Monomial {
    std::array<std::uint8_t, var::count> e{};
    std::uint16_t deg = 0;

    static Monomial of(int v, unsigned power = 1) {
        Monomial m;
        m.set(v, power);
        return m;
    }

    unsigned operator[](int v) const { return e[static_cast<std::size_t>(v)]; }

    void set(int v, unsigned power) {
        if (power > 255) throw std::overflow_error("monomial exponent overflow");
        deg = static_cast<std::uint16_t>(deg - e[static_cast<std::size_t>(v)] + power);
        e[static_cast<std::size_t>(v)] = static_cast<std::uint8_t>(power);
    }

    bool is_one() const { return deg == 0; }

    bool divides(const Monomial& o) const {
        for (int i = 0; i < var::count; ++i)
            if (e[i] > o.e[i]) return false;
        return true;
    }

    friend Monomial operator*(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < var::count; ++i) {
            unsigned s = unsigned(a.e[i]) + b.e[i];
            if (s > 255) throw std::overflow_error("monomial exponent overflow");
            r.e[i] = static_cast<std::uint8_t>(s);
        }
        r.deg = static_cast<std::uint16_t>(a.deg + b.deg);
        return r;
    }

    // caller guarantees b divides a
    friend Monomial operator/(const Monomial& a, const Monomial& b) {
        Monomial r;
        for (int i = 0; i < var::count; ++i) r.e[i] = static_cast<std::uint8_t>(a.e[i] - b.e[i]);
        r.deg = static_cast<std::uint16_t>(a.deg - b.deg);
        return r;
    }

    unsigned degree_in(const std::initializer_list<int>& vars) const {
        unsigned s = 0;
        for (int v : vars) s += e[static_cast<std::size_t>(v)];
        return s;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }

    std::string to_string() const {
        std::string s;
        for (int i = 0; i < var::count; ++i) {
            if (!e[i]) continue;
            if (!s.empty()) s += '*';
            s += var::name(i);
            if (e[i] > 1) s += '^' + std::to_string(e[i]);
        }
        return s.empty() ? "1" : s;
    }
};

// Graded order: higher total degree first, then lexicographic by slot.
struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.deg != b.deg) return a.deg > b.deg;
        return a.e > b.e;
    }
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ull;
        for (auto b : m.e) {
            h ^= b;
            h *= 1099511628211ull;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace qgr
