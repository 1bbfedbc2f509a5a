#pragma once

#include <gmpxx.h>

#include <cmath>
#include <concepts>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>

#include "pgon/error.hpp"

namespace pgon {

using Rational = mpq_class;

inline constexpr double kDefaultTolerance = 1e-9;

// Element of GF(p).  A modulus of 0 marks an integer literal that adopts
// the modulus of whatever it is combined with, so identities and constants
// can be built before a field is known.
class Gf {
public:
    Gf() = default;
    Gf(std::int64_t v) : v_(v) {}
    Gf(std::int64_t v, std::uint64_t p) : v_(v), p_(p) { reduce(); }

    std::uint64_t modulus() const { return p_; }
    std::int64_t value() const { return v_; }

    Gf& operator+=(const Gf& o) {
        adopt(o);
        if (p_ == 0) {
            v_ += o.v_;
        } else {
            v_ = static_cast<std::int64_t>(
                (static_cast<unsigned __int128>(v_) + lift(o)) % p_);
        }
        return *this;
    }
    Gf& operator-=(const Gf& o) { return *this += -o; }
    Gf& operator*=(const Gf& o) {
        adopt(o);
        if (p_ == 0) {
            v_ *= o.v_;
        } else {
            v_ = static_cast<std::int64_t>(
                (static_cast<unsigned __int128>(v_) * lift(o)) % p_);
        }
        return *this;
    }
    Gf& operator/=(const Gf& o) {
        adopt(o);
        return *this *= o.inverse(p_);
    }
    Gf operator-() const {
        if (p_ == 0) return Gf(-v_);
        return Gf(v_ == 0 ? 0 : static_cast<std::int64_t>(p_) - v_, p_);
    }

    friend Gf operator+(Gf a, const Gf& b) { return a += b; }
    friend Gf operator-(Gf a, const Gf& b) { return a -= b; }
    friend Gf operator*(Gf a, const Gf& b) { return a *= b; }
    friend Gf operator/(Gf a, const Gf& b) { return a /= b; }

    friend bool operator==(const Gf& a, const Gf& b) {
        std::uint64_t p = a.p_ ? a.p_ : b.p_;
        if (a.p_ && b.p_ && a.p_ != b.p_) return false;
        if (p == 0) return a.v_ == b.v_;
        return a.lift_to(p) == b.lift_to(p);
    }

    bool is_zero() const { return p_ ? v_ == 0 : v_ == 0; }

    Gf inverse(std::uint64_t p) const {
        if (p == 0) {
            if (v_ == 1 || v_ == -1) return Gf(v_);
            throw DomainError("inverse of an integer literal needs a modulus");
        }
        std::uint64_t a = lift_to(p);
        if (a == 0) throw SingularError("division by zero in GF(" + std::to_string(p) + ")");
        // Fermat: a^(p-2)
        std::uint64_t e = p - 2, r = 1, b = a;
        while (e) {
            if (e & 1) r = static_cast<std::uint64_t>((static_cast<unsigned __int128>(r) * b) % p);
            b = static_cast<std::uint64_t>((static_cast<unsigned __int128>(b) * b) % p);
            e >>= 1;
        }
        return Gf(static_cast<std::int64_t>(r), p);
    }

private:
    void reduce() {
        if (p_ == 0) return;
        std::int64_t m = static_cast<std::int64_t>(p_);
        v_ %= m;
        if (v_ < 0) v_ += m;
    }
    void adopt(const Gf& o) {
        if (o.p_ == 0) return;
        if (p_ == 0) {
            p_ = o.p_;
            reduce();
        } else if (p_ != o.p_) {
            throw DomainError("mixed moduli " + std::to_string(p_) + " and " + std::to_string(o.p_));
        }
    }
    std::uint64_t lift_to(std::uint64_t p) const {
        std::int64_t m = static_cast<std::int64_t>(p);
        std::int64_t r = v_ % m;
        return static_cast<std::uint64_t>(r < 0 ? r + m : r);
    }
    std::uint64_t lift(const Gf& o) const { return o.lift_to(p_); }

    std::int64_t v_ = 0;
    std::uint64_t p_ = 0;
};

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t q = 2; q * q <= p; ++q) {
        if (p % q == 0) return false;
    }
    return true;
}

// How scalars are read and written.  Parsing needs the modulus for GF(p).
struct ScalarContext {
    enum class Kind { rational, gfp, f64 };
    Kind kind = Kind::rational;
    std::uint64_t modulus = 0;

    static ScalarContext parse(std::string_view tag) {
        if (tag == "rational") return {Kind::rational, 0};
        if (tag == "f64") return {Kind::f64, 0};
        if (tag.substr(0, 4) == "gfp:") {
            std::uint64_t p = 0;
            try {
                p = std::stoull(std::string(tag.substr(4)));
            } catch (const std::exception&) {
                throw ConfigError("bad modulus in scalar tag '" + std::string(tag) + "'");
            }
            if (p >= (1ULL << 32) || !is_prime(p)) {
                throw ConfigError("modulus " + std::to_string(p) + " is not a prime below 2^32");
            }
            return {Kind::gfp, p};
        }
        throw ConfigError("unknown scalar ring '" + std::string(tag) + "'");
    }

    std::string tag() const {
        switch (kind) {
        case Kind::rational: return "rational";
        case Kind::f64: return "f64";
        case Kind::gfp: return "gfp:" + std::to_string(modulus);
        }
        return "rational";
    }
};

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static Rational from_int(long long v) { return Rational(static_cast<long>(v)); }
    static bool is_zero(const Rational& v, double = 0) { return sgn(v) == 0; }
    static double magnitude(const Rational& v) { return std::abs(v.get_d()); }
    static std::string to_string(const Rational& v) { return v.get_str(); }
    static Rational parse(std::string_view s, const ScalarContext& = {}) {
        Rational r;
        if (r.set_str(std::string(s), 10) != 0) {
            throw ShapeError("bad rational literal '" + std::string(s) + "'");
        }
        r.canonicalize();
        if (r.get_den() == 0) throw ShapeError("zero denominator in '" + std::string(s) + "'");
        return r;
    }
    static Rational inverse(const Rational& v) {
        if (sgn(v) == 0) throw SingularError("division by zero");
        return 1 / v;
    }
};

template <>
struct scalar_traits<Gf> {
    static constexpr bool exact = true;
    static Gf from_int(long long v) { return Gf(v); }
    static bool is_zero(const Gf& v, double = 0) { return v.is_zero(); }
    static double magnitude(const Gf& v) { return v.is_zero() ? 0.0 : 1.0; }
    static std::string to_string(const Gf& v) { return std::to_string(v.value()); }
    static Gf parse(std::string_view s, const ScalarContext& ctx = {}) {
        std::int64_t v = 0;
        try {
            v = std::stoll(std::string(s));
        } catch (const std::exception&) {
            throw ShapeError("bad field literal '" + std::string(s) + "'");
        }
        return Gf(v, ctx.modulus);
    }
    static Gf inverse(const Gf& v) { return v.inverse(v.modulus()); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static double from_int(long long v) { return static_cast<double>(v); }
    static bool is_zero(double v, double tol = 0) { return std::abs(v) <= tol; }
    static double magnitude(double v) { return std::abs(v); }
    static std::string to_string(double v) {
        std::ostringstream os;
        os.precision(17);
        os << v;
        return os.str();
    }
    static double parse(std::string_view s, const ScalarContext& = {}) {
        std::string str(s);
        auto slash = str.find('/');
        try {
            if (slash != std::string::npos) {
                return std::stod(str.substr(0, slash)) / std::stod(str.substr(slash + 1));
            }
            return std::stod(str);
        } catch (const std::exception&) {
            throw ShapeError("bad float literal '" + str + "'");
        }
    }
    static double inverse(double v) {
        if (v == 0) throw SingularError("division by zero");
        return 1 / v;
    }
};

template <class S>
concept Scalar = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { scalar_traits<S>::from_int(1) } -> std::convertible_to<S>;
    { scalar_traits<S>::to_string(a) } -> std::convertible_to<std::string>;
};

template <Scalar S>
S zero() { return scalar_traits<S>::from_int(0); }

template <Scalar S>
S one() { return scalar_traits<S>::from_int(1); }

template <Scalar S>
bool scalar_equal(const S& a, const S& b, double tol = kDefaultTolerance) {
    if constexpr (scalar_traits<S>::exact) {
        return a == b;
    } else {
        return std::abs(a - b) <= tol;
    }
}

template <Scalar S>
ScalarContext context_of(const S& sample) {
    if constexpr (std::same_as<S, Rational>) {
        return {ScalarContext::Kind::rational, 0};
    } else if constexpr (std::same_as<S, Gf>) {
        return {ScalarContext::Kind::gfp, sample.modulus()};
    } else {
        return {ScalarContext::Kind::f64, 0};
    }
}

}  // namespace pgon
