/*
   Copyright 2026 the subquad authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef SUBQUAD_FIELD_HPP
#define SUBQUAD_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>

#include "subquad/errors.hpp"

namespace subquad {

inline constexpr std::uint32_t kDefaultGenericityFloor = 32003;

inline bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

/// Runtime description of the coefficient field: F_p or Q.
struct FieldConfig {
    enum class Kind { prime, rationals };
    Kind kind = Kind::prime;
    std::uint32_t p = kDefaultGenericityFloor;
    std::uint32_t genericity_floor = kDefaultGenericityFloor;

    static FieldConfig prime(std::uint32_t p,
                             std::uint32_t floor = kDefaultGenericityFloor) {
        if (!is_prime_u32(p))
            throw MismatchError("field modulus " + std::to_string(p) + " is not prime");
        FieldConfig c;
        c.kind = Kind::prime;
        c.p = p;
        c.genericity_floor = floor;
        return c;
    }

    static FieldConfig rationals(std::uint32_t floor = kDefaultGenericityFloor) {
        FieldConfig c;
        c.kind = Kind::rationals;
        c.p = 0;
        c.genericity_floor = floor;
        return c;
    }

    // Whether random-with-verification choices are trustworthy over this field.
    bool large_enough_for_genericity() const {
        return kind == Kind::rationals || p >= genericity_floor;
    }
};

/// Element of a prime field F_p. The modulus travels with the value so that
/// cross-field arithmetic is detected instead of silently wrong.
class Zp {
public:
    Zp() : v_(0), p_(0) {}
    Zp(std::int64_t v, std::uint32_t p) : p_(p) {
        if (p < 2) throw MismatchError("Zp modulus must be >= 2");
        std::int64_t r = v % static_cast<std::int64_t>(p);
        if (r < 0) r += p;
        v_ = static_cast<std::uint32_t>(r);
    }

    std::uint32_t value() const { return v_; }
    std::uint32_t modulus() const { return p_; }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }

    Zp operator-() const { return raw(v_ == 0 ? 0 : p_ - v_, p_); }

    Zp operator+(const Zp& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + o.v_;
        if (s >= p_) s -= p_;
        return raw(static_cast<std::uint32_t>(s), p_);
    }
    Zp operator-(const Zp& o) const {
        check(o);
        std::uint64_t s = std::uint64_t(v_) + p_ - o.v_;
        if (s >= p_) s -= p_;
        return raw(static_cast<std::uint32_t>(s), p_);
    }
    Zp operator*(const Zp& o) const {
        check(o);
        return raw(static_cast<std::uint32_t>((std::uint64_t(v_) * o.v_) % p_), p_);
    }
    Zp inv() const {
        if (v_ == 0) throw MismatchError("division by zero in F_p");
        // extended Euclid
        std::int64_t t = 0, nt = 1, r = p_, nr = v_;
        while (nr != 0) {
            std::int64_t q = r / nr;
            std::int64_t tmp = t - q * nt;
            t = nt;
            nt = tmp;
            tmp = r - q * nr;
            r = nr;
            nr = tmp;
        }
        if (t < 0) t += p_;
        return raw(static_cast<std::uint32_t>(t), p_);
    }
    Zp operator/(const Zp& o) const { return *this * o.inv(); }

    Zp& operator+=(const Zp& o) { return *this = *this + o; }
    Zp& operator-=(const Zp& o) { return *this = *this - o; }
    Zp& operator*=(const Zp& o) { return *this = *this * o; }

    bool operator==(const Zp& o) const { return v_ == o.v_ && p_ == o.p_; }
    bool operator!=(const Zp& o) const { return !(*this == o); }

    std::string str() const { return std::to_string(v_); }

private:
    static Zp raw(std::uint32_t v, std::uint32_t p) {
        Zp z;
        z.v_ = v;
        z.p_ = p;
        return z;
    }
    void check(const Zp& o) const {
        if (p_ != o.p_) throw MismatchError("arithmetic across different prime fields");
    }
    std::uint32_t v_;
    std::uint32_t p_;
};

/// Exact rational coefficient; a thin veneer over GMP's mpq_class.
class Rat {
public:
    Rat() : q_(0) {}
    explicit Rat(std::int64_t n) : q_(static_cast<long>(n)) {}
    Rat(std::int64_t n, std::int64_t d) : q_(static_cast<long>(n), static_cast<long>(d)) {
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    const mpq_class& value() const { return q_; }

    bool is_zero() const { return q_ == 0; }
    bool is_one() const { return q_ == 1; }

    Rat operator-() const { return Rat(mpq_class(-q_)); }
    Rat operator+(const Rat& o) const { return Rat(mpq_class(q_ + o.q_)); }
    Rat operator-(const Rat& o) const { return Rat(mpq_class(q_ - o.q_)); }
    Rat operator*(const Rat& o) const { return Rat(mpq_class(q_ * o.q_)); }
    Rat inv() const {
        if (is_zero()) throw MismatchError("division by zero in Q");
        return Rat(mpq_class(1 / q_));
    }
    Rat operator/(const Rat& o) const { return *this * o.inv(); }

    Rat& operator+=(const Rat& o) { return *this = *this + o; }
    Rat& operator-=(const Rat& o) { return *this = *this - o; }
    Rat& operator*=(const Rat& o) { return *this = *this * o; }

    bool operator==(const Rat& o) const { return q_ == o.q_; }
    bool operator!=(const Rat& o) const { return q_ != o.q_; }

    std::string str() const { return q_.get_str(); }

private:
    mpq_class q_;
};

template <typename K>
K zero_like(const K& a);
template <typename K>
K one_like(const K& a);
template <typename K>
K scalar_from_int(std::int64_t n, const FieldConfig& field);

inline Zp zero_like(const Zp& a) { return Zp(0, a.modulus()); }
inline Zp one_like(const Zp& a) { return Zp(1, a.modulus()); }
inline Rat zero_like(const Rat&) { return Rat(); }
inline Rat one_like(const Rat&) { return Rat(1); }

template <>
inline Zp scalar_from_int<Zp>(std::int64_t n, const FieldConfig& field) {
    return Zp(n, field.p);
}
template <>
inline Rat scalar_from_int<Rat>(std::int64_t n, const FieldConfig&) {
    return Rat(n);
}

}  // namespace subquad

#endif
