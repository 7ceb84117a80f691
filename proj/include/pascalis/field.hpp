/*
   Copyright 2026 The pascalis authors

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

/// Exact coefficient arithmetic: arbitrary-precision rationals (GMP) and
/// prime fields GF(p). Every value is immutable and carries its field, so
/// cross-field mixups fail loudly instead of silently coercing.

#ifndef PASCALIS_FIELD_HPP
#define PASCALIS_FIELD_HPP

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <utility>

#include "pascalis/errors.hpp"

namespace pascalis {

enum class FieldKind { rationals, prime_field };

class FieldSpec {
   public:
    static FieldSpec rationals() noexcept { return FieldSpec(FieldKind::rationals, 0); }

    static FieldSpec prime_field(std::uint64_t p) {
        if (p > max_modulus)
            throw error(errc::unsupported, "modulus exceeds " + std::to_string(max_modulus));
        if (!is_prime(p))
            throw error(errc::non_prime_modulus, std::to_string(p) + " is not prime");
        return FieldSpec(FieldKind::prime_field, p);
    }

    /// Trial-division primality is the constructor's check; keep p small enough for it.
    static constexpr std::uint64_t max_modulus = (1ull << 31) - 1;

    FieldKind kind() const noexcept { return kind_; }
    std::uint64_t modulus() const noexcept { return p_; }
    std::uint64_t characteristic() const noexcept {
        return kind_ == FieldKind::rationals ? 0 : p_;
    }

    bool operator==(const FieldSpec&) const = default;

    std::string name() const {
        return kind_ == FieldKind::rationals ? "Q" : "GF(" + std::to_string(p_) + ")";
    }

    static bool is_prime(std::uint64_t p) noexcept {
        if (p < 2) return false;
        if (p % 2 == 0) return p == 2;
        for (std::uint64_t q = 3; q <= p / q; q += 2)
            if (p % q == 0) return false;
        return true;
    }

   private:
    FieldSpec(FieldKind kind, std::uint64_t p) : kind_(kind), p_(p) {}

    FieldKind kind_;
    std::uint64_t p_;
};

/// An exact field element: a reduced fraction over Q, or a residue in [0, p).
class Coefficient {
   public:
    static Coefficient zero(const FieldSpec& spec) { return from_integer(spec, 0); }
    static Coefficient one(const FieldSpec& spec) { return from_integer(spec, 1); }

    static Coefficient from_integer(const FieldSpec& spec, long v) {
        return from_integer(spec, mpz_class(v));
    }

    static Coefficient from_integer(const FieldSpec& spec, const mpz_class& v) {
        if (spec.kind() == FieldKind::rationals) return Coefficient(spec, mpq_class(v));
        mpz_class r = v % static_cast<unsigned long>(spec.modulus());
        if (r < 0) r += static_cast<unsigned long>(spec.modulus());
        return Coefficient(spec, r.get_ui());
    }

    /// num/den mapped into the field; den inverted for GF(p).
    static Coefficient fraction(const FieldSpec& spec, const mpz_class& num,
                                const mpz_class& den) {
        if (den == 0) throw error(errc::zero_denominator, "denominator is zero");
        if (spec.kind() == FieldKind::rationals) {
            mpq_class q(num, den);
            q.canonicalize();
            return Coefficient(spec, std::move(q));
        }
        return from_integer(spec, num) * from_integer(spec, den).inverse();
    }

    const FieldSpec& field() const noexcept { return spec_; }
    bool is_zero() const noexcept {
        return spec_.kind() == FieldKind::rationals ? rat_ == 0 : res_ == 0;
    }
    bool is_one() const noexcept {
        return spec_.kind() == FieldKind::rationals ? rat_ == 1 : res_ == 1;
    }

    /// Rational payload; only meaningful over Q.
    const mpq_class& rational() const noexcept { return rat_; }
    /// Residue payload; only meaningful over GF(p).
    std::uint64_t residue() const noexcept { return res_; }

    Coefficient operator+(const Coefficient& o) const {
        require_same_field(o);
        if (spec_.kind() == FieldKind::rationals) return Coefficient(spec_, rat_ + o.rat_);
        return Coefficient(spec_, add_mod(res_, o.res_, spec_.modulus()));
    }

    Coefficient operator-(const Coefficient& o) const {
        require_same_field(o);
        if (spec_.kind() == FieldKind::rationals) return Coefficient(spec_, rat_ - o.rat_);
        const std::uint64_t p = spec_.modulus();
        return Coefficient(spec_, add_mod(res_, o.res_ == 0 ? 0 : p - o.res_, p));
    }

    Coefficient operator*(const Coefficient& o) const {
        require_same_field(o);
        if (spec_.kind() == FieldKind::rationals) return Coefficient(spec_, rat_ * o.rat_);
        return Coefficient(spec_, mul_mod(res_, o.res_, spec_.modulus()));
    }

    Coefficient operator-() const {
        if (spec_.kind() == FieldKind::rationals) return Coefficient(spec_, -rat_);
        return Coefficient(spec_, res_ == 0 ? 0 : spec_.modulus() - res_);
    }

    Coefficient inverse() const {
        if (is_zero()) throw error(errc::division_by_zero, "inverse of zero");
        if (spec_.kind() == FieldKind::rationals)
            return Coefficient(spec_, mpq_class(1) / rat_);
        return Coefficient(spec_, inv_mod(res_, spec_.modulus()));
    }

    Coefficient& operator+=(const Coefficient& o) { return *this = *this + o; }
    Coefficient& operator-=(const Coefficient& o) { return *this = *this - o; }
    Coefficient& operator*=(const Coefficient& o) { return *this = *this * o; }

    bool operator==(const Coefficient& o) const {
        if (spec_ != o.spec_) return false;
        return spec_.kind() == FieldKind::rationals ? rat_ == o.rat_ : res_ == o.res_;
    }
    bool operator!=(const Coefficient& o) const { return !(*this == o); }

    /// Canonical text: "a", "-a" or "a/b" over Q; the residue over GF(p).
    std::string str() const {
        if (spec_.kind() == FieldKind::prime_field) return std::to_string(res_);
        return rat_.get_str();
    }

   private:
    Coefficient(FieldSpec spec, mpq_class v) : spec_(spec), rat_(std::move(v)), res_(0) {}
    Coefficient(FieldSpec spec, std::uint64_t r) : spec_(spec), res_(r) {}

    void require_same_field(const Coefficient& o) const {
        if (spec_ != o.spec_)
            throw error(errc::mixed_fields, spec_.name() + " vs " + o.spec_.name());
    }

    static std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
        const std::uint64_t s = a + b;  // no wrap: p <= max_modulus < 2^31
        return s >= p ? s - p : s;
    }

    static std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) noexcept {
        return a * b % p;
    }

    static std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
        // extended Euclid on (a, p), p prime
        std::int64_t t = 0, nt = 1;
        std::int64_t r = static_cast<std::int64_t>(p), nr = static_cast<std::int64_t>(a);
        while (nr != 0) {
            const std::int64_t q = r / nr;
            t = std::exchange(nt, t - q * nt);
            r = std::exchange(nr, r - q * nr);
        }
        return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(p) : t);
    }

    FieldSpec spec_ = FieldSpec::rationals();
    mpq_class rat_;
    std::uint64_t res_ = 0;
};

/// C(m, l) over the integers, mapped into the field.
inline Coefficient binomial_in_field(unsigned long m, unsigned long l, const FieldSpec& spec) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), m, l);
    return Coefficient::from_integer(spec, b);
}

}  // namespace pascalis

#endif
