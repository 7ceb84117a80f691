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

/// Sparse multivariate polynomials over an exact field, with optional
/// degree truncation on every product. Terms are kept in graded-lex
/// descending order with no explicit zeros, so equality is structural and
/// serialized output is deterministic.

#ifndef PASCALIS_POLY_HPP
#define PASCALIS_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "pascalis/errors.hpp"
#include "pascalis/field.hpp"

namespace pascalis {

/// Variable count plus coefficient field; every Poly lives in exactly one.
struct Ambient {
    std::uint32_t vars = 0;
    FieldSpec field = FieldSpec::rationals();
    bool operator==(const Ambient&) const = default;
};

/// Exponent vector of fixed length. Exponents are checked on multiply so
/// degrees up to 2^16 and well beyond cannot wrap silently.
class Monomial {
   public:
    explicit Monomial(std::size_t n) : exp_(n, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exp_(std::move(exps)) {}

    static Monomial unit(std::size_t n, std::size_t i) {
        Monomial m(n);
        m.exp_[i] = 1;
        return m;
    }

    std::size_t size() const noexcept { return exp_.size(); }
    std::uint32_t operator[](std::size_t i) const noexcept { return exp_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exp_; }

    std::uint64_t total_degree() const noexcept {
        std::uint64_t d = 0;
        for (auto e : exp_) d += e;
        return d;
    }

    bool is_constant() const noexcept {
        return std::all_of(exp_.begin(), exp_.end(), [](auto e) { return e == 0; });
    }

    Monomial operator*(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exp_.size(); ++i) {
            const std::uint64_t s = std::uint64_t(r.exp_[i]) + o.exp_[i];
            if (s > max_exponent)
                throw error(errc::exponent_overflow, "exponent exceeds 2^31");
            r.exp_[i] = static_cast<std::uint32_t>(s);
        }
        return r;
    }

    /// Graded-lex: higher total degree first, ties broken by the leftmost
    /// differing exponent (more of X_1 sorts first). Returns <0, 0, >0.
    static int cmp(const Monomial& a, const Monomial& b) noexcept {
        const auto da = a.total_degree(), db = b.total_degree();
        if (da != db) return da < db ? -1 : 1;
        for (std::size_t i = 0; i < a.exp_.size(); ++i)
            if (a.exp_[i] != b.exp_[i]) return a.exp_[i] < b.exp_[i] ? -1 : 1;
        return 0;
    }

    bool operator==(const Monomial&) const = default;

    struct Hash {
        std::size_t operator()(const Monomial& m) const noexcept {
            std::size_t h = 1469598103934665603ull;
            for (auto e : m.exp_) {
                h ^= e;
                h *= 1099511628211ull;
            }
            return h;
        }
    };

    static constexpr std::uint64_t max_exponent = (1ull << 31) - 1;

   private:
    std::vector<std::uint32_t> exp_;
};

/// Degree cap applied to every intermediate product; Unbounded disables it.
struct TruncationBound {
    std::optional<std::uint64_t> max_degree;

    static TruncationBound unbounded() noexcept { return {std::nullopt}; }
    static TruncationBound at(std::uint64_t d) noexcept { return {d}; }

    bool keeps(std::uint64_t degree) const noexcept {
        return !max_degree || degree <= *max_degree;
    }
    bool is_unbounded() const noexcept { return !max_degree; }
    bool operator==(const TruncationBound&) const = default;
};

class Poly {
   public:
    struct Term {
        Monomial mono;
        Coefficient coeff;
    };

    explicit Poly(Ambient ambient) : ambient_(std::move(ambient)) {}

    static Poly zero(const Ambient& a) { return Poly(a); }

    static Poly constant(const Ambient& a, const Coefficient& c) {
        Poly p(a);
        if (!c.is_zero()) p.terms_.push_back({Monomial(a.vars), c});
        return p;
    }

    static Poly constant(const Ambient& a, long v) {
        return constant(a, Coefficient::from_integer(a.field, v));
    }

    static Poly variable(const Ambient& a, std::size_t i) {
        Poly p(a);
        p.terms_.push_back({Monomial::unit(a.vars, i), Coefficient::one(a.field)});
        return p;
    }

    static Poly monomial(const Ambient& a, Monomial m, Coefficient c) {
        Poly p(a);
        if (!c.is_zero()) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    /// Terms must be distinct monomials; normalizes order and drops zeros.
    static Poly from_terms(const Ambient& a, std::vector<Term> terms) {
        Poly p(a);
        p.terms_ = std::move(terms);
        std::erase_if(p.terms_, [](const Term& t) { return t.coeff.is_zero(); });
        std::sort(p.terms_.begin(), p.terms_.end(), [](const Term& x, const Term& y) {
            return Monomial::cmp(x.mono, y.mono) > 0;
        });
        return p;
    }

    const Ambient& ambient() const noexcept { return ambient_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    bool is_constant() const noexcept {
        return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_constant());
    }

    /// The constant term (zero coefficient if absent).
    Coefficient constant_term() const {
        for (const auto& t : terms_)
            if (t.mono.is_constant()) return t.coeff;
        return Coefficient::zero(ambient_.field);
    }

    /// Max total degree; nullopt encodes deg(0) = -inf.
    std::optional<std::uint64_t> degree() const noexcept {
        if (terms_.empty()) return std::nullopt;
        return terms_.front().mono.total_degree();  // grlex-desc: first term is maximal
    }

    /// Min total degree (order of vanishing); nullopt encodes ord(0) = +inf.
    std::optional<std::uint64_t> order() const noexcept {
        if (terms_.empty()) return std::nullopt;
        return terms_.back().mono.total_degree();
    }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.coeff = -t.coeff;
        return r;
    }

    Poly operator+(const Poly& o) const { return merge(o, /*subtract=*/false); }
    Poly operator-(const Poly& o) const { return merge(o, /*subtract=*/true); }

    Poly operator*(const Poly& o) const { return mul(o, TruncationBound::unbounded()); }

    Poly mul(const Poly& o, const TruncationBound& trunc) const {
        require_same_ambient(o);
        if (terms_.empty() || o.terms_.empty()) return Poly(ambient_);
        std::unordered_map<Monomial, Coefficient, Monomial::Hash> acc;
        acc.reserve(terms_.size() * std::min<std::size_t>(o.terms_.size(), 16));
        for (const auto& ta : terms_) {
            const std::uint64_t da = ta.mono.total_degree();
            for (const auto& tb : o.terms_) {
                if (!trunc.keeps(da + tb.mono.total_degree())) continue;
                Monomial m = ta.mono * tb.mono;
                Coefficient c = ta.coeff * tb.coeff;
                auto [it, fresh] = acc.try_emplace(std::move(m), c);
                if (!fresh) {
                    it->second += c;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        return from_accumulator(ambient_, std::move(acc));
    }

    Poly scale(const Coefficient& c) const {
        if (c.is_zero()) return Poly(ambient_);
        Poly r(*this);
        for (auto& t : r.terms_) t.coeff *= c;
        return r;
    }

    /// Drops terms above the bound.
    Poly truncated(const TruncationBound& trunc) const {
        if (trunc.is_unbounded()) return *this;
        Poly r(ambient_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_)
            if (trunc.keeps(t.mono.total_degree())) r.terms_.push_back(t);
        return r;
    }

    /// Sum of the terms of total degree exactly d.
    Poly homogeneous_component(std::uint64_t d) const {
        Poly r(ambient_);
        for (const auto& t : terms_)
            if (t.mono.total_degree() == d) r.terms_.push_back(t);
        return r;
    }

    /// All total degrees present, ascending.
    std::vector<std::uint64_t> support_degrees() const {
        std::vector<std::uint64_t> ds;
        for (const auto& t : terms_) ds.push_back(t.mono.total_degree());
        std::sort(ds.begin(), ds.end());
        ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
        return ds;
    }

    bool is_homogeneous() const noexcept {
        return terms_.empty() ||
               terms_.front().mono.total_degree() == terms_.back().mono.total_degree();
    }

    /// Formal partial derivative with respect to variable j; exponent
    /// multiples land in the field, so over GF(p) multiples of p vanish.
    Poly derivative(std::size_t j) const {
        Poly r(ambient_);
        for (const auto& t : terms_) {
            const std::uint32_t e = t.mono[j];
            if (e == 0) continue;
            Coefficient c = t.coeff * Coefficient::from_integer(ambient_.field, long(e));
            if (c.is_zero()) continue;
            auto exps = t.mono.exponents();
            exps[j] -= 1;
            r.terms_.push_back({Monomial(std::move(exps)), std::move(c)});
        }
        // decrementing one exponent everywhere preserves grlex order
        return r;
    }

    /// p(images): every X_i replaced by images[i]. The result lives in the
    /// images' ambient, which may differ from this poly's (fresh-variable
    /// substitution); only the count must match. All intermediate products
    /// are truncated, which is exact for the degree-<=N part whenever every
    /// image has order >= 1.
    Poly substitute(std::span<const Poly> images, const TruncationBound& trunc) const {
        if (images.size() != ambient_.vars)
            throw error(errc::arity_mismatch,
                        std::to_string(images.size()) + " images for " +
                            std::to_string(ambient_.vars) + " variables");
        Ambient out = images.empty() ? ambient_ : images[0].ambient();
        if (ambient_.vars == 0) out = ambient_;
        for (const auto& img : images)
            if (!(img.ambient() == out)) throw error(errc::ambient_mismatch, "images disagree");
        if (!(out.field == ambient_.field))
            throw error(errc::ambient_mismatch, "image field differs from polynomial field");

        // per-variable power cache: square-and-multiply, memoized by exponent
        std::vector<std::map<std::uint32_t, Poly>> pows(images.size());
        std::vector<std::optional<std::uint64_t>> img_order(images.size());
        for (std::size_t i = 0; i < images.size(); ++i) img_order[i] = images[i].order();

        std::unordered_map<Monomial, Coefficient, Monomial::Hash> acc;
        for (const auto& t : terms_) {
            // a zero image annihilates the term; otherwise the term's order
            // lower bound may already exceed the cut
            bool dead = false;
            std::uint64_t order_lb = 0;
            for (std::size_t i = 0; i < images.size() && !dead; ++i) {
                const std::uint32_t e = t.mono[i];
                if (e == 0) continue;
                if (!img_order[i]) {
                    dead = true;
                    break;
                }
                order_lb += std::uint64_t(e) * *img_order[i];
            }
            if (dead || !trunc.keeps(order_lb)) continue;

            Poly term = Poly::constant(out, t.coeff);
            for (std::size_t i = 0; i < images.size() && !term.is_zero(); ++i) {
                const std::uint32_t e = t.mono[i];
                if (e == 0) continue;
                term = term.mul(power(images[i], e, trunc, pows[i]), trunc);
            }
            for (auto& tt : term.terms_) {
                auto [it, fresh] = acc.try_emplace(tt.mono, tt.coeff);
                if (!fresh) {
                    it->second += tt.coeff;
                    if (it->second.is_zero()) acc.erase(it);
                }
            }
        }
        return from_accumulator(out, std::move(acc));
    }

    Poly substitute(const std::vector<Poly>& images, const TruncationBound& trunc) const {
        return substitute(std::span<const Poly>(images), trunc);
    }

    /// Value of the polynomial at a point.
    Coefficient evaluate(std::span<const Coefficient> point) const {
        if (point.size() != ambient_.vars)
            throw error(errc::arity_mismatch, "point arity differs from variable count");
        Coefficient acc = Coefficient::zero(ambient_.field);
        for (const auto& t : terms_) {
            Coefficient v = t.coeff;
            for (std::size_t i = 0; i < point.size(); ++i)
                for (std::uint32_t k = 0; k < t.mono[i]; ++k) v *= point[i];
            acc += v;
        }
        return acc;
    }

    /// Exact quotient *this / divisor, or nullopt if the division leaves a
    /// remainder. Single-divisor reduction by leading terms; exact division
    /// over a field's polynomial ring always succeeds this way.
    std::optional<Poly> div_exact(const Poly& divisor) const {
        require_same_ambient(divisor);
        if (divisor.is_zero()) throw error(errc::division_by_zero, "polynomial division by zero");
        Poly rem(*this);
        std::vector<Term> quot;
        const Term& lead = divisor.terms_.front();
        while (!rem.is_zero()) {
            const Term& rl = rem.terms_.front();
            auto q = exponent_quotient(rl.mono, lead.mono);
            if (!q) return std::nullopt;
            Coefficient qc = rl.coeff * lead.coeff.inverse();
            Poly qterm = Poly::monomial(ambient_, std::move(*q), qc);
            quot.push_back(qterm.terms_.front());
            rem = rem - divisor.mul(qterm, TruncationBound::unbounded());
        }
        return from_terms(ambient_, std::move(quot));
    }

    bool operator==(const Poly& o) const {
        if (!(ambient_ == o.ambient_) || terms_.size() != o.terms_.size()) return false;
        for (std::size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == o.terms_[i].mono) || terms_[i].coeff != o.terms_[i].coeff)
                return false;
        return true;
    }
    bool operator!=(const Poly& o) const { return !(*this == o); }

   private:
    void require_same_ambient(const Poly& o) const {
        if (!(ambient_ == o.ambient_))
            throw error(errc::ambient_mismatch, "polynomials live in different rings");
    }

    Poly merge(const Poly& o, bool subtract) const {
        require_same_ambient(o);
        Poly r(ambient_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        std::size_t i = 0, j = 0;
        while (i < terms_.size() && j < o.terms_.size()) {
            const int c = Monomial::cmp(terms_[i].mono, o.terms_[j].mono);
            if (c > 0) {
                r.terms_.push_back(terms_[i++]);
            } else if (c < 0) {
                const auto& t = o.terms_[j++];
                r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
            } else {
                Coefficient s =
                    subtract ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
                if (!s.is_zero()) r.terms_.push_back({terms_[i].mono, std::move(s)});
                ++i, ++j;
            }
        }
        for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
        for (; j < o.terms_.size(); ++j) {
            const auto& t = o.terms_[j];
            r.terms_.push_back({t.mono, subtract ? -t.coeff : t.coeff});
        }
        return r;
    }

    static Poly from_accumulator(const Ambient& a,
                                 std::unordered_map<Monomial, Coefficient, Monomial::Hash> acc) {
        Poly r(a);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc) r.terms_.push_back({m, std::move(c)});
        std::sort(r.terms_.begin(), r.terms_.end(), [](const Term& x, const Term& y) {
            return Monomial::cmp(x.mono, y.mono) > 0;
        });
        return r;
    }

    static Poly power(const Poly& base, std::uint32_t e, const TruncationBound& trunc,
                      std::map<std::uint32_t, Poly>& memo) {
        if (e == 0) return Poly::constant(base.ambient(), 1);
        if (e == 1) return base;
        if (auto it = memo.find(e); it != memo.end()) return it->second;
        Poly half = power(base, e / 2, trunc, memo);
        Poly r = half.mul(half, trunc);
        if (e % 2) r = r.mul(base, trunc);
        return memo.emplace(e, std::move(r)).first->second;
    }

    static std::optional<Monomial> exponent_quotient(const Monomial& num, const Monomial& den) {
        std::vector<std::uint32_t> exps(num.size());
        for (std::size_t i = 0; i < num.size(); ++i) {
            if (num[i] < den[i]) return std::nullopt;
            exps[i] = num[i] - den[i];
        }
        return Monomial(std::move(exps));
    }

    Ambient ambient_;
    std::vector<Term> terms_;
};

}  // namespace pascalis

#endif
