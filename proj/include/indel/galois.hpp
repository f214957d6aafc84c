// Copyright 2026 The indel-codes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace indel {

// A field element is its canonical index in [0, q): the base-p packed
// coefficient vector of its residue polynomial, constant term in the least
// significant digit. Indices serialize as plain decimal integers everywhere.
using Symbol = std::uint32_t;

namespace detail {

inline bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// Polynomials over F_p as digit vectors, low coefficient first.
inline std::vector<std::uint32_t> unpack_poly(std::uint64_t packed, std::uint32_t p) {
    std::vector<std::uint32_t> digits;
    while (packed) {
        digits.push_back(static_cast<std::uint32_t>(packed % p));
        packed /= p;
    }
    return digits;
}

// Remainder of a mod b, b monic. Both low-first, b nonempty.
inline std::vector<std::uint32_t> poly_rem_monic(std::vector<std::uint32_t> a,
                                                 const std::vector<std::uint32_t>& b,
                                                 std::uint32_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        const std::uint32_t lead = a.back();
        if (lead != 0) {
            const std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i < db; ++i) {
                const std::uint64_t sub = static_cast<std::uint64_t>(lead) * b[i] % p;
                a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

// Exhaustive trial division: a composite monic polynomial of degree m has a
// monic divisor of degree in [1, m/2].
inline bool poly_is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t low = 0; low < count; ++low) {
            std::vector<std::uint32_t> g = unpack_poly(low, p);
            g.resize(d + 1, 0);
            g[d] = 1;
            if (poly_rem_monic(f, g, p).empty()) return false;
        }
    }
    return true;
}

}  // namespace detail

// Arithmetic context for F_q with q = p^m, p prime, m >= 1, q <= 2^20.
// Immutable after construction; all operations are pure.
//
// The default modulus is pinned per (p, m): the lexicographically smallest
// monic irreducible polynomial of degree m over F_p, candidates ordered by
// their base-p packed non-leading coefficients. For (2, 8) this yields the
// AES polynomial x^8 + x^4 + x^3 + x + 1 (0x11b); for m = 1 it yields x.
// Pinning the modulus keeps serialized codewords portable.
class Field {
public:
    static constexpr std::uint64_t max_order = std::uint64_t{1} << 20;

    Field(std::uint32_t p, std::uint32_t m) : Field(p, m, default_modulus(p, m)) {}

    Field(std::uint32_t p, std::uint32_t m, std::uint64_t modulus) : p_(p), m_(m) {
        if (!detail::is_prime(p_)) throw std::invalid_argument("field characteristic " + std::to_string(p_) + " is not prime");
        if (m_ < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            q *= p_;
            if (q > max_order) throw std::invalid_argument("field order exceeds 2^20 cap");
        }
        q_ = static_cast<std::uint32_t>(q);
        if (modulus < q || modulus >= 2 * q) throw std::invalid_argument("modulus is not a monic polynomial of degree m");
        modulus_ = modulus;
        mod_digits_ = detail::unpack_poly(modulus, p_);
        if (!detail::poly_is_irreducible(mod_digits_, p_)) throw std::invalid_argument("modulus is reducible over F_p");
        if (q_ <= (std::uint32_t{1} << 16) && m_ > 1) build_tables();
    }

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    std::uint64_t modulus() const { return modulus_; }

    bool operator==(const Field& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    Symbol add(Symbol a, Symbol b) const {
        check(a);
        check(b);
        if (p_ == 2) return a ^ b;
        if (m_ == 1) {
            const std::uint32_t s = a + b;
            return s >= q_ ? s - q_ : s;
        }
        Symbol r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            std::uint32_t s = a % p_ + b % p_;
            if (s >= p_) s -= p_;
            r += s * scale;
            a /= p_;
            b /= p_;
            scale *= p_;
        }
        return r;
    }

    Symbol neg(Symbol a) const {
        check(a);
        if (p_ == 2) return a;
        if (m_ == 1) return a == 0 ? 0 : q_ - a;
        Symbol r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            const std::uint32_t d = a % p_;
            r += (d == 0 ? 0 : p_ - d) * scale;
            a /= p_;
            scale *= p_;
        }
        return r;
    }

    Symbol sub(Symbol a, Symbol b) const { return add(a, neg(b)); }

    Symbol mul(Symbol a, Symbol b) const {
        check(a);
        check(b);
        if (!exp_.empty()) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_raw(a, b);
    }

    Symbol inv(Symbol a) const {
        check(a);
        if (a == 0) throw std::domain_error("division by zero in F_" + std::to_string(q_));
        if (!exp_.empty()) return exp_[q_ - 1 - log_[a]];
        return pow(a, q_ - 2);
    }

    Symbol div(Symbol a, Symbol b) const { return mul(a, inv(b)); }

    Symbol pow(Symbol a, std::uint64_t e) const {
        check(a);
        Symbol r = 1;
        Symbol base = a;
        while (e) {
            if (e & 1) r = mul_unchecked(r, base);
            base = mul_unchecked(base, base);
            e >>= 1;
        }
        return r;
    }

    // Coefficient vector of the residue polynomial, low coefficient first,
    // always length m. Round-trips with from_coefficients for every element.
    std::vector<std::uint32_t> coefficients(Symbol a) const {
        check(a);
        std::vector<std::uint32_t> c(m_);
        for (std::uint32_t i = 0; i < m_; ++i) {
            c[i] = a % p_;
            a /= p_;
        }
        return c;
    }

    Symbol from_coefficients(const std::vector<std::uint32_t>& c) const {
        if (c.size() != m_) throw std::invalid_argument("coefficient vector length != m");
        Symbol a = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
            a += c[i] * scale;
            scale *= p_;
        }
        return a;
    }

    static std::uint64_t default_modulus(std::uint32_t p, std::uint32_t m) {
        if (!detail::is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
        if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
        std::uint64_t q = 1;
        for (std::uint32_t i = 0; i < m; ++i) {
            q *= p;
            if (q > max_order) throw std::invalid_argument("field order exceeds 2^20 cap");
        }
        for (std::uint64_t low = 0; low < q; ++low) {
            std::vector<std::uint32_t> f = detail::unpack_poly(low, p);
            f.resize(m + 1, 0);
            f[m] = 1;
            if (detail::poly_is_irreducible(f, p)) return q + low;
        }
        throw std::logic_error("no irreducible polynomial found");  // unreachable: irreducibles exist for every (p, m)
    }

private:
    void check(Symbol a) const {
        if (a >= q_) throw std::invalid_argument("symbol " + std::to_string(a) + " outside field of order " + std::to_string(q_));
    }

    Symbol mul_unchecked(Symbol a, Symbol b) const {
        if (!exp_.empty()) {
            if (a == 0 || b == 0) return 0;
            return exp_[log_[a] + log_[b]];
        }
        return mul_raw(a, b);
    }

    Symbol mul_raw(Symbol a, Symbol b) const {
        if (m_ == 1) return static_cast<Symbol>(std::uint64_t{a} * b % p_);
        if (p_ == 2) {
            std::uint64_t acc = 0;
            std::uint64_t aa = a;
            while (b) {
                if (b & 1) acc ^= aa;
                aa <<= 1;
                b >>= 1;
            }
            for (int d = 63 - __builtin_clzll(acc | 1); d >= static_cast<int>(m_); --d)
                if ((acc >> d) & 1) acc ^= modulus_ << (d - m_);
            return static_cast<Symbol>(acc);
        }
        std::array<std::uint64_t, 64> prod{};
        std::array<std::uint32_t, 32> da{};
        std::array<std::uint32_t, 32> db{};
        for (std::uint32_t i = 0; i < m_; ++i) {
            da[i] = a % p_;
            db[i] = b % p_;
            a /= p_;
            b /= p_;
        }
        for (std::uint32_t i = 0; i < m_; ++i) {
            if (da[i] == 0) continue;
            for (std::uint32_t j = 0; j < m_; ++j) prod[i + j] += std::uint64_t{da[i]} * db[j];
        }
        for (std::uint32_t d = 2 * m_ - 2; d >= m_; --d) {
            const std::uint32_t c = static_cast<std::uint32_t>(prod[d] % p_);
            prod[d] = 0;
            if (c == 0) continue;
            for (std::uint32_t t = 0; t < m_; ++t) {
                const std::uint64_t sub = std::uint64_t{c} * mod_digits_[t] % p_;
                prod[d - m_ + t] += p_ - sub;
            }
        }
        Symbol r = 0;
        std::uint32_t scale = 1;
        for (std::uint32_t i = 0; i < m_; ++i) {
            r += static_cast<std::uint32_t>(prod[i] % p_) * scale;
            scale *= p_;
        }
        return r;
    }

    Symbol pow_raw(Symbol a, std::uint64_t e) const {
        Symbol r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, a);
            a = mul_raw(a, a);
            e >>= 1;
        }
        return r;
    }

    void build_tables() {
        std::vector<std::uint32_t> primes;
        std::uint32_t rest = q_ - 1;
        for (std::uint32_t d = 2; d * d <= rest; ++d) {
            if (rest % d == 0) {
                primes.push_back(d);
                while (rest % d == 0) rest /= d;
            }
        }
        if (rest > 1) primes.push_back(rest);
        Symbol g = 0;
        for (Symbol cand = 2; cand < q_; ++cand) {
            bool ok = true;
            for (std::uint32_t r : primes)
                if (pow_raw(cand, (q_ - 1) / r) == 1) {
                    ok = false;
                    break;
                }
            if (ok) {
                g = cand;
                break;
            }
        }
        exp_.resize(2 * q_ - 3);
        log_.assign(q_, 0);
        Symbol x = 1;
        for (std::uint32_t i = 0; i < q_ - 1; ++i) {
            exp_[i] = x;
            log_[x] = i;
            x = mul_raw(x, g);
        }
        for (std::uint32_t i = q_ - 1; i < 2 * q_ - 3; ++i) exp_[i] = exp_[i - (q_ - 1)];
    }

    std::uint32_t p_;
    std::uint32_t m_;
    std::uint32_t q_;
    std::uint64_t modulus_;
    std::vector<std::uint32_t> mod_digits_;
    std::vector<Symbol> exp_;
    std::vector<std::uint32_t> log_;
};

}  // namespace indel
