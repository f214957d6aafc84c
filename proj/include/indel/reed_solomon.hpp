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

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indel/erasure_word.hpp"
#include "indel/galois.hpp"

namespace indel {

namespace detail {

// Polynomials as coefficient vectors, low coefficient first, no trailing
// zeros (the zero polynomial is the empty vector).

inline void poly_trim(std::vector<Symbol>& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

inline int poly_deg(const std::vector<Symbol>& f) { return static_cast<int>(f.size()) - 1; }

inline Symbol poly_eval(const Field& fd, const std::vector<Symbol>& f, Symbol x) {
    Symbol r = 0;
    for (std::size_t i = f.size(); i-- > 0;) r = fd.add(fd.mul(r, x), f[i]);
    return r;
}

// f *= (x - a)
inline void poly_mul_linear(const Field& fd, std::vector<Symbol>& f, Symbol a) {
    const Symbol na = fd.neg(a);
    f.push_back(0);
    for (std::size_t i = f.size(); i-- > 1;) f[i] = fd.add(f[i - 1], fd.mul(f[i], na));
    f[0] = fd.mul(f[0], na);
}

// Quotient of f by (x - a); callers discard the remainder f(a).
inline std::vector<Symbol> poly_div_linear(const Field& fd, const std::vector<Symbol>& f, Symbol a) {
    if (f.empty()) return {};
    std::vector<Symbol> q(f.size() - 1);
    Symbol carry = 0;
    for (std::size_t i = f.size(); i-- > 1;) {
        carry = fd.add(f[i], fd.mul(carry, a));
        q[i - 1] = carry;
    }
    return q;
}

inline std::vector<Symbol> poly_mul(const Field& fd, const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<Symbol> r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = fd.add(r[i + j], fd.mul(a[i], b[j]));
    }
    poly_trim(r);
    return r;
}

inline std::vector<Symbol> poly_sub(const Field& fd, const std::vector<Symbol>& a, const std::vector<Symbol>& b) {
    std::vector<Symbol> r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) {
        const Symbol x = i < a.size() ? a[i] : 0;
        const Symbol y = i < b.size() ? b[i] : 0;
        r[i] = fd.sub(x, y);
    }
    poly_trim(r);
    return r;
}

// Long division: returns the quotient and replaces r with the remainder.
inline std::vector<Symbol> poly_divmod(const Field& fd, std::vector<Symbol>& r, const std::vector<Symbol>& g) {
    if (g.empty()) throw std::domain_error("polynomial division by zero");
    if (r.size() < g.size()) {
        poly_trim(r);
        return {};
    }
    const Symbol lead_inv = fd.inv(g.back());
    const std::size_t dg = g.size() - 1;
    std::vector<Symbol> q(r.size() - dg, 0);
    for (std::size_t i = r.size(); i-- > dg;) {
        const Symbol c = fd.mul(r[i], lead_inv);
        if (c == 0) continue;
        q[i - dg] = c;
        for (std::size_t j = 0; j <= dg; ++j) r[i - dg + j] = fd.sub(r[i - dg + j], fd.mul(c, g[j]));
    }
    r.resize(dg);
    poly_trim(r);
    poly_trim(q);
    return q;
}

}  // namespace detail

// Reed-Solomon code over F_q, evaluated at the first n field elements in
// canonical index order. The code is MDS: d = n - k + 1, and the decoder
// recovers the message from any pattern of s substitutions and e erasures
// with 2s + e < d. Outside that radius it reports failure when the
// interpolation is inconsistent; a wrong message is possible and tolerated
// by callers.
class ReedSolomon {
public:
    ReedSolomon(Field field, std::size_t n, std::size_t k) : field_(std::move(field)), n_(n), k_(k) {
        if (k_ < 1 || k_ > n_) throw std::invalid_argument("require 1 <= k <= n");
        if (n_ > field_.q()) throw std::invalid_argument("block length exceeds field order");
    }

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    std::size_t min_distance() const { return n_ - k_ + 1; }

    // Evaluations of the degree-<k message polynomial; F_q-linear in msg.
    std::vector<Symbol> encode(std::span<const Symbol> msg) const {
        if (msg.size() != k_) throw std::invalid_argument("message length != k");
        std::vector<Symbol> f(msg.begin(), msg.end());
        detail::poly_trim(f);
        std::vector<Symbol> cw(n_);
        for (std::size_t i = 0; i < n_; ++i) cw[i] = detail::poly_eval(field_, f, static_cast<Symbol>(i));
        return cw;
    }

    std::vector<Symbol> encode(const std::vector<Symbol>& msg) const { return encode(std::span<const Symbol>(msg)); }

    // Errors-and-erasures decoding. Erased positions are dropped and the
    // message is recovered from the surviving points by Gao's rational
    // interpolation, giving 2s < d - e on the shortened instance, i.e.
    // 2s + e < d overall.
    std::optional<std::vector<Symbol>> decode(const ErasureWord& w) const {
        if (w.size() != n_) throw std::invalid_argument("received length != n");
        std::vector<Symbol> xs;
        std::vector<Symbol> ys;
        xs.reserve(n_);
        ys.reserve(n_);
        for (std::size_t i = 0; i < n_; ++i) {
            if (w.entries[i] == ErasureWord::erased) continue;
            xs.push_back(static_cast<Symbol>(i));
            ys.push_back(w.entries[i]);
        }
        return decode_points(xs, ys);
    }

    std::optional<std::vector<Symbol>> decode(std::span<const Symbol> w) const {
        if (w.size() != n_) throw std::invalid_argument("received length != n");
        std::vector<Symbol> xs(n_);
        for (std::size_t i = 0; i < n_; ++i) xs[i] = static_cast<Symbol>(i);
        return decode_points(xs, std::vector<Symbol>(w.begin(), w.end()));
    }

    std::optional<std::vector<Symbol>> decode(const std::vector<Symbol>& w) const {
        return decode(std::span<const Symbol>(w));
    }

private:
    std::optional<std::vector<Symbol>> decode_points(const std::vector<Symbol>& xs, const std::vector<Symbol>& ys) const {
        const Field& fd = field_;
        const std::size_t np = xs.size();
        if (np < k_) return std::nullopt;

        std::vector<Symbol> g0{1};
        for (Symbol x : xs) detail::poly_mul_linear(fd, g0, x);

        // Interpolant through the surviving points: sum of y_i / g0'(x_i) * g0 / (x - x_i).
        std::vector<Symbol> g1(np, 0);
        for (std::size_t i = 0; i < np; ++i) {
            if (ys[i] >= fd.q()) throw std::invalid_argument("received symbol outside field");
            if (ys[i] == 0) continue;
            const std::vector<Symbol> qi = detail::poly_div_linear(fd, g0, xs[i]);
            const Symbol denom = detail::poly_eval(fd, qi, xs[i]);
            const Symbol scale = fd.div(ys[i], denom);
            for (std::size_t t = 0; t < qi.size(); ++t) g1[t] = fd.add(g1[t], fd.mul(scale, qi[t]));
        }
        detail::poly_trim(g1);

        // Partial extended Euclid on (g0, g1), tracking only the v sequence,
        // stopped at the first remainder of degree < (np + k) / 2.
        std::vector<Symbol> r_prev = g0;
        std::vector<Symbol> r_cur = g1;
        std::vector<Symbol> v_prev;      // 0
        std::vector<Symbol> v_cur{1};
        while (2 * detail::poly_deg(r_cur) >= static_cast<int>(np + k_)) {
            std::vector<Symbol> rem = r_prev;
            const std::vector<Symbol> q = detail::poly_divmod(fd, rem, r_cur);
            r_prev = std::move(r_cur);
            r_cur = std::move(rem);
            std::vector<Symbol> v_next = detail::poly_sub(fd, v_prev, detail::poly_mul(fd, q, v_cur));
            v_prev = std::move(v_cur);
            v_cur = std::move(v_next);
        }

        std::vector<Symbol> rem = r_cur;
        const std::vector<Symbol> f = detail::poly_divmod(fd, rem, v_cur);
        if (!rem.empty()) return std::nullopt;                       // inconsistent: outside the radius
        if (detail::poly_deg(f) >= static_cast<int>(k_)) return std::nullopt;
        std::vector<Symbol> msg(f);
        msg.resize(k_, 0);
        return msg;
    }

    Field field_;
    std::size_t n_;
    std::size_t k_;
};

}  // namespace indel
