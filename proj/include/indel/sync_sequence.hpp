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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indel/edit_distance.hpp"
#include "indel/galois.hpp"
#include "indel/rng.hpp"

namespace indel {

// A sequence s over F_q* is tau-self-matching when every pair of adjacent
// windows satisfies D_L(s[i..j), s[j..k)) > (1 - tau) * (k - i). Split
// positions here are 0-based with 0 <= i < j < k <= n.

enum class SyncMode { exhaustive, sampled };

struct SyncVerifySpec {
    SyncMode mode = SyncMode::exhaustive;
    std::size_t sample_count = 100000;  // sampled mode only
    std::uint64_t sample_seed = 0;      // sampled mode only
};

struct SyncViolation {
    std::size_t i = 0;
    std::size_t j = 0;
    std::size_t k = 0;
    std::size_t distance = 0;  // D_L of the two windows
    double threshold = 0.0;    // (1 - tau) * (k - i)
};

namespace detail {

// Scans triples with k - i <= window_cap in lexicographic order and returns
// the first violation. One DP per (i, j) covers every k at once: the final
// DP row holds LCS(s[i..j), s[j..j+t)) for all t.
inline std::optional<SyncViolation> scan_triples(std::span<const Symbol> s, double tau, std::size_t window_cap) {
    const std::size_t n = s.size();
    std::vector<std::uint32_t> prev;
    std::vector<std::uint32_t> cur;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t kmax = std::min(n, i + window_cap);
        for (std::size_t j = i + 1; j < kmax; ++j) {
            const std::size_t bl = kmax - j;
            prev.assign(bl + 1, 0);
            cur.assign(bl + 1, 0);
            for (std::size_t u = i; u < j; ++u) {
                cur[0] = 0;
                for (std::size_t v = 0; v < bl; ++v)
                    cur[v + 1] = s[u] == s[j + v] ? prev[v] + 1 : std::max(prev[v + 1], cur[v]);
                std::swap(prev, cur);
            }
            for (std::size_t k = j + 1; k <= kmax; ++k) {
                const std::size_t t = k - j;
                const std::size_t dl = (j - i) + t - 2 * prev[t];
                const double threshold = (1.0 - tau) * static_cast<double>(k - i);
                if (!(static_cast<double>(dl) > threshold)) return SyncViolation{i, j, k, dl, threshold};
            }
        }
    }
    return std::nullopt;
}

inline bool lex_less(const SyncViolation& a, const SyncViolation& b) {
    if (a.i != b.i) return a.i < b.i;
    if (a.j != b.j) return a.j < b.j;
    return a.k < b.k;
}

}  // namespace detail

// Checks the self-matching property. Exhaustive mode scans every triple and
// is capped at n <= 128; sampled mode scans all short windows (k - i <= 16,
// the failure-prone case) plus a seeded uniform sample of triples. Returns
// the lexicographically first violating triple among those checked, or
// nullopt when all checked triples pass.
inline std::optional<SyncViolation> verify_self_matching(std::span<const Symbol> s, double tau,
                                                         const SyncVerifySpec& spec) {
    if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
    const std::size_t n = s.size();
    if (spec.mode == SyncMode::exhaustive) {
        if (n > 128) throw std::invalid_argument("exhaustive verification is capped at n <= 128");
        return detail::scan_triples(s, tau, n);
    }

    std::optional<SyncViolation> best;
    if (auto v = detail::scan_triples(s, tau, 16)) best = v;
    if (n >= 2) {
        Rng rng(spec.sample_seed);
        for (std::size_t t = 0; t < spec.sample_count; ++t) {
            std::size_t a = rng.below(n + 1);
            std::size_t b = rng.below(n + 1);
            std::size_t c = rng.below(n + 1);
            if (a == b || a == c || b == c) continue;
            std::size_t i = std::min({a, b, c});
            std::size_t k = std::max({a, b, c});
            std::size_t j = a + b + c - i - k;
            const std::size_t dl = levenshtein(s.subspan(i, j - i), s.subspan(j, k - j));
            const double threshold = (1.0 - tau) * static_cast<double>(k - i);
            if (!(static_cast<double>(dl) > threshold)) {
                SyncViolation v{i, j, k, dl, threshold};
                if (!best || detail::lex_less(v, *best)) best = v;
            }
        }
    }
    return best;
}

inline std::optional<SyncViolation> verify_self_matching(const std::vector<Symbol>& s, double tau,
                                                         const SyncVerifySpec& spec) {
    return verify_self_matching(std::span<const Symbol>(s), tau, spec);
}

struct SyncGenOptions {
    std::size_t max_restarts = 1000;
    std::optional<SyncMode> mode;               // default: exhaustive up to n = 128, sampled above
    std::size_t sample_count = 100000;
    std::optional<std::uint64_t> sample_seed;   // default: derived from the generation seed
};

struct SyncGenerationError : std::runtime_error {
    SyncGenerationError(std::string msg, SyncViolation v) : std::runtime_error(std::move(msg)), violation(v) {}
    SyncViolation violation;
};

// An all-nonzero sequence together with its claimed tau and the verification
// mode that backs the claim.
class SyncSequence {
public:
    // Rejection sampling, uniform over F_q*: draw, verify, restart. The
    // returned sequence always passed verify_self_matching in the recorded
    // mode. Deterministic in (f, n, tau, seed, options). Gives up with a
    // diagnostic naming the tightest violated triple once max_restarts
    // candidates have failed.
    static SyncSequence generate(const Field& f, std::size_t n, double tau, std::uint64_t seed,
                                 const SyncGenOptions& opt = {}) {
        if (n < 1) throw std::invalid_argument("sequence length must be positive");
        if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
        SyncVerifySpec spec;
        spec.mode = opt.mode.value_or(n <= 128 ? SyncMode::exhaustive : SyncMode::sampled);
        spec.sample_count = opt.sample_count;
        spec.sample_seed = opt.sample_seed.value_or(Rng::mix(seed, 1));

        Rng rng(seed);
        std::vector<Symbol> candidate(n);
        std::optional<SyncViolation> last;
        for (std::size_t attempt = 0; attempt < opt.max_restarts; ++attempt) {
            for (Symbol& x : candidate) x = static_cast<Symbol>(rng.nonzero_below(f.q()));
            // Short windows dominate the failure probability; reject on them
            // before paying for the full verification.
            if (auto v = detail::scan_triples(candidate, tau, std::min<std::size_t>(16, n))) {
                last = v;
                continue;
            }
            if (auto v = verify_self_matching(candidate, tau, spec)) {
                last = v;
                continue;
            }
            return SyncSequence(std::move(candidate), tau, spec);
        }

        SyncViolation tightest = last.value_or(SyncViolation{});
        if (last) {
            // Rescan the final candidate for the deepest short-window deficit.
            double worst = -1.0;
            const std::size_t n1 = candidate.size();
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = i + 1; j < std::min(n1, i + 16); ++j)
                    for (std::size_t k = j + 1; k <= std::min(n1, i + 16); ++k) {
                        const std::size_t dl = levenshtein(std::span<const Symbol>(candidate).subspan(i, j - i),
                                                           std::span<const Symbol>(candidate).subspan(j, k - j));
                        const double threshold = (1.0 - tau) * static_cast<double>(k - i);
                        const double deficit = threshold - static_cast<double>(dl);
                        if (!(static_cast<double>(dl) > threshold) && deficit > worst) {
                            worst = deficit;
                            tightest = SyncViolation{i, j, k, dl, threshold};
                        }
                    }
        }
        throw SyncGenerationError(
            "sync generation gave up after " + std::to_string(opt.max_restarts) + " restarts (n=" + std::to_string(n) +
                ", tau=" + std::to_string(tau) + ", q=" + std::to_string(f.q()) + "); tightest violated triple (" +
                std::to_string(tightest.i) + "," + std::to_string(tightest.j) + "," + std::to_string(tightest.k) +
                "): D_L=" + std::to_string(tightest.distance) + " needed > " + std::to_string(tightest.threshold),
            tightest);
    }

    // Wraps externally produced symbols under a caller-supplied verification
    // claim (file loading, test rigs). verify_self_matching can re-check.
    static SyncSequence from_symbols(std::vector<Symbol> symbols, double tau, SyncVerifySpec claim) {
        if (symbols.empty()) throw std::invalid_argument("sync sequence must be nonempty");
        if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
        for (Symbol s : symbols)
            if (s == 0) throw std::invalid_argument("sync sequence symbols must be nonzero");
        return SyncSequence(std::move(symbols), tau, claim);
    }

    const std::vector<Symbol>& symbols() const { return symbols_; }
    std::size_t size() const { return symbols_.size(); }
    double tau() const { return tau_; }
    const SyncVerifySpec& verification() const { return verification_; }

private:
    SyncSequence(std::vector<Symbol> symbols, double tau, SyncVerifySpec spec)
        : symbols_(std::move(symbols)), tau_(tau), verification_(spec) {}

    std::vector<Symbol> symbols_;
    double tau_;
    SyncVerifySpec verification_;
};

}  // namespace indel
