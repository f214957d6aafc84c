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

#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indel/half_linear.hpp"

namespace indel {

// Interleaves pair coordinates into a flat word (a_1, b_1, a_2, b_2, ...).
inline std::vector<Symbol> flat(std::span<const PairSymbol> pairs) {
    std::vector<Symbol> out;
    out.reserve(2 * pairs.size());
    for (const PairSymbol& p : pairs) {
        out.push_back(p.a);
        out.push_back(p.b);
    }
    return out;
}

inline std::vector<Symbol> flat(const std::vector<PairSymbol>& pairs) { return flat(std::span<const PairSymbol>(pairs)); }

inline std::vector<PairSymbol> unflat(std::span<const Symbol> v) {
    if (v.size() % 2 != 0) throw std::invalid_argument("flat word length must be even");
    std::vector<PairSymbol> out(v.size() / 2);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = PairSymbol{v[2 * i], v[2 * i + 1]};
    return out;
}

// Inserts the delimiter (0, 0) after every complete group of 2*ell elements.
// A trailing partial group receives no padding, so the output length is
// |v| + 2 * floor(|v| / (2*ell)).
inline std::vector<Symbol> pad(std::span<const Symbol> v, std::size_t ell) {
    if (ell < 1) throw std::invalid_argument("padding period must be >= 1");
    std::vector<Symbol> out;
    out.reserve(v.size() + 2 * (v.size() / (2 * ell)));
    for (std::size_t i = 0; i < v.size(); ++i) {
        out.push_back(v[i]);
        if ((i + 1) % (2 * ell) == 0) {
            out.push_back(0);
            out.push_back(0);
        }
    }
    return out;
}

inline std::vector<Symbol> pad(const std::vector<Symbol>& v, std::size_t ell) {
    return pad(std::span<const Symbol>(v), ell);
}

// A word split into maximal zero-free windows and the zero runs between
// them. delimiter_lengths has one more entry than windows: the leading run,
// one run after each window. Reinterleaving reproduces the word exactly.
struct Segmentation {
    std::vector<std::vector<Symbol>> windows;
    std::vector<std::size_t> delimiter_lengths;

    // Start position of window w in the segmented word.
    std::size_t window_start(std::size_t w) const {
        std::size_t pos = delimiter_lengths[0];
        for (std::size_t t = 0; t < w; ++t) pos += windows[t].size() + delimiter_lengths[t + 1];
        return pos;
    }
};

inline Segmentation segment(std::span<const Symbol> y) {
    Segmentation seg;
    std::size_t i = 0;
    std::size_t run = 0;
    while (i < y.size()) {
        if (y[i] == 0) {
            ++run;
            ++i;
            continue;
        }
        seg.delimiter_lengths.push_back(run);
        run = 0;
        std::vector<Symbol> window;
        while (i < y.size() && y[i] != 0) window.push_back(y[i++]);
        seg.windows.push_back(std::move(window));
    }
    seg.delimiter_lengths.push_back(run);
    return seg;
}

inline Segmentation segment(const std::vector<Symbol>& y) { return segment(std::span<const Symbol>(y)); }

inline std::vector<Symbol> reinterleave(const Segmentation& seg) {
    std::vector<Symbol> out;
    out.insert(out.end(), seg.delimiter_lengths[0], 0);
    for (std::size_t w = 0; w < seg.windows.size(); ++w) {
        out.insert(out.end(), seg.windows[w].begin(), seg.windows[w].end());
        out.insert(out.end(), seg.delimiter_lengths[w + 1], 0);
    }
    return out;
}

// Padding period for a target indel fraction delta in (0, 1/16):
// ell + 1 = ceil(1 / (2 sqrt(delta))).
inline std::size_t choose_ell(double delta) {
    if (!(delta > 0.0 && delta < 1.0 / 16.0)) throw std::invalid_argument("delta must lie in (0, 1/16)");
    const double target = 1.0 / (2.0 * std::sqrt(delta));
    return static_cast<std::size_t>(std::ceil(target)) - 1;
}

struct LinDecodeResult {
    std::optional<std::vector<Symbol>> message;
    std::vector<PairSymbol> pairs;  // the pair list handed to the base decoder
    std::size_t windows_total = 0;
    std::size_t windows_discarded = 0;
    ErasureWord matched;
    MatchReport report;
};

// The fully linear code: codewords are pad(flat(c), ell) for half-linear
// codewords c. Linear over F_q; every zero run in a codeword has even
// length. ell must divide n so that each inter-delimiter group holds whole
// pairs and genuine windows never exceed 2*ell.
class LinearIndelCode {
public:
    LinearIndelCode(HalfLinearCode base, std::size_t ell) : base_(std::move(base)), ell_(ell) {
        if (ell_ < 1) throw std::invalid_argument("padding period must be >= 1");
        if (base_.n() % ell_ != 0) throw std::invalid_argument("padding period must divide the base block length");
    }

    const HalfLinearCode& base() const { return base_; }
    const Field& field() const { return base_.field(); }
    std::size_t ell() const { return ell_; }
    std::size_t k() const { return base_.k(); }

    // N = 2n(ell+1)/ell, exact since ell | n.
    std::size_t codeword_length() const { return 2 * base_.n() * (ell_ + 1) / ell_; }

    std::vector<Symbol> encode(std::span<const Symbol> msg) const { return pad(flat(base_.encode(msg)), ell_); }

    std::vector<Symbol> encode(const std::vector<Symbol>& msg) const { return encode(std::span<const Symbol>(msg)); }

    // Segments the received word, discards every window of odd length or of
    // length above 2*ell, splits the survivors into consecutive pairs, and
    // hands the pair list to the base decoder. Synchronization recovery is
    // entirely the matcher's job; discarded windows leave no placeholder.
    LinDecodeResult decode(std::span<const Symbol> y, DecoderVariant variant = DecoderVariant::improved) const {
        const Segmentation seg = segment(y);
        LinDecodeResult result;
        result.windows_total = seg.windows.size();
        for (const std::vector<Symbol>& w : seg.windows) {
            if (w.size() % 2 != 0 || w.size() > 2 * ell_) {
                ++result.windows_discarded;
                continue;
            }
            for (std::size_t t = 0; t + 1 < w.size(); t += 2) result.pairs.push_back(PairSymbol{w[t], w[t + 1]});
        }
        HlDecodeResult inner = base_.decode(result.pairs, variant);
        result.message = std::move(inner.message);
        result.matched = std::move(inner.matched);
        result.report = inner.report;
        return result;
    }

    LinDecodeResult decode(const std::vector<Symbol>& y, DecoderVariant variant = DecoderVariant::improved) const {
        return decode(std::span<const Symbol>(y), variant);
    }

private:
    HalfLinearCode base_;
    std::size_t ell_;
};

}  // namespace indel
