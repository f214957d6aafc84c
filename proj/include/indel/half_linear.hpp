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
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "indel/erasure_word.hpp"
#include "indel/galois.hpp"
#include "indel/match.hpp"
#include "indel/reed_solomon.hpp"
#include "indel/sync_sequence.hpp"

namespace indel {

// One codeword symbol of the half-linear code: the code coordinate and the
// masked sync coordinate. In a valid codeword, b = s_i * a at position i, so
// a == 0 iff b == 0 (sync symbols are nonzero).
struct PairSymbol {
    Symbol a = 0;
    Symbol b = 0;

    bool operator==(const PairSymbol&) const = default;
};

inline std::uint64_t pack_pair(const Field& f, PairSymbol p) {
    return std::uint64_t{p.a} * f.q() + p.b;
}

inline PairSymbol unpack_pair(const Field& f, std::uint64_t v) {
    if (v >= std::uint64_t{f.q()} * f.q()) throw std::invalid_argument("packed pair outside alphabet");
    return PairSymbol{static_cast<Symbol>(v / f.q()), static_cast<Symbol>(v % f.q())};
}

enum class DecoderVariant {
    improved,  // fill '?' with 0, then decode a full word
    baseline,  // pass '?' through as erasures
};

struct HlDecodeResult {
    std::optional<std::vector<Symbol>> message;
    ErasureWord matched;  // matcher output, before erasure handling
    MatchReport report;
};

// The half-linear code: pairs (c_i, s_i * c_i) for inner codewords c. Closed
// under coordinatewise addition and F_q-scalar multiplication.
class HalfLinearCode {
public:
    HalfLinearCode(ReedSolomon inner, SyncSequence sync) : inner_(std::move(inner)), sync_(std::move(sync)) {
        if (sync_.size() != inner_.n()) throw std::invalid_argument("sync length must equal the inner block length");
        for (Symbol s : sync_.symbols())
            if (s == 0 || s >= inner_.field().q())
                throw std::invalid_argument("sync symbols must be nonzero elements of the inner field");
    }

    const ReedSolomon& inner() const { return inner_; }
    const SyncSequence& sync() const { return sync_; }
    const Field& field() const { return inner_.field(); }
    std::size_t n() const { return inner_.n(); }
    std::size_t k() const { return inner_.k(); }

    std::vector<PairSymbol> encode(std::span<const Symbol> msg) const {
        const Field& f = field();
        const std::vector<Symbol> c = inner_.encode(msg);
        std::vector<PairSymbol> out(c.size());
        for (std::size_t i = 0; i < c.size(); ++i) out[i] = PairSymbol{c[i], f.mul(sync_.symbols()[i], c[i])};
        return out;
    }

    std::vector<PairSymbol> encode(const std::vector<Symbol>& msg) const { return encode(std::span<const Symbol>(msg)); }

    // Both variants first drop every received symbol with a zero coordinate:
    // extraction needs a != 0, and no valid nonzero codeword symbol has a
    // zero in either slot, so a half-zero pair can only be an adversarial
    // insertion. Survivors are unmasked to (a, b / a) and aligned against
    // the sync sequence; the improved variant then fills '?' with 0 and
    // decodes a full word, the baseline passes '?' through as erasures.
    HlDecodeResult decode(std::span<const PairSymbol> received, DecoderVariant variant) const {
        const Field& f = field();
        std::vector<ReceivedSymbol> extracted;
        extracted.reserve(received.size());
        for (const PairSymbol& p : received) {
            if (p.a == 0 || p.b == 0) continue;
            extracted.push_back(ReceivedSymbol{p.a, f.div(p.b, p.a)});
        }
        auto [word, report] = match_sync(sync_, extracted, sync_.tau());
        HlDecodeResult result;
        result.report = report;
        if (variant == DecoderVariant::improved) {
            result.message = inner_.decode(word.filled(0));
        } else {
            result.message = inner_.decode(word);
        }
        result.matched = std::move(word);
        return result;
    }

    HlDecodeResult decode(const std::vector<PairSymbol>& received, DecoderVariant variant) const {
        return decode(std::span<const PairSymbol>(received), variant);
    }

private:
    ReedSolomon inner_;
    SyncSequence sync_;
};

}  // namespace indel
