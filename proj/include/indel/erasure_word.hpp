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
#include <limits>
#include <vector>

#include "indel/galois.hpp"

namespace indel {

// Fixed-length word over F_q extended with an erasure mark '?'.
struct ErasureWord {
    static constexpr Symbol erased = std::numeric_limits<Symbol>::max();

    std::vector<Symbol> entries;

    ErasureWord() = default;
    explicit ErasureWord(std::size_t n) : entries(n, erased) {}
    explicit ErasureWord(std::vector<Symbol> e) : entries(std::move(e)) {}

    std::size_t size() const { return entries.size(); }

    std::size_t erasure_count() const {
        std::size_t c = 0;
        for (Symbol s : entries) c += s == erased;
        return c;
    }

    // Copy with every erasure replaced by `value`.
    std::vector<Symbol> filled(Symbol value) const {
        std::vector<Symbol> out(entries);
        for (Symbol& s : out)
            if (s == erased) s = value;
        return out;
    }

    bool operator==(const ErasureWord&) const = default;
};

}  // namespace indel
