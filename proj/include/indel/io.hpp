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

#include <istream>
#include <ostream>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indel/channel.hpp"
#include "indel/galois.hpp"
#include "indel/half_linear.hpp"
#include "indel/linear_code.hpp"
#include "indel/sync_sequence.hpp"

// Text formats. Symbols are decimal canonical indices throughout; positions
// are 0-based.

namespace indel {

// --- plain symbol words: whitespace-separated decimals ---

inline void write_word(std::ostream& out, std::span<const Symbol> w) {
    for (std::size_t i = 0; i < w.size(); ++i) out << (i ? " " : "") << w[i];
    out << "\n";
}

inline std::vector<Symbol> read_word(std::istream& in) {
    std::vector<Symbol> w;
    Symbol s = 0;
    while (in >> s) w.push_back(s);
    return w;
}

// --- pair sequences: one "a b" line per symbol ---

inline void write_pairs(std::ostream& out, std::span<const PairSymbol> pairs) {
    for (const PairSymbol& p : pairs) out << p.a << " " << p.b << "\n";
}

inline std::vector<PairSymbol> read_pairs(std::istream& in) {
    std::vector<PairSymbol> pairs;
    Symbol a = 0;
    Symbol b = 0;
    while (in >> a) {
        if (!(in >> b)) throw std::runtime_error("pair file holds an odd number of symbols");
        pairs.push_back(PairSymbol{a, b});
    }
    return pairs;
}

// --- sync sequences: header "n tau mode [count seed]", then the symbols ---

inline void write_sync(std::ostream& out, const SyncSequence& s) {
    out << s.size() << " ";
    std::ostringstream tau;
    tau.precision(17);
    tau << s.tau();
    out << tau.str();
    if (s.verification().mode == SyncMode::exhaustive) {
        out << " exhaustive";
    } else {
        out << " sampled " << s.verification().sample_count << " " << s.verification().sample_seed;
    }
    out << "\n";
    write_word(out, s.symbols());
}

inline SyncSequence read_sync(std::istream& in) {
    std::size_t n = 0;
    double tau = 0.0;
    std::string mode;
    if (!(in >> n >> tau >> mode)) throw std::runtime_error("bad sync header; expected 'n tau mode'");
    SyncVerifySpec spec;
    if (mode == "exhaustive") {
        spec.mode = SyncMode::exhaustive;
    } else if (mode == "sampled") {
        spec.mode = SyncMode::sampled;
        if (!(in >> spec.sample_count >> spec.sample_seed))
            throw std::runtime_error("sampled sync header needs 'count seed'");
    } else {
        throw std::runtime_error("unknown sync verification mode '" + mode + "'");
    }
    std::vector<Symbol> symbols(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!(in >> symbols[i])) throw std::runtime_error("sync file ends before " + std::to_string(n) + " symbols");
    return SyncSequence::from_symbols(std::move(symbols), tau, spec);
}

// --- edit scripts: lines "D pos" / "I pos value" ---

inline void write_pattern(std::ostream& out, const IndelPattern& p) {
    for (const Edit& e : p.edits) {
        if (e.kind == EditKind::deletion)
            out << "D " << e.position << "\n";
        else
            out << "I " << e.position << " " << e.value << "\n";
    }
}

inline IndelPattern read_pattern(std::istream& in) {
    IndelPattern p;
    std::string kind;
    while (in >> kind) {
        Edit e{};
        if (kind == "D") {
            e.kind = EditKind::deletion;
            if (!(in >> e.position)) throw std::runtime_error("deletion line needs a position");
        } else if (kind == "I") {
            e.kind = EditKind::insertion;
            if (!(in >> e.position >> e.value)) throw std::runtime_error("insertion line needs position and value");
        } else {
            throw std::runtime_error("unknown edit kind '" + kind + "'");
        }
        p.edits.push_back(e);
    }
    return p;
}

// --- code description files: key=value plus the sync symbols inline ---

// Self-contained description of a constructed code; decoding needs no
// regeneration, the sync symbols travel with the file.
struct CodeDescription {
    bool linear = false;  // false: half-linear over pair symbols
    std::uint32_t p = 2;
    std::uint32_t m = 8;
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t ell = 0;  // linear only
    double tau = 0.5;
    SyncVerifySpec sync_claim;
    std::vector<Symbol> sync;

    HalfLinearCode to_half_linear() const {
        Field f(p, m);
        ReedSolomon rs(f, n, k);
        return HalfLinearCode(std::move(rs), SyncSequence::from_symbols(sync, tau, sync_claim));
    }

    LinearIndelCode to_linear() const { return LinearIndelCode(to_half_linear(), ell); }
};

inline void write_code(std::ostream& out, const CodeDescription& c) {
    out << "kind = " << (c.linear ? "lin" : "hl") << "\n";
    out << "p = " << c.p << "\n";
    out << "m = " << c.m << "\n";
    out << "n = " << c.n << "\n";
    out << "k = " << c.k << "\n";
    if (c.linear) out << "ell = " << c.ell << "\n";
    std::ostringstream tau;
    tau.precision(17);
    tau << c.tau;
    out << "tau = " << tau.str() << "\n";
    if (c.sync_claim.mode == SyncMode::exhaustive) {
        out << "sync_mode = exhaustive\n";
    } else {
        out << "sync_mode = sampled\n";
        out << "sync_sample_count = " << c.sync_claim.sample_count << "\n";
        out << "sync_sample_seed = " << c.sync_claim.sample_seed << "\n";
    }
    out << "sync =";
    for (Symbol s : c.sync) out << " " << s;
    out << "\n";
}

inline CodeDescription read_code(std::istream& in);

// --- key=value config text; '#' starts a comment ---

inline std::vector<std::pair<std::string, std::string>> read_key_values(std::istream& in) {
    std::vector<std::pair<std::string, std::string>> entries;
    std::string line;
    while (std::getline(in, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        const auto trim = [](std::string s) {
            const auto begin = s.find_first_not_of(" \t\r");
            const auto end = s.find_last_not_of(" \t\r");
            return begin == std::string::npos ? std::string() : s.substr(begin, end - begin + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (!key.empty()) entries.emplace_back(std::move(key), std::move(value));
    }
    return entries;
}

inline CodeDescription read_code(std::istream& in) {
    CodeDescription c;
    bool saw_kind = false;
    for (const auto& [key, value] : read_key_values(in)) {
        if (key == "kind") {
            if (value == "hl") c.linear = false;
            else if (value == "lin") c.linear = true;
            else throw std::runtime_error("unknown code kind '" + value + "'");
            saw_kind = true;
        } else if (key == "p") c.p = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "m") c.m = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "n") c.n = std::stoul(value);
        else if (key == "k") c.k = std::stoul(value);
        else if (key == "ell") c.ell = std::stoul(value);
        else if (key == "tau") c.tau = std::stod(value);
        else if (key == "sync_mode") {
            if (value == "exhaustive") c.sync_claim.mode = SyncMode::exhaustive;
            else if (value == "sampled") c.sync_claim.mode = SyncMode::sampled;
            else throw std::runtime_error("unknown sync mode '" + value + "'");
        } else if (key == "sync_sample_count") c.sync_claim.sample_count = std::stoul(value);
        else if (key == "sync_sample_seed") c.sync_claim.sample_seed = std::stoull(value);
        else if (key == "sync") {
            std::istringstream syms(value);
            c.sync = read_word(syms);
        } else throw std::runtime_error("unknown code file key '" + key + "'");
    }
    if (!saw_kind) throw std::runtime_error("code file lacks a 'kind' entry");
    if (c.sync.size() != c.n) throw std::runtime_error("code file sync length does not match n");
    return c;
}

}  // namespace indel
