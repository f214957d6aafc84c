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

#include <cctype>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "indel/bounds.hpp"
#include "indel/channel.hpp"
#include "indel/half_linear.hpp"
#include "indel/linear_code.hpp"
#include "indel/reed_solomon.hpp"
#include "indel/rng.hpp"
#include "indel/sync_sequence.hpp"

namespace indel {

enum class ChannelStrategy { random, window_parity, window_desync, delimiter_delete };

inline std::string to_string(ChannelStrategy s) {
    switch (s) {
        case ChannelStrategy::random: return "random";
        case ChannelStrategy::window_parity: return "window-parity";
        case ChannelStrategy::window_desync: return "window-desync";
        case ChannelStrategy::delimiter_delete: return "delimiter-delete";
    }
    throw std::logic_error("unreachable");
}

inline ChannelStrategy parse_strategy(const std::string& s) {
    if (s == "random") return ChannelStrategy::random;
    if (s == "window-parity") return ChannelStrategy::window_parity;
    if (s == "window-desync") return ChannelStrategy::window_desync;
    if (s == "delimiter-delete") return ChannelStrategy::delimiter_delete;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

inline std::string to_string(DecoderVariant v) {
    return v == DecoderVariant::improved ? "improved" : "baseline";
}

inline DecoderVariant parse_variant(const std::string& s) {
    if (s == "improved") return DecoderVariant::improved;
    if (s == "baseline") return DecoderVariant::baseline;
    throw std::invalid_argument("unknown decoder variant '" + s + "'");
}

// Sweep description. ell = 0 runs the half-linear code on pair symbols; any
// ell >= 1 runs the fully linear code on flat words. All randomness flows
// from the seeds below; identical configs give byte-identical CSV.
struct ExperimentConfig {
    std::uint32_t p = 2;
    std::uint32_t m = 8;
    std::size_t n = 240;
    std::size_t k = 120;
    std::vector<double> taus{0.5};
    std::uint64_t sync_seed = 1;
    std::size_t sync_restarts = 1000;
    std::size_t sync_sample_count = 100000;
    std::vector<std::size_t> ells{0};
    std::vector<Rational> deltas{Rational(1, 20)};
    std::vector<DecoderVariant> variants{DecoderVariant::improved};
    std::vector<ChannelStrategy> strategies{ChannelStrategy::random};
    std::size_t trials = 100;
    std::uint64_t seed = 1;
    Rational zero_fraction{0};  // craft messages whose inner codeword has this zero fraction
    bool timing = false;        // wall-clock decode times in the CSV (breaks byte reproducibility)
    bool keep_trial_records = false;  // harness use; not a config-file key

    static ExperimentConfig from_entries(const std::vector<std::pair<std::string, std::string>>& entries);
};

struct TrialRecord {
    std::size_t row = 0;
    bool success = false;
    std::size_t deletions = 0;
    std::size_t insertions = 0;
    std::size_t erasures = 0;
    std::size_t substitutions = 0;
};

struct ExperimentRow {
    Rational delta;
    std::size_t ell = 0;
    double tau = 0.5;
    DecoderVariant variant = DecoderVariant::improved;
    ChannelStrategy strategy = ChannelStrategy::random;
    std::size_t trials = 0;
    std::size_t successes = 0;
    double mean_e = 0.0;
    double mean_t = 0.0;
    double mean_runtime_ms = 0.0;
};

struct ExperimentResult {
    std::vector<ExperimentRow> rows;
    std::vector<TrialRecord> trial_records;  // filled when keep_trial_records is set
    std::string csv;
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(c))) {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::string format_tau(double tau) {
    std::ostringstream os;
    os << tau;
    return os.str();
}

inline std::string format_fixed(double v, int digits) {
    std::ostringstream os;
    os.setf(std::ios::fixed);
    os.precision(digits);
    os << v;
    return os.str();
}

// Message whose inner codeword vanishes on exactly `zeros` seeded evaluation
// points: a scaled product of that many linear factors.
inline std::vector<Symbol> craft_zero_heavy_message(const ReedSolomon& rs, std::size_t zeros, std::uint64_t seed) {
    if (zeros > rs.k() - 1) throw std::invalid_argument("zero count exceeds k - 1, the root capacity of a message");
    Rng rng(seed);
    std::vector<Symbol> points(rs.n());
    for (std::size_t i = 0; i < points.size(); ++i) points[i] = static_cast<Symbol>(i);
    rng.shuffle(points);
    const Field& f = rs.field();
    std::vector<Symbol> poly{static_cast<Symbol>(rng.nonzero_below(f.q()))};
    for (std::size_t i = 0; i < zeros; ++i) poly_mul_linear(f, poly, points[i]);
    poly.resize(rs.k(), 0);
    return poly;
}

}  // namespace detail

inline ExperimentConfig ExperimentConfig::from_entries(
    const std::vector<std::pair<std::string, std::string>>& entries) {
    ExperimentConfig cfg;
    for (const auto& [key, value] : entries) {
        if (key == "p") cfg.p = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "m") cfg.m = static_cast<std::uint32_t>(std::stoul(value));
        else if (key == "n") cfg.n = std::stoul(value);
        else if (key == "k") cfg.k = std::stoul(value);
        else if (key == "tau" || key == "taus") {
            cfg.taus.clear();
            for (const auto& t : detail::split_list(value)) cfg.taus.push_back(std::stod(t));
        } else if (key == "sync_seed") cfg.sync_seed = std::stoull(value);
        else if (key == "sync_restarts") cfg.sync_restarts = std::stoul(value);
        else if (key == "sync_sample_count") cfg.sync_sample_count = std::stoul(value);
        else if (key == "ell" || key == "ells") {
            cfg.ells.clear();
            for (const auto& t : detail::split_list(value)) cfg.ells.push_back(std::stoul(t));
        } else if (key == "delta" || key == "deltas") {
            cfg.deltas.clear();
            for (const auto& t : detail::split_list(value)) cfg.deltas.push_back(Rational::parse(t));
        } else if (key == "variant" || key == "variants") {
            cfg.variants.clear();
            for (const auto& t : detail::split_list(value)) cfg.variants.push_back(parse_variant(t));
        } else if (key == "strategy" || key == "strategies") {
            cfg.strategies.clear();
            for (const auto& t : detail::split_list(value)) cfg.strategies.push_back(parse_strategy(t));
        } else if (key == "trials") cfg.trials = std::stoul(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "zero_fraction") cfg.zero_fraction = Rational::parse(value);
        else if (key == "timing") {
            if (value == "on") cfg.timing = true;
            else if (value == "off") cfg.timing = false;
            else throw std::invalid_argument("timing must be 'on' or 'off'");
        } else throw std::invalid_argument("unknown config key '" + key + "'");
    }
    return cfg;
}

inline ExperimentResult run_experiment(const ExperimentConfig& cfg) {
    const Field field(cfg.p, cfg.m);
    const ReedSolomon inner(field, cfg.n, cfg.k);
    const std::uint64_t pair_alphabet = std::uint64_t{field.q()} * field.q();

    // Validate all downstream constraints before any trial runs.
    for (ChannelStrategy s : cfg.strategies)
        if (s != ChannelStrategy::random)
            for (std::size_t ell : cfg.ells)
                if (ell == 0)
                    throw std::invalid_argument("adversarial strategies require ell >= 1");
    for (std::size_t ell : cfg.ells)
        if (ell >= 1 && cfg.n % ell != 0)
            throw std::invalid_argument("ell=" + std::to_string(ell) + " does not divide n");
    for (double tau : cfg.taus)
        if (!(tau > 0.0 && tau < 1.0)) throw std::invalid_argument("tau must lie in (0, 1)");
    for (const Rational& delta : cfg.deltas)
        if (delta < Rational(0) || !(delta < Rational(1))) throw std::invalid_argument("delta must lie in [0, 1)");

    const std::size_t zero_target =
        cfg.zero_fraction.num == 0
            ? 0
            : static_cast<std::size_t>((cfg.zero_fraction.num * static_cast<std::int64_t>(cfg.n) +
                                        cfg.zero_fraction.den - 1) /
                                       cfg.zero_fraction.den);
    if (zero_target > cfg.k - 1)
        throw std::invalid_argument("zero_fraction exceeds the (k-1)/n root capacity of a message");

    std::map<double, HalfLinearCode> hl_cache;
    const auto hl_code = [&](double tau) -> const HalfLinearCode& {
        auto it = hl_cache.find(tau);
        if (it == hl_cache.end()) {
            SyncGenOptions opt;
            opt.max_restarts = cfg.sync_restarts;
            opt.sample_count = cfg.sync_sample_count;
            SyncSequence sync = SyncSequence::generate(field, cfg.n, tau, cfg.sync_seed, opt);
            it = hl_cache.emplace(tau, HalfLinearCode(inner, std::move(sync))).first;
        }
        return it->second;
    };

    ExperimentResult result;
    std::ostringstream csv;
    csv << "# indel-codes experiment\n";
    csv << "# p=" << cfg.p << " m=" << cfg.m << " n=" << cfg.n << " k=" << cfg.k << " trials=" << cfg.trials
        << " seed=" << cfg.seed << " sync_seed=" << cfg.sync_seed << " sync_restarts=" << cfg.sync_restarts
        << " sync_sample_count=" << cfg.sync_sample_count << " zero_fraction=" << cfg.zero_fraction.str()
        << " timing=" << (cfg.timing ? "on" : "off") << "\n";
    csv << "delta,ell,tau,variant,strategy,trials,successes,mean_e,mean_t,mean_runtime_ms\n";

    std::size_t combo = 0;
    for (const Rational& delta : cfg.deltas)
        for (std::size_t ell : cfg.ells)
            for (double tau : cfg.taus)
                for (DecoderVariant variant : cfg.variants)
                    for (ChannelStrategy strategy : cfg.strategies) {
                        const HalfLinearCode& hl = hl_code(tau);
                        std::optional<LinearIndelCode> lin;
                        if (ell >= 1) lin.emplace(hl, ell);

                        ExperimentRow row;
                        row.delta = delta;
                        row.ell = ell;
                        row.tau = tau;
                        row.variant = variant;
                        row.strategy = strategy;
                        row.trials = cfg.trials;

                        double sum_e = 0.0;
                        double sum_t = 0.0;
                        double sum_ms = 0.0;
                        for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
                            const std::uint64_t trial_seed = Rng::mix(cfg.seed, combo * 1000003ULL + trial);
                            std::vector<Symbol> msg(cfg.k);
                            if (zero_target > 0) {
                                msg = detail::craft_zero_heavy_message(inner, zero_target, Rng::mix(trial_seed, 1));
                            } else {
                                Rng mrng(Rng::mix(trial_seed, 1));
                                for (Symbol& s : msg) s = static_cast<Symbol>(mrng.below(field.q()));
                            }
                            const std::vector<Symbol> truth = inner.encode(msg);

                            Rng crng(Rng::mix(trial_seed, 2));
                            const std::uint64_t pattern_seed = Rng::mix(trial_seed, 3);

                            std::optional<std::vector<Symbol>> decoded;
                            const ErasureWord* matched = nullptr;
                            const MatchReport* report = nullptr;
                            HlDecodeResult hl_result;
                            LinDecodeResult lin_result;
                            IndelPattern pattern;
                            const auto started = std::chrono::steady_clock::now();
                            if (ell == 0) {
                                const std::size_t budget = static_cast<std::size_t>(
                                    delta.num * static_cast<std::int64_t>(cfg.n) / delta.den);
                                const std::size_t deletions = static_cast<std::size_t>(crng.below(budget + 1));
                                pattern = random_pattern(cfg.n, deletions, budget - deletions, pair_alphabet,
                                                         pattern_seed);
                                std::vector<std::uint64_t> packed(cfg.n);
                                const std::vector<PairSymbol> cw = hl.encode(msg);
                                for (std::size_t i = 0; i < cfg.n; ++i) packed[i] = pack_pair(field, cw[i]);
                                const std::vector<std::uint64_t> corrupted = apply_pattern(packed, pattern);
                                std::vector<PairSymbol> received(corrupted.size());
                                for (std::size_t i = 0; i < corrupted.size(); ++i)
                                    received[i] = unpack_pair(field, corrupted[i]);
                                hl_result = hl.decode(received, variant);
                                decoded = hl_result.message;
                                matched = &hl_result.matched;
                                report = &hl_result.report;
                            } else {
                                const std::vector<Symbol> cw = lin->encode(msg);
                                const std::size_t budget = static_cast<std::size_t>(
                                    delta.num * static_cast<std::int64_t>(cw.size()) / delta.den);
                                if (strategy == ChannelStrategy::random) {
                                    const std::size_t deletions = static_cast<std::size_t>(crng.below(budget + 1));
                                    pattern = random_pattern(cw.size(), deletions, budget - deletions, field.q(),
                                                             pattern_seed);
                                } else {
                                    const AdversaryStrategy adv =
                                        strategy == ChannelStrategy::window_parity ? AdversaryStrategy::window_parity
                                        : strategy == ChannelStrategy::window_desync
                                            ? AdversaryStrategy::window_desync
                                            : AdversaryStrategy::delimiter_delete;
                                    pattern = adversarial_pattern(cw, *lin, adv, budget, pattern_seed);
                                }
                                const std::vector<Symbol> received = apply_pattern(cw, pattern);
                                lin_result = lin->decode(received, variant);
                                decoded = lin_result.message;
                                matched = &lin_result.matched;
                                report = &lin_result.report;
                            }
                            const auto finished = std::chrono::steady_clock::now();

                            const bool success = decoded && *decoded == msg;
                            if (success) ++row.successes;
                            sum_e += static_cast<double>(report->erasures);
                            std::size_t substitutions = 0;
                            for (std::size_t i = 0; i < matched->size(); ++i)
                                if (matched->entries[i] != ErasureWord::erased && matched->entries[i] != truth[i])
                                    ++substitutions;
                            sum_t += static_cast<double>(substitutions);
                            if (cfg.timing)
                                sum_ms += std::chrono::duration<double, std::milli>(finished - started).count();
                            if (cfg.keep_trial_records)
                                result.trial_records.push_back(TrialRecord{combo, success, pattern.deletion_count(),
                                                                           pattern.insertion_count(), report->erasures,
                                                                           substitutions});
                        }
                        if (cfg.trials > 0) {
                            row.mean_e = sum_e / static_cast<double>(cfg.trials);
                            row.mean_t = sum_t / static_cast<double>(cfg.trials);
                            row.mean_runtime_ms = sum_ms / static_cast<double>(cfg.trials);
                        }
                        result.rows.push_back(row);
                        csv << delta.decimal_str() << ',' << ell << ',' << detail::format_tau(tau) << ','
                            << to_string(variant) << ',' << to_string(strategy) << ',' << row.trials << ','
                            << row.successes << ',' << detail::format_fixed(row.mean_e, 3) << ','
                            << detail::format_fixed(row.mean_t, 3) << ','
                            << detail::format_fixed(row.mean_runtime_ms, 3) << "\n";
                        ++combo;
                    }
    result.csv = csv.str();
    return result;
}

}  // namespace indel
