#pragma once

// Command-line front end. run() is the whole program; tools/kscoset.cpp only
// forwards argv to it. Exit codes: 0 success / duality PASS, 2 mathematical
// mismatch (duality FAIL, failed --verify), 1 operational error.

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "kscoset/cache.hpp"
#include "kscoset/coset.hpp"
#include "kscoset/document.hpp"
#include "kscoset/duality.hpp"

namespace kscoset::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitOperational = 1;
inline constexpr int kExitMismatch = 2;

struct Options {
    std::string format = "table";
    std::int64_t budget = kDefaultBudget;
    bool no_cache = false;
    bool verify = false;
    bool verify_cache = false;
    std::string cache_dir;
};

/// Resolved spectrum document for one spec, going through the cache unless
/// disabled. Sets `cache_mismatch` when --verify-cache finds a stale entry.
inline nlohmann::json spectrum_document(const CosetSpec& spec, const Options& opts, std::ostream& err,
                                        bool& cache_mismatch) {
    const std::int64_t candidates = spec.candidate_count();
    if (candidates > opts.budget) throw BudgetExceeded(candidates, opts.budget);

    std::optional<SpectrumCache> cache;
    if (!opts.no_cache) {
        if (!opts.cache_dir.empty()) {
            cache.emplace(opts.cache_dir);
        } else if (auto dir = default_cache_dir()) {
            cache.emplace(*dir);
        }
    }
    if (!cache) return doc::spectrum_json(resolve_spectrum(spec, opts.budget));

    const auto lookup = cache->load(spec);
    if (lookup.status == SpectrumCache::Status::hit && !opts.verify_cache) return lookup.document;
    if (lookup.status == SpectrumCache::Status::corrupt) {
        err << "warning: corrupt cache entry " << cache->path_for(spec).string() << " (" << lookup.error
            << "); recomputing\n";
    }

    auto fresh = doc::spectrum_json(resolve_spectrum(spec, opts.budget));
    if (lookup.status == SpectrumCache::Status::hit) {
        if (lookup.document.dump() == fresh.dump()) return fresh;
        err << "warning: cache entry " << cache->path_for(spec).string()
            << " differs from a fresh computation; overwriting\n";
        cache_mismatch = true;
    }
    try {
        cache->store(spec, fresh);
    } catch (const std::exception& e) {
        err << "warning: could not write cache: " << e.what() << "\n";
    }
    return fresh;
}

inline void emit(const nlohmann::json& document, const std::string& format, std::ostream& out) {
    if (format == "json") {
        out << doc::render_json(document);
    } else if (format == "csv") {
        out << doc::render_csv(document);
    } else {
        out << doc::render_table(document);
    }
}

/// Runs one command; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Spectra, field identifications and level-rank duality of Grassmannian Kazama-Suzuki cosets",
                 "kscoset"};
    app.require_subcommand(1);

    Options opts;
    int m = 0;
    int n = 0;
    int k = 0;
    std::int64_t a = 0;
    std::int64_t b = 0;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", opts.format, "output format")
            ->check(CLI::IsMember({"table", "json", "csv"}));
        sub->add_option("--budget", opts.budget, "maximum number of candidate labels to enumerate")
            ->check(CLI::PositiveNumber);
    };
    auto add_spec = [&](CLI::App* sub) {
        sub->add_option("m", m, "rank of the first block")->required()->check(CLI::PositiveNumber);
        sub->add_option("n", n, "rank of the second block")->required()->check(CLI::PositiveNumber);
        sub->add_option("k", k, "level")->required()->check(CLI::PositiveNumber);
        add_common(sub);
    };
    auto add_cache = [&](CLI::App* sub) {
        sub->add_flag("--no-cache", opts.no_cache, "bypass the spectrum cache");
        sub->add_option("--cache-dir", opts.cache_dir, std::string("cache directory (default $") + kCacheDirEnv + ")");
        sub->add_flag("--verify-cache", opts.verify_cache, "recompute and compare against the cached entry");
    };

    auto* spectrum = app.add_subcommand("spectrum", "resolved primary spectrum of G(m,n,k)");
    add_spec(spectrum);
    add_cache(spectrum);

    auto* vps = app.add_subcommand("vps", "vacuum-pair (field identification) group of G(m,n,k)");
    add_spec(vps);
    vps->add_flag("--verify", opts.verify, "audit selection rules, weight gaps and group axioms");

    auto* duality = app.add_subcommand("duality", "compare G(m,n,k) with G(k,n,m)");
    add_spec(duality);
    add_cache(duality);

    auto* modular = app.add_subcommand("modular", "S-matrix data of the five chiral factors of G(m,n,k)");
    add_spec(modular);

    auto* u1 = app.add_subcommand("u1-coset", "vacuum pairs of U(1)_{2a+2b} in U(1)_{2a} x U(1)_{2b}");
    u1->add_option("a", a)->required()->check(CLI::PositiveNumber);
    u1->add_option("b", b)->required()->check(CLI::PositiveNumber);
    add_common(u1);

    std::vector<std::string> argv_storage{"kscoset"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& s : argv_storage) argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitOperational;
    }

    try {
        if (*spectrum) {
            bool mismatch = false;
            emit(spectrum_document(CosetSpec(m, n, k), opts, err, mismatch), opts.format, out);
            return mismatch ? kExitOperational : kExitOk;
        }
        if (*vps) {
            const VpGroup group(CosetSpec(m, n, k));
            std::optional<doc::VpAudit> audit;
            if (opts.verify) audit = doc::audit_vp_group(group);
            emit(doc::vp_group_json(group, audit ? &*audit : nullptr), opts.format, out);
            return audit && !audit->ok() ? kExitMismatch : kExitOk;
        }
        if (*duality) {
            const CosetSpec spec(m, n, k);
            const CosetSpec dual = spec.dual();
            bool mismatch = false;
            const auto lhs = doc::spectrum_from_json(spectrum_document(spec, opts, err, mismatch));
            const auto rhs = doc::spectrum_from_json(spectrum_document(dual, opts, err, mismatch));
            const auto report = compare_fingerprints(spec, dual, fingerprint(lhs), fingerprint(rhs));
            emit(doc::duality_json(report), opts.format, out);
            if (mismatch) return kExitOperational;
            return report.pass() ? kExitOk : kExitMismatch;
        }
        if (*modular) {
            emit(doc::modular_json(CosetSpec(m, n, k)), opts.format, out);
            return kExitOk;
        }
        if (*u1) {
            emit(doc::u1_coset_json(a, b), opts.format, out);
            return kExitOk;
        }
    } catch (const BudgetExceeded& e) {
        err << "error: " << e.what() << " (raise --budget to allow it)\n";
        return kExitOperational;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitOperational;
    }
    return kExitOperational;
}

}  // namespace kscoset::cli
