#pragma once

/*
 * On-disk cache for expensive intermediates (the Weyl-module Gram blocks of
 * the rational parameter systems).
 *
 * Each entry is one file:  a header line carrying a format version and a
 * checksum of the payload, then the payload text.  Readers treat version or
 * checksum mismatches as a miss (the value is recomputed and rewritten);
 * writers publish atomically by writing a temporary file in the same
 * directory and renaming it over the final name.  Payloads that pass the
 * checksum but describe mathematically inconsistent data are *not* silently
 * recomputed: they fail the structural checks on installation, or the
 * validation layers downstream, as an integrity error.
 */

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cycloschur/errors.hpp"
#include "cycloschur/modular_system.hpp"
#include "cycloschur/schur.hpp"
#include "cycloschur/tableau.hpp"

namespace cycloschur {

inline std::uint64_t fnv1a64(const std::string& s) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

inline std::string hex64(std::uint64_t v) {
    static const char* digits = "0123456789abcdef";
    std::string s(16, '0');
    for (int i = 15; i >= 0; --i) {
        s[i] = digits[v & 0xf];
        v >>= 4;
    }
    return s;
}

class FileCache {
  public:
    FileCache() = default; /* disabled */
    explicit FileCache(std::filesystem::path dir,
                       std::string version = "1")
        : enabled_(true), dir_(std::move(dir)), version_(std::move(version)) {
        std::filesystem::create_directories(dir_);
    }

    bool enabled() const { return enabled_; }
    const std::filesystem::path& dir() const { return dir_; }

    std::optional<std::string> get(const std::string& key) const {
        if (!enabled_) return std::nullopt;
        std::ifstream in(dir_ / (key + ".cache"), std::ios::binary);
        if (!in) return std::nullopt;
        std::string header;
        if (!std::getline(in, header)) return std::nullopt;
        std::istringstream hs(header);
        std::string magic, version, checksum;
        if (!(hs >> magic >> version >> checksum)) return std::nullopt;
        if (magic != "cycloschur-cache" || version != version_)
            return std::nullopt; /* stale version: miss */
        std::ostringstream rest;
        rest << in.rdbuf();
        std::string payload = rest.str();
        if (hex64(fnv1a64(payload)) != checksum)
            return std::nullopt; /* corrupted: miss, caller recomputes */
        return payload;
    }

    void put(const std::string& key, const std::string& payload) const {
        if (!enabled_) return;
        const std::filesystem::path final_path = dir_ / (key + ".cache");
        static thread_local std::mt19937_64 rng{std::random_device{}()};
        const std::filesystem::path tmp =
            dir_ / (key + ".tmp-" + hex64(rng()));
        {
            std::ofstream out(tmp, std::ios::binary);
            if (!out)
                throw std::ios_base::failure("cache: cannot write " +
                                             tmp.string());
            out << "cycloschur-cache " << version_ << " "
                << hex64(fnv1a64(payload)) << "\n"
                << payload;
            if (!out)
                throw std::ios_base::failure("cache: write failed for " +
                                             tmp.string());
        }
        std::filesystem::rename(tmp, final_path); /* atomic publication */
    }

  private:
    bool enabled_ = false;
    std::filesystem::path dir_;
    std::string version_ = "1";
};

/* ---- Gram-block payloads for the rational parameter system ------------ */

/* The key fingerprints everything the blocks depend on, including a tag for
 * the basis convention in force. */
inline std::string weylgram_key(const PLocalSystem& ms, int n,
                                const std::vector<int>& m,
                                const Multipartition& lam) {
    std::string desc = "weylgram|conv=murphy-jm-normalized-1|" + ms.describe() +
                       "|n=" + std::to_string(n) + "|m=";
    for (std::size_t i = 0; i < m.size(); ++i)
        desc += (i ? "," : "") + std::to_string(m[i]);
    desc += "|lam=" + lam.text();
    return "wg-" + hex64(fnv1a64(desc));
}

inline std::string serialize_weylgram(const SchurEngine<PLocalSystem>& E,
                                      int si) {
    const auto& G = E.weyl_gram(si);
    std::ostringstream out;
    out << "shape " << E.shapes()[si].text() << "\n";
    for (const auto& [wi, block] : G.blocks) {
        out << "weight " << E.weights()[wi].text() << " " << block.rows()
            << "\n";
        for (int i = 0; i < block.rows(); ++i) {
            for (int j = 0; j < block.cols(); ++j)
                out << (j ? " " : "") << block.at(i, j).get_str();
            out << "\n";
        }
    }
    return out.str();
}

/* Parse a payload back into the engine's Gram slot.  Returns false for
 * malformed payloads (treated as a cache miss); throws MathInconsistency
 * when the payload is well-formed but fails the structural checks (wrong
 * block sizes, asymmetry, entries outside R, bad leading block). */
inline bool install_weylgram(const SchurEngine<PLocalSystem>& E, int si,
                             const std::string& payload) {
    std::istringstream in(payload);
    std::string tag, text;
    if (!(in >> tag >> text) || tag != "shape") return false;
    if (text != E.shapes()[si].text()) return false;
    typename SchurEngine<PLocalSystem>::WeylGram G;
    int rows;
    while (in >> tag) {
        if (tag != "weight") return false;
        if (!(in >> text >> rows)) return false;
        int wi;
        try {
            wi = E.weight_index(Multicomposition::parse(text, E.bounds()));
        } catch (const std::exception&) {
            return false;
        }
        auto tabs = enumerate_ssyt(E.shapes()[si], E.weights()[wi]);
        if (static_cast<int>(tabs.size()) != rows)
            throw MathInconsistency(
                "cache: Gram block size disagrees with the tableau count");
        Matrix<Rational> block(rows, rows);
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < rows; ++j) {
                std::string ent;
                if (!(in >> ent)) return false;
                mpq_class v;
                if (v.set_str(ent, 10) != 0) return false;
                if (v.get_den() == 0) return false;
                v.canonicalize();
                if (E.ms().valuation(v) < 0)
                    throw MathInconsistency(
                        "cache: Gram entry outside the local ring");
                block.at(i, j) = v;
            }
        for (int i = 0; i < rows; ++i)
            for (int j = i + 1; j < rows; ++j)
                if (block.at(i, j) != block.at(j, i))
                    throw MathInconsistency("cache: Gram block not symmetric");
        if (wi == E.shape_weight(si) &&
            !(rows == 1 && block.at(0, 0) == Rational(1)))
            throw MathInconsistency("cache: leading Gram block is not (1)");
        G.tabs.emplace(wi, std::move(tabs));
        G.blocks.emplace(wi, std::move(block));
    }
    /* every weight with tableaux must be present */
    long dim = 0;
    for (const auto& [wi, tabs] : G.tabs) dim += static_cast<long>(tabs.size());
    if (dim != E.weyl_dim(si))
        throw MathInconsistency("cache: Gram blocks do not cover the module");
    E.install_gram(si, std::move(G));
    return true;
}

/* Fill the engine's Gram slots from the cache where possible; compute and
 * publish the rest.  The x-adic overload computes without caching. */
inline void prime_gram_cache(const SchurEngine<PLocalSystem>& E,
                             const FileCache& cache) {
    if (!cache.enabled()) return;
    for (int si = 0; si < static_cast<int>(E.shapes().size()); ++si) {
        const std::string key =
            weylgram_key(E.ms(), E.n(), E.bounds(), E.shapes()[si]);
        if (auto payload = cache.get(key)) {
            if (install_weylgram(E, si, *payload)) continue;
            /* malformed: fall through and recompute */
        }
        cache.put(key, serialize_weylgram(E, si));
    }
}

inline void prime_gram_cache(const SchurEngine<XAdicSystem>&,
                             const FileCache&) {}

} // namespace cycloschur
