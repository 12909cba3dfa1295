#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "pillowcase/arith.hpp"

namespace pillowcase {

/**
 * File-backed cache of expectation blocks.  Layout:
 *   <root>/<observable-hash>/<n1>-<n2>.dat    one rational, "p/q\n" ("/1" omitted)
 *   <root>/<observable-hash>/manifest.txt     completed blocks, regenerated on aggregation
 *   <root>/<observable-hash>/aggregate.dat    one rational per line, line m = half-size m
 * Writes create a temporary file in the same directory and rename it into
 * place, so concurrent writers of the same block are safe and recomputation
 * is byte-for-byte idempotent.
 */
class BlockCache {
public:
    explicit BlockCache(std::filesystem::path root);

    const std::filesystem::path& root() const { return root_; }

    std::filesystem::path observable_dir(const std::string& obs_hash) const;
    std::filesystem::path block_path(const std::string& obs_hash, long n1, long n2) const;

    /** nullopt if absent; io_error naming the file if present but unparseable. */
    std::optional<Rational> load(const std::string& obs_hash, long n1, long n2) const;

    void store(const std::string& obs_hash, long n1, long n2, const Rational& value) const;

    /** Rewrite manifest.txt from the block files present on disk. */
    void write_manifest(const std::string& obs_hash) const;

    /** coefficients[m] = aggregate over n1+n2 = m; also refreshes the manifest. */
    void write_aggregate(const std::string& obs_hash, const std::vector<Rational>& coefficients) const;

    std::vector<Rational> read_aggregate(const std::string& obs_hash) const;

private:
    std::filesystem::path root_;
};

} // namespace pillowcase
