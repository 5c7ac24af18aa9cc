#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "syzlab/invariant_ring.hpp"

namespace syzlab::workbench {

inline constexpr int kCacheFormatVersion = 1;

std::string sha256_hex(const std::string& data);

/// Content-addressed files under one directory. Entries are written to a
/// temporary file and renamed into place, so readers never see partial data.
class Cache {
   public:
    explicit Cache(std::filesystem::path dir, int version = kCacheFormatVersion);

    /// Hash of the parts (length-prefixed, so no two part lists collide).
    static std::string key(const std::vector<std::string>& parts);

    /// Miss on absence or version mismatch; corrupted entries are deleted.
    std::optional<std::string> get(const std::string& key) const;
    void put(const std::string& key, const std::string& payload) const;

    const std::filesystem::path& dir() const { return dir_; }

   private:
    std::filesystem::path path_of(const std::string& key) const;

    std::filesystem::path dir_;
    int version_;
};

/// --cache-dir, else SYZLAB_CACHE_DIR, else $XDG_CACHE_HOME/syzlab or ~/.cache/syzlab.
std::filesystem::path default_cache_dir();

/// Invariant degrees of one representation, stored in a Cache.
class CachedDegreeStore : public DegreeStore {
   public:
    CachedDegreeStore(const Cache& cache, std::string representation_key);
    std::optional<InvariantDegree> load(int degree) override;
    void save(const InvariantDegree& degree) override;

   private:
    std::string key_for(int degree) const;
    const Cache& cache_;
    std::string rep_key_;
};

std::string serialize_degree(const InvariantDegree& degree);
InvariantDegree deserialize_degree(const std::string& text);

}  // namespace syzlab::workbench
