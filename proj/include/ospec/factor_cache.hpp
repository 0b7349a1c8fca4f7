#pragma once

#include <map>
#include <optional>
#include <shared_mutex>
#include <string>

#include "ospec/arith.hpp"
#include "ospec/integer.hpp"

namespace ospec {

// Persistent memo of complete factorizations. Lookups take a shared lock,
// stores an exclusive one, so parallel sweeps can read concurrently while
// writers are serialized. Results never depend on cache state: a hit returns
// exactly what a cold computation would.
//
// File format (UTF-8 text, one record per line, sorted by n):
//   <n> = <p1>^<e1> * <p2>^<e2> * ...
// The file is rewritten atomically (temp file + rename) on flush().
class FactorCache {
public:
    // Entries below this are recomputed faster than they are looked up.
    static constexpr unsigned long kMinValue = 1'000'000UL;

    // Binds the cache to a file, loading any existing records.
    // An empty path detaches it (in-memory only).
    void set_path(const std::string& path);
    const std::string& path() const { return path_; }

    std::optional<Factorization> lookup(const Int& n) const;
    void store(const Int& n, const Factorization& f);

    // Atomic rewrite of the backing file; no-op when detached or clean.
    void flush();
    void clear();
    std::size_t size() const;

private:
    void load_file(const std::string& path);

    mutable std::shared_mutex mutex_;
    std::map<Int, Factorization> entries_;
    std::string path_;
    bool dirty_ = false;
};

// Process-wide cache used by factor().
FactorCache& factor_cache();

}  // namespace ospec
