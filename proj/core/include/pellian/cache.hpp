#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "pellian/pell.hpp"

namespace pellian {

inline constexpr int kCacheSchemaVersion = 1;

/// Persisted fundamental-solution data for one modulus. Big integers are
/// stored as base-10 strings; every record is revalidated on load.
struct CacheRecord {
    i64 d = 0;
    mpz_class t1, u1;    // norm +1 fundamental solution
    mpz_class tpm, upm;  // norm +-1 fundamental unit
    int norm_pm = 1;

    bool valid() const;
};

struct CacheVersionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Append-only, line-delimited JSON store of fundamental solutions.
/// Corrupt lines are skipped and counted; a schema version mismatch fails
/// loudly. Lookups fall back to computing and remember the new record.
class FundamentalCache {
public:
    FundamentalCache() = default;

    /// Missing file loads as an empty cache.
    static FundamentalCache load(const std::string& path);

    PellSolution fundamental(i64 d);
    PellSolution fundamental_pm(i64 d);

    u64 corrupt_lines() const { return corrupt_; }
    u64 hits() const { return hits_; }
    std::size_t size() const { return records_.size(); }

    /// Records computed since load, sorted by d; empty after writing.
    std::vector<CacheRecord> take_new_records();

    /// Single-writer append of the session's new records.
    void append_new(const std::string& path);

private:
    const CacheRecord& obtain(i64 d);

    std::map<i64, CacheRecord> records_;
    std::vector<i64> new_ds_;
    u64 corrupt_ = 0;
    u64 hits_ = 0;
    std::unique_ptr<std::mutex> mu_ = std::make_unique<std::mutex>();
};

std::string cache_record_to_line(const CacheRecord& rec);

}  // namespace pellian
