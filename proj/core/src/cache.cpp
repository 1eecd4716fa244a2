#include "pellian/cache.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

namespace pellian {

using nlohmann::json;

bool CacheRecord::valid() const {
    if (!is_pell_modulus(d)) return false;
    if (norm_pm != 1 && norm_pm != -1) return false;
    if (t1 < 1 || u1 < 1 || tpm < 1 || upm < 1) return false;
    const mpz_class dd = d;
    if (t1 * t1 - dd * u1 * u1 != 1) return false;
    return tpm * tpm - dd * upm * upm == norm_pm;
}

std::string cache_record_to_line(const CacheRecord& rec) {
    json j;
    j["schema_version"] = kCacheSchemaVersion;
    j["d"] = rec.d;
    j["t1"] = rec.t1.get_str();
    j["u1"] = rec.u1.get_str();
    j["tpm"] = rec.tpm.get_str();
    j["upm"] = rec.upm.get_str();
    j["norm_pm"] = rec.norm_pm;
    return j.dump();
}

FundamentalCache FundamentalCache::load(const std::string& path) {
    FundamentalCache cache;
    std::ifstream in(path);
    if (!in.good()) return cache;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        json j = json::parse(line, nullptr, false);
        if (j.is_discarded() || !j.is_object()) {
            ++cache.corrupt_;
            continue;
        }
        if (!j.contains("schema_version") || !j["schema_version"].is_number_integer()) {
            ++cache.corrupt_;
            continue;
        }
        if (j["schema_version"].get<int>() != kCacheSchemaVersion)
            throw CacheVersionError("cache schema version " +
                                    std::to_string(j["schema_version"].get<int>()) +
                                    " != " + std::to_string(kCacheSchemaVersion));
        try {
            CacheRecord rec;
            rec.d = j.at("d").get<i64>();
            rec.t1 = mpz_class(j.at("t1").get<std::string>());
            rec.u1 = mpz_class(j.at("u1").get<std::string>());
            rec.tpm = mpz_class(j.at("tpm").get<std::string>());
            rec.upm = mpz_class(j.at("upm").get<std::string>());
            rec.norm_pm = j.at("norm_pm").get<int>();
            if (!rec.valid()) {
                ++cache.corrupt_;
                continue;
            }
            cache.records_[rec.d] = std::move(rec);
        } catch (const std::exception&) {
            ++cache.corrupt_;
        }
    }
    return cache;
}

const CacheRecord& FundamentalCache::obtain(i64 d) {
    std::lock_guard<std::mutex> lock(*mu_);
    auto it = records_.find(d);
    if (it != records_.end()) {
        ++hits_;
        return it->second;
    }
    const PellSolution pm = fundamental_unit_pm(d);
    CacheRecord rec;
    rec.d = d;
    rec.tpm = pm.t;
    rec.upm = pm.u;
    rec.norm_pm = pm.norm;
    if (pm.norm == 1) {
        rec.t1 = pm.t;
        rec.u1 = pm.u;
    } else {
        rec.t1 = pm.t * pm.t + mpz_class(d) * pm.u * pm.u;
        rec.u1 = 2 * pm.t * pm.u;
    }
    new_ds_.push_back(d);
    return records_.emplace(d, std::move(rec)).first->second;
}

PellSolution FundamentalCache::fundamental(i64 d) {
    const CacheRecord& rec = obtain(d);
    PellSolution s;
    s.d = d;
    s.t = rec.t1;
    s.u = rec.u1;
    s.norm = 1;
    return s;
}

PellSolution FundamentalCache::fundamental_pm(i64 d) {
    const CacheRecord& rec = obtain(d);
    PellSolution s;
    s.d = d;
    s.t = rec.tpm;
    s.u = rec.upm;
    s.norm = rec.norm_pm;
    return s;
}

std::vector<CacheRecord> FundamentalCache::take_new_records() {
    std::lock_guard<std::mutex> lock(*mu_);
    std::sort(new_ds_.begin(), new_ds_.end());
    std::vector<CacheRecord> out;
    out.reserve(new_ds_.size());
    for (i64 d : new_ds_) out.push_back(records_.at(d));
    new_ds_.clear();
    return out;
}

void FundamentalCache::append_new(const std::string& path) {
    const std::vector<CacheRecord> recs = take_new_records();
    if (recs.empty()) return;
    std::ofstream out(path, std::ios::app);
    if (!out.good()) throw std::runtime_error("cache: cannot open for append: " + path);
    for (const auto& rec : recs) out << cache_record_to_line(rec) << "\n";
}

}  // namespace pellian
