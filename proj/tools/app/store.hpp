#ifndef ESYMLAB_APP_STORE_HPP
#define ESYMLAB_APP_STORE_HPP

#include <filesystem>
#include <map>
#include <mutex>
#include <optional>
#include <string>

#include "esymlab/aggregates.hpp"
#include "esymlab/error.hpp"
#include "esymlab/sequences.hpp"

namespace esymlab::app {

class CacheCorrupt : public Error {
public:
    using Error::Error;
};

/// Registered sequences, memoized in memory and optionally persisted as
///   # esymlab-cache v1 name=<name> params=<canonical>
///   <n>\t<decimal value>
/// one file per (name, params). Files are replaced atomically.
class SequenceStore {
public:
    SequenceStore() = default;
    explicit SequenceStore(std::filesystem::path dir);

    /// --cache-dir wins over ESYMLAB_CACHE; neither means memory only.
    static SequenceStore from_settings(const std::optional<std::string>& flag);

    /// Values on [first_index, n_max]. Reads the cache file when it covers the
    /// range, otherwise computes and rewrites it. Throws CacheCorrupt.
    BigSeq get(const std::string& name, const SequenceParams& params, std::size_t n_max);
    BigSeq get(const std::string& name, std::size_t n_max) { return get(name, {}, n_max); }

    const std::optional<std::filesystem::path>& dir() const noexcept { return dir_; }
    std::filesystem::path file_for(const std::string& name, const std::string& params) const;

    static void write_file(const std::filesystem::path& path, const BigSeq& seq);
    static BigSeq read_file(const std::filesystem::path& path);

private:
    std::optional<std::filesystem::path> dir_;
    std::mutex mu_;
    std::map<std::string, BigSeq> memo_;
};

/// Values on [first, n_max] of a longer sequence.
BigSeq slice(const BigSeq& seq, std::size_t n_max);

}  // namespace esymlab::app

#endif
