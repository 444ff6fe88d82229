#include "store.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace esymlab::app {

namespace fs = std::filesystem;

namespace {

std::string header_line(const std::string& name, const std::string& params) {
    return "# esymlab-cache v1 name=" + name + " params=" + params;
}

bool is_decimal(const std::string& s) {
    std::size_t i = s.size() > 1 && s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

std::string sanitize(const std::string& s) {
    std::string out;
    for (char c : s) out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

}  // namespace

BigSeq slice(const BigSeq& seq, std::size_t n_max) {
    if (!seq.covers(n_max)) throw std::out_of_range(seq.name + ": index " + std::to_string(n_max) + " not covered");
    BigSeq out = seq;
    out.values.resize(n_max - seq.first + 1);
    return out;
}

SequenceStore::SequenceStore(fs::path dir) : dir_(std::move(dir)) { fs::create_directories(*dir_); }

SequenceStore SequenceStore::from_settings(const std::optional<std::string>& flag) {
    if (flag && !flag->empty()) return SequenceStore(fs::path(*flag));
    if (const char* env = std::getenv("ESYMLAB_CACHE"); env && *env) return SequenceStore(fs::path(env));
    return SequenceStore();
}

fs::path SequenceStore::file_for(const std::string& name, const std::string& params) const {
    return dir_.value() / (name + "__" + sanitize(params) + ".tsv");
}

void SequenceStore::write_file(const fs::path& path, const BigSeq& seq) {
    static std::atomic<unsigned> counter{0};
    fs::path tmp = path;
    tmp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
    {
        std::ofstream out(tmp, std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << header_line(seq.name, seq.params) << '\n';
        for (std::size_t i = 0; i < seq.values.size(); ++i)
            out << seq.first + i << '\t' << seq.values[i].get_str() << '\n';
        if (!out.flush()) throw std::runtime_error("cannot write " + tmp.string());
    }
    fs::rename(tmp, path);
}

BigSeq SequenceStore::read_file(const fs::path& path) {
    std::ifstream in(path);
    if (!in) throw CacheCorrupt("cannot open " + path.string());
    std::string line;
    if (!std::getline(in, line)) throw CacheCorrupt(path.string() + ": empty file");

    std::istringstream head(line);
    std::string hash, tag, version, name_kv, params_kv, extra;
    head >> hash >> tag >> version >> name_kv >> params_kv;
    if (hash != "#" || tag != "esymlab-cache" || version != "v1" || name_kv.rfind("name=", 0) != 0 ||
        params_kv.rfind("params=", 0) != 0 || (head >> extra))
        throw CacheCorrupt(path.string() + ": bad header '" + line + "'");

    BigSeq seq;
    seq.name = name_kv.substr(5);
    seq.params = params_kv.substr(7);
    if (!is_registered_sequence(seq.name)) throw CacheCorrupt(path.string() + ": unknown sequence " + seq.name);
    seq.first = sequence_first_index(seq.name);

    std::size_t expected = seq.first;
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        const auto tab = line.find('\t');
        const std::string index = line.substr(0, tab);
        const std::string value = tab == std::string::npos ? "" : line.substr(tab + 1);
        if (tab == std::string::npos || !is_decimal(index) || !is_decimal(value) ||
            index != std::to_string(expected))
            throw CacheCorrupt(path.string() + ":" + std::to_string(line_no) + ": malformed row '" + line + "'");
        seq.values.emplace_back(value, 10);
        ++expected;
    }
    if (seq.values.empty()) throw CacheCorrupt(path.string() + ": no values");
    return seq;
}

BigSeq SequenceStore::get(const std::string& name, const SequenceParams& params, std::size_t n_max) {
    if (!is_registered_sequence(name)) throw std::invalid_argument("unknown sequence '" + name + "'");
    const std::string canon = canonical_params(name, params);
    const std::string key = name + "|" + canon;
    std::lock_guard lock(mu_);

    if (auto it = memo_.find(key); it != memo_.end() && it->second.covers(n_max)) return slice(it->second, n_max);

    std::size_t target = n_max;
    if (dir_) {
        const fs::path path = file_for(name, canon);
        if (fs::exists(path)) {
            BigSeq cached = read_file(path);
            if (cached.name != name || cached.params != canon)
                throw CacheCorrupt(path.string() + ": header names " + cached.name + " params=" + cached.params);
            if (cached.covers(n_max)) {
                memo_[key] = cached;
                return slice(cached, n_max);
            }
            target = std::max(target, cached.last());
        }
    }
    BigSeq fresh = compute_sequence(name, params, target);
    if (dir_) write_file(file_for(name, canon), fresh);
    memo_[key] = fresh;
    return slice(fresh, n_max);
}

}  // namespace esymlab::app
