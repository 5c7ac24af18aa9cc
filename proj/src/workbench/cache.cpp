#include "syzlab/workbench/cache.hpp"

#include <openssl/evp.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <unistd.h>

#include "syzlab/error.hpp"
#include "syzlab/workbench/problem.hpp"

namespace syzlab::workbench {

namespace fs = std::filesystem;

std::string sha256_hex(const std::string& data) {
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int length = 0;
    if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(), nullptr) != 1)
        throw InternalInconsistency("SHA-256 failed");
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < length; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 15];
    }
    return out;
}

Cache::Cache(fs::path dir, int version) : dir_(std::move(dir)), version_(version) {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw InputError("cannot create cache directory " + dir_.string() + ": " + ec.message());
}

std::string Cache::key(const std::vector<std::string>& parts) {
    std::string joined;
    for (const auto& p : parts) joined += std::to_string(p.size()) + ":" + p + ";";
    return sha256_hex(joined);
}

fs::path Cache::path_of(const std::string& key) const { return dir_ / (key + ".entry"); }

std::optional<std::string> Cache::get(const std::string& key) const {
    const fs::path path = path_of(key);
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::string header, checksum;
    std::getline(in, header);
    std::getline(in, checksum);
    std::ostringstream rest;
    rest << in.rdbuf();
    std::string payload = rest.str();
    in.close();
    const std::string prefix = "syzlab-cache ";
    if (header.rfind(prefix, 0) == 0 && header != prefix + std::to_string(version_)) return std::nullopt;
    if (header != prefix + std::to_string(version_) || checksum != sha256_hex(payload)) {
        std::error_code ec;
        fs::remove(path, ec);
        return std::nullopt;
    }
    return payload;
}

void Cache::put(const std::string& key, const std::string& payload) const {
    static std::atomic<unsigned long> counter{0};
    const fs::path final_path = path_of(key);
    std::ostringstream tmp_name;
    tmp_name << key << ".tmp." << ::getpid() << "." << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "."
             << counter++;
    const fs::path tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw InputError("cannot write cache entry " + tmp.string());
        out << "syzlab-cache " << version_ << "\n" << sha256_hex(payload) << "\n" << payload;
        out.flush();
        if (!out) throw InputError("cannot write cache entry " + tmp.string());
    }
    std::error_code ec;
    fs::rename(tmp, final_path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw InputError("cannot move cache entry into place at " + final_path.string());
    }
}

fs::path default_cache_dir() {
    if (const char* env = std::getenv("SYZLAB_CACHE_DIR"); env && *env) return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return fs::path(xdg) / "syzlab";
    if (const char* home = std::getenv("HOME"); home && *home) return fs::path(home) / ".cache" / "syzlab";
    return fs::temp_directory_path() / "syzlab-cache";
}

std::string serialize_degree(const InvariantDegree& degree) {
    json blocks = json::array();
    for (const auto& b : degree.blocks) {
        json monomials = json::array();
        for (const auto& e : b.monomials) monomials.push_back(std::vector<int>(e.begin(), e.end()));
        json basis = json::array();
        for (const auto& poly : b.basis) {
            json terms = json::array();
            for (const auto& t : poly)
                terms.push_back(json::array({std::vector<int>(t.exponent.begin(), t.exponent.end()), encode_cyclotomic(t.coeff)}));
            basis.push_back(terms);
        }
        blocks.push_back({{"weight", b.weight}, {"monomials", monomials}, {"pivots", b.pivots}, {"basis", basis}});
    }
    return json{{"degree", degree.degree}, {"blocks", blocks}}.dump();
}

InvariantDegree deserialize_degree(const std::string& text) {
    const json doc = json::parse(text);
    InvariantDegree out;
    out.degree = doc.at("degree").get<int>();
    auto exponent = [](const json& v) {
        Exponent e;
        for (int x : v.get<std::vector<int>>()) e.push_back(static_cast<std::uint8_t>(x));
        return e;
    };
    for (const auto& jb : doc.at("blocks")) {
        InvariantBlock b;
        b.weight = jb.at("weight").get<Weight>();
        for (const auto& m : jb.at("monomials")) b.monomials.push_back(exponent(m));
        b.pivots = jb.at("pivots").get<std::vector<std::size_t>>();
        for (const auto& jp : jb.at("basis")) {
            SparsePolynomial poly;
            for (const auto& t : jp) poly.push_back({exponent(t.at(0)), decode_cyclotomic(t.at(1), "cache")});
            b.basis.push_back(std::move(poly));
        }
        b.index_pivots();
        out.blocks.push_back(std::move(b));
    }
    out.index_blocks();
    return out;
}

CachedDegreeStore::CachedDegreeStore(const Cache& cache, std::string representation_key)
    : cache_(cache), rep_key_(std::move(representation_key)) {}

std::string CachedDegreeStore::key_for(int degree) const {
    return Cache::key({"invariant-degree", rep_key_, std::to_string(degree)});
}

std::optional<InvariantDegree> CachedDegreeStore::load(int degree) {
    auto payload = cache_.get(key_for(degree));
    if (!payload) return std::nullopt;
    try {
        auto d = deserialize_degree(*payload);
        if (d.degree != degree) return std::nullopt;
        return d;
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

void CachedDegreeStore::save(const InvariantDegree& degree) { cache_.put(key_for(degree.degree), serialize_degree(degree)); }

}  // namespace syzlab::workbench
