#pragma once

// OEIS b-file access: strict parser, on-disk cache, and the term-by-term
// comparison used to reconcile computed sequences against published ones.
//
// Network access is optional.  Offline mode serves the bundled fixture
// snapshots and never opens a socket; online mode performs a single GET per
// sequence and caches the validated body.  TLS support is compiled in when
// INVSEQ_LAB_ENABLE_TLS is defined; a client configured for TLS without it
// reports the fetch as unavailable rather than silently downgrading.

#if defined(INVSEQ_LAB_ENABLE_TLS)
#define CPPHTTPLIB_OPENSSL_SUPPORT
#endif
#include <httplib.h>

#include <cctype>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "invseq_lab/bigint.hpp"
#include "invseq_lab/oeis_fixtures.hpp"

namespace invseq_lab {

struct BEntry {
    long long index = 0;
    Int value;

    friend bool operator==(const BEntry&, const BEntry&) = default;
};

struct BSequence {
    std::string id;
    std::vector<BEntry> entries;
};

inline bool is_valid_oeis_id(std::string_view id) {
    if (id.size() != 7 || id.front() != 'A') return false;
    for (std::size_t i = 1; i < id.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(id[i]))) return false;
    }
    return true;
}

namespace detail {

inline std::string_view strip_cr(std::string_view line) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    return line;
}

inline bool parse_bfile_line(std::string_view line, long long& index, Int& value) {
    const auto is_space = [](char c) { return c == ' ' || c == '\t'; };
    std::size_t i = 0;
    while (i < line.size() && is_space(line[i])) ++i;

    const auto read_int_token = [&]() -> std::string {
        std::size_t begin = i;
        if (i < line.size() && (line[i] == '-' || line[i] == '+')) ++i;
        while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
        std::string token(line.substr(begin, i - begin));
        if (token.empty() || token == "-" || token == "+") return {};
        return token;
    };

    const std::string index_token = read_int_token();
    if (index_token.empty()) return false;
    if (i >= line.size() || !is_space(line[i])) return false;
    while (i < line.size() && is_space(line[i])) ++i;

    const std::string value_token = read_int_token();
    if (value_token.empty()) return false;
    while (i < line.size() && is_space(line[i])) ++i;
    if (i != line.size()) return false;

    index = std::stoll(index_token);
    value = Int(value_token);
    return true;
}

}  // namespace detail

// Accepts '#'-comment lines; every other line must be "index value" with the
// indices strictly increasing.  Violations report the offending line number.
inline BSequence parse_bfile(std::string id, std::string_view text) {
    BSequence seq{std::move(id), {}};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        ++line_no;
        const std::size_t nl = text.find('\n', pos);
        std::string_view line =
            text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        line = detail::strip_cr(line);
        if (!line.empty() && line.front() == '#') continue;

        long long index = 0;
        Int value;
        if (!detail::parse_bfile_line(line, index, value)) {
            throw std::runtime_error("b-file line " + std::to_string(line_no) + ": malformed entry");
        }
        if (!seq.entries.empty() && index <= seq.entries.back().index) {
            throw std::runtime_error("b-file line " + std::to_string(line_no) +
                                     ": index not strictly increasing");
        }
        seq.entries.push_back(BEntry{index, std::move(value)});
    }
    return seq;
}

inline std::string render_bfile(const BSequence& seq) {
    std::ostringstream out;
    for (const auto& e : seq.entries) out << e.index << ' ' << to_decimal(e.value) << '\n';
    return out.str();
}

struct CompareResult {
    long long start_index = 0;   // b-file index aligned with produced[0]
    std::size_t produced = 0;    // terms supplied by the caller
    std::size_t compared = 0;    // terms with a b-file counterpart
    std::size_t match_length = 0;  // longest matching prefix of the overlap
    bool pass = false;           // nonempty overlap, every compared term equal
};

inline CompareResult compare(const BSequence& b, const std::vector<Int>& produced,
                             long long start_index) {
    CompareResult r;
    r.start_index = start_index;
    r.produced = produced.size();
    std::size_t p = 0;
    while (p < b.entries.size() && b.entries[p].index < start_index) ++p;
    bool prefix_intact = true;
    for (std::size_t i = 0; i < produced.size(); ++i) {
        const long long want = start_index + static_cast<long long>(i);
        if (p >= b.entries.size() || b.entries[p].index != want) break;
        ++r.compared;
        if (prefix_intact && b.entries[p].value == produced[i]) {
            ++r.match_length;
        } else {
            prefix_intact = false;
        }
        ++p;
    }
    r.pass = r.compared > 0 && r.match_length == r.compared;
    return r;
}

inline std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("INVSEQ_LAB_CACHE"); dir && *dir) {
        return std::filesystem::path(dir);
    }
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) {
        return std::filesystem::path(xdg) / "invseq-lab";
    }
    if (const char* home = std::getenv("HOME"); home && *home) {
        return std::filesystem::path(home) / ".cache" / "invseq-lab";
    }
    return std::filesystem::temp_directory_path() / "invseq-lab";
}

struct OeisConfig {
    std::string host = "oeis.org";
    int port = 443;
    bool use_tls = true;
    std::filesystem::path cache_dir;  // empty: resolved via default_cache_dir()
};

class OeisClient {
public:
    explicit OeisClient(OeisConfig config = {}) : config_(std::move(config)) {
        if (config_.cache_dir.empty()) config_.cache_dir = default_cache_dir();
    }

    const OeisConfig& config() const { return config_; }

    BSequence fetch(const std::string& id, bool offline) {
        if (!is_valid_oeis_id(id)) {
            throw std::invalid_argument("oeis id must be 'A' followed by six digits: " + id);
        }
        const std::lock_guard<std::mutex> flight(flight_mutex(id));

        const std::filesystem::path cache_file = config_.cache_dir / (id + ".txt");
        if (std::filesystem::exists(cache_file)) {
            return parse_bfile(id, read_file(cache_file));
        }
        if (offline) {
            const std::string_view fixture = fixtures::fixture_for(id);
            if (fixture.empty()) {
                throw std::runtime_error(id + ": no bundled fixture and offline mode is on");
            }
            return parse_bfile(id, fixture);
        }
        const std::string body = fetch_remote(id);
        BSequence seq = parse_bfile(id, body);  // validate before caching
        write_cache(cache_file, body);
        return seq;
    }

private:
    // One in-flight fetch per id; the registry itself is tiny and append-only.
    static std::mutex& flight_mutex(const std::string& id) {
        static std::mutex registry_mutex;
        static std::map<std::string, std::mutex> registry;
        const std::lock_guard<std::mutex> lock(registry_mutex);
        return registry[id];
    }

    static std::string read_file(const std::filesystem::path& file) {
        std::ifstream in(file, std::ios::binary);
        if (!in) throw std::runtime_error("cannot read cache file " + file.string());
        std::ostringstream body;
        body << in.rdbuf();
        return body.str();
    }

    void write_cache(const std::filesystem::path& cache_file, const std::string& body) const {
        std::filesystem::create_directories(config_.cache_dir);
        const std::filesystem::path tmp = cache_file.string() + ".tmp";
        {
            std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
            out << body;
            if (!out) throw std::runtime_error("cannot write cache file " + tmp.string());
        }
        std::filesystem::rename(tmp, cache_file);
    }

    std::string fetch_remote(const std::string& id) const {
        const std::string target = "/" + id + "/b" + id.substr(1) + ".txt";
        if (config_.use_tls) {
#if defined(CPPHTTPLIB_OPENSSL_SUPPORT)
            httplib::SSLClient client(config_.host, config_.port);
            return get_body(client, target);
#else
            throw std::runtime_error("unavailable: built without TLS support");
#endif
        }
        httplib::Client client(config_.host, config_.port);
        return get_body(client, target);
    }

    template <typename ClientT>
    std::string get_body(ClientT& client, const std::string& target) const {
        client.set_connection_timeout(10, 0);
        client.set_read_timeout(30, 0);
        client.set_follow_location(true);
        auto res = client.Get(target.c_str());
        if (!res || res->status != 200) {
            throw std::runtime_error("unavailable: GET " + target + " from " + config_.host +
                                     " failed and no cached copy exists");
        }
        return res->body;
    }

    OeisConfig config_;
};

}  // namespace invseq_lab
