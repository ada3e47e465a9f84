#pragma once

// OEIS b-file handling: parsing, offline cache lookup, and term comparison
// with explicit offset alignment. Fetching lives in the CLI; this header
// never touches the network.

#include "npaths/numbers.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace npaths::oeis {

struct BFile {
    std::string id;        // "A001761"
    long long offset = 0;  // index of terms.front()
    std::vector<Int> terms;
};

// b-file format: one "index value" pair per line; '#' starts a comment;
// blank lines are ignored; indices must be consecutive.
inline BFile parse_bfile(const std::string& text, const std::string& id) {
    BFile b;
    b.id = id;
    std::istringstream in(text);
    std::string line;
    bool have_first = false;
    long long expect = 0;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        long long index;
        std::string value;
        if (!(ls >> index)) {
            std::string rest;
            if (ls.clear(), ls >> rest) throw std::runtime_error(id + ": malformed b-file line: " + line);
            continue;  // blank or comment-only
        }
        if (!(ls >> value)) throw std::runtime_error(id + ": b-file line without a value: " + line);
        std::string trailing;
        if (ls >> trailing) throw std::runtime_error(id + ": trailing junk on b-file line: " + line);
        if (!have_first) {
            b.offset = index;
            expect = index;
            have_first = true;
        }
        if (index != expect) throw std::runtime_error(id + ": non-consecutive index " + std::to_string(index));
        ++expect;
        try {
            b.terms.emplace_back(value);
        } catch (const std::exception&) {
            throw std::runtime_error(id + ": bad integer '" + value + "'");
        }
    }
    if (!have_first) throw std::runtime_error(id + ": empty b-file");
    return b;
}

inline std::string bfile_name(const std::string& id) {
    if (id.size() < 2 || id.front() != 'A') throw std::invalid_argument("OEIS ids look like A001761");
    return "b" + id.substr(1) + ".txt";
}

inline std::string bfile_url(const std::string& id) { return "https://oeis.org/" + id + "/" + bfile_name(id); }

inline std::optional<std::string> load_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::optional<BFile> load_cached_bfile(const std::filesystem::path& dir, const std::string& id) {
    auto text = load_file(dir / bfile_name(id));
    if (!text) return std::nullopt;
    return parse_bfile(*text, id);
}

struct MatchReport {
    bool match = true;
    size_t compared = 0;
    long long first_mismatch_index = -1;  // sequence index, not list position
    std::string detail;
};

// Compares produced[m] against the sequence value at index start_index + m.
// A produced list that runs past the b-file is an error, not a match.
inline MatchReport compare_terms(const BFile& b, const std::vector<Int>& produced, long long start_index) {
    MatchReport r;
    for (size_t m = 0; m < produced.size(); ++m) {
        long long index = start_index + static_cast<long long>(m);
        long long pos = index - b.offset;
        if (pos < 0 || pos >= static_cast<long long>(b.terms.size())) {
            r.match = false;
            r.first_mismatch_index = index;
            r.detail = b.id + " has no term at index " + std::to_string(index);
            return r;
        }
        if (b.terms[static_cast<size_t>(pos)] != produced[m]) {
            r.match = false;
            r.first_mismatch_index = index;
            r.detail = b.id + " term " + std::to_string(index) + " is " + b.terms[static_cast<size_t>(pos)].str() +
                       ", produced " + produced[m].str();
            return r;
        }
        ++r.compared;
    }
    return r;
}

}  // namespace npaths::oeis
