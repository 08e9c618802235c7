#pragma once

#include <string>
#include <utility>
#include <vector>

namespace qclass {

// One "[name]" block with its "key = value" lines in file order.  Keys may
// contain internal spaces (pairing and gw3 rows use them); '#' starts a
// comment; blank lines are skipped.  Sections may repeat.
struct Section {
    std::string name;
    std::vector<std::pair<std::string, std::string>> entries;

    bool has(const std::string& key) const;
    // Value of a unique key; throws ParseError when absent or repeated.
    std::string get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
};

std::vector<Section> parse_sections(const std::string& text);
std::vector<Section> load_sections(const std::string& path);

}  // namespace qclass
