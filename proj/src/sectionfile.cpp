#include "qclass/sectionfile.hpp"

#include <fstream>
#include <sstream>

#include "qclass/errors.hpp"

namespace qclass {

namespace {

std::string strip(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

bool Section::has(const std::string& key) const {
    for (const auto& [k, v] : entries)
        if (k == key) return true;
    return false;
}

std::string Section::get(const std::string& key) const {
    const std::string* found = nullptr;
    for (const auto& [k, v] : entries) {
        if (k != key) continue;
        if (found) throw ParseError("repeated key '" + key + "' in section [" + name + "]");
        found = &v;
    }
    if (!found) throw ParseError("missing key '" + key + "' in section [" + name + "]");
    return *found;
}

std::string Section::get_or(const std::string& key, const std::string& fallback) const {
    return has(key) ? get(key) : fallback;
}

std::vector<Section> parse_sections(const std::string& text) {
    std::vector<Section> sections;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw = raw.substr(0, hash);
        const std::string line = strip(raw);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
            sections.push_back({strip(line.substr(1, line.size() - 2)), {}});
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(lineno) + ": expected 'key = value'");
        if (sections.empty())
            throw ParseError("line " + std::to_string(lineno) + ": entry before any section");
        sections.back().entries.emplace_back(strip(line.substr(0, eq)),
                                             strip(line.substr(eq + 1)));
    }
    return sections;
}

std::vector<Section> load_sections(const std::string& path) {
    std::ifstream file(path);
    if (!file) throw ParseError("cannot read '" + path + "'");
    std::ostringstream buf;
    buf << file.rdbuf();
    return parse_sections(buf.str());
}

}  // namespace qclass
