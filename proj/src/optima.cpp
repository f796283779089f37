#include "cover/optima.hpp"

#include <algorithm>
#include <cctype>

namespace cover {

const std::vector<std::pair<std::string, int>>& optima_table() {
    // Best known optima for the 65 OR-Library benchmark instances
    // (sets 4, 5, 6 and A-H; E-H are the files named scpnre..scpnrh).
    static const std::vector<std::pair<std::string, int>> table = {
        {"4.1", 429},  {"4.2", 512},  {"4.3", 516},  {"4.4", 494},  {"4.5", 512},
        {"4.6", 560},  {"4.7", 430},  {"4.8", 492},  {"4.9", 641},  {"4.10", 514},
        {"5.1", 253},  {"5.2", 302},  {"5.3", 226},  {"5.4", 242},  {"5.5", 211},
        {"5.6", 213},  {"5.7", 293},  {"5.8", 288},  {"5.9", 279},  {"5.10", 265},
        {"6.1", 138},  {"6.2", 146},  {"6.3", 145},  {"6.4", 131},  {"6.5", 161},
        {"A.1", 253},  {"A.2", 252},  {"A.3", 232},  {"A.4", 234},  {"A.5", 236},
        {"B.1", 69},   {"B.2", 76},   {"B.3", 80},   {"B.4", 79},   {"B.5", 72},
        {"C.1", 227},  {"C.2", 219},  {"C.3", 243},  {"C.4", 219},  {"C.5", 215},
        {"D.1", 60},   {"D.2", 66},   {"D.3", 72},   {"D.4", 62},   {"D.5", 61},
        {"E.1", 29},   {"E.2", 30},   {"E.3", 27},   {"E.4", 28},   {"E.5", 28},
        {"F.1", 14},   {"F.2", 15},   {"F.3", 14},   {"F.4", 14},   {"F.5", 13},
        {"G.1", 176},  {"G.2", 154},  {"G.3", 166},  {"G.4", 168},  {"G.5", 168},
        {"H.1", 63},   {"H.2", 63},   {"H.3", 59},   {"H.4", 58},   {"H.5", 55},
    };
    return table;
}

namespace {

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

bool all_digits(const std::string& s) {
    return !s.empty() && std::all_of(s.begin(), s.end(),
                                     [](unsigned char c) { return std::isdigit(c); });
}

std::string stem_of(const std::string& path) {
    std::size_t slash = path.find_last_of("/\\");
    std::string name = slash == std::string::npos ? path : path.substr(slash + 1);
    std::size_t dot = name.rfind('.');
    // Bare ids like "4.1" or "H.5" keep their dot; file names drop the
    // extension (which is never all digits).
    if (dot != std::string::npos && dot > 0 && !all_digits(name.substr(dot + 1))) {
        name = name.substr(0, dot);
    }
    return name;
}

}  // namespace

std::string canonical_instance_id(const std::string& path_or_name) {
    std::string stem = stem_of(path_or_name);
    std::string low = lower(stem);

    // Already canonical ("4.10", "g.2")?
    std::size_t dot = low.find('.');
    if (dot != std::string::npos && all_digits(low.substr(dot + 1))) {
        std::string head = low.substr(0, dot);
        if (all_digits(head)) return stem;
        if (head.size() == 1 && head[0] >= 'a' && head[0] <= 'h') {
            return std::string(1, static_cast<char>(std::toupper(head[0]))) + stem.substr(dot);
        }
    }

    // scpnre1..scpnrh5 are the paper's sets E..H.
    if (low.rfind("scpnr", 0) == 0 && low.size() >= 7) {
        char letter = low[5];
        std::string num = low.substr(6);
        if (letter >= 'e' && letter <= 'h' && all_digits(num)) {
            return std::string(1, static_cast<char>(std::toupper(letter))) + "." + num;
        }
    }

    // scp41..scp410, scp51.., scp61.., scpa1..scpd5. The unicost files
    // scpe1..scpe5 are a different set E and stay unmapped.
    if (low.rfind("scp", 0) == 0 && low.size() >= 5) {
        char set = low[3];
        std::string num = low.substr(4);
        if (all_digits(num)) {
            if (set >= '4' && set <= '6') return std::string(1, set) + "." + num;
            if (set >= 'a' && set <= 'd') {
                return std::string(1, static_cast<char>(std::toupper(set))) + "." + num;
            }
        }
    }
    return stem;
}

std::optional<int> known_optimum(const std::string& path_or_name) {
    std::string id = canonical_instance_id(path_or_name);
    for (const auto& [key, value] : optima_table()) {
        if (key == id) return value;
    }
    return std::nullopt;
}

}  // namespace cover
