#include "brieskorn/render.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace brieskorn {

std::map<std::pair<long long, long long>, Int> sparse_entries(const E1Page& page) {
    std::map<std::pair<long long, long long>, Int> out;
    for (const auto& [p, col] : page.columns)
        for (const auto& [total, rank] : col) out[{p, total - p}] = rank;
    return out;
}

std::string render_grid(const E1Page& page) {
    auto entries = sparse_entries(page);
    if (entries.empty()) return "(no entries in window)\n";

    std::vector<long long> ps;
    long long qmin = 0, qmax = 0;
    bool first = true;
    for (const auto& [key, rank] : entries) {
        (void)rank;
        if (std::find(ps.begin(), ps.end(), key.first) == ps.end()) ps.push_back(key.first);
        if (first || key.second < qmin) qmin = key.second;
        if (first || key.second > qmax) qmax = key.second;
        first = false;
    }
    std::sort(ps.begin(), ps.end());

    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> header{""};
    for (long long p : ps) header.push_back("p=" + std::to_string(p));
    cells.push_back(header);
    for (long long q = qmax; q >= qmin; --q) {
        std::vector<std::string> row{"q=" + std::to_string(q)};
        for (long long p : ps) {
            auto it = entries.find({p, q});
            row.push_back(it == entries.end() ? "." : it->second.str());
        }
        cells.push_back(row);
    }

    std::vector<size_t> width(cells[0].size(), 0);
    for (const auto& row : cells)
        for (size_t j = 0; j < row.size(); ++j) width[j] = std::max(width[j], row[j].size());

    std::ostringstream os;
    for (const auto& row : cells) {
        for (size_t j = 0; j < row.size(); ++j) {
            if (j) os << "  ";
            os << std::string(width[j] - row[j].size(), ' ') << row[j];
        }
        os << "\n";
    }
    return os.str();
}

std::map<std::pair<long long, long long>, Int> parse_grid(const std::string& text) {
    std::map<std::pair<long long, long long>, Int> out;
    std::istringstream is(text);
    std::string line;
    std::vector<long long> ps;
    bool have_header = false;
    while (std::getline(is, line)) {
        std::istringstream ls(line);
        std::vector<std::string> tok;
        std::string t;
        while (ls >> t) tok.push_back(t);
        if (tok.empty() || tok[0] == "(no") continue;
        if (!have_header) {
            for (const auto& s : tok) {
                if (s.rfind("p=", 0) != 0)
                    throw validation_error("grid parse: bad header token '" + s + "'");
                ps.push_back(std::stoll(s.substr(2)));
            }
            have_header = true;
            continue;
        }
        if (tok[0].rfind("q=", 0) != 0)
            throw validation_error("grid parse: bad row label '" + tok[0] + "'");
        long long q = std::stoll(tok[0].substr(2));
        if (tok.size() != ps.size() + 1)
            throw validation_error("grid parse: row width mismatch");
        for (size_t j = 1; j < tok.size(); ++j) {
            if (tok[j] == ".") continue;
            out[{ps[j - 1], q}] = Int(tok[j]);
        }
    }
    return out;
}

}  // namespace brieskorn
