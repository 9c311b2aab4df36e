#include "fano/planefile.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace fano {

Rat rational_from_string(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(text));
        Int num(text.substr(0, slash));
        Int den(text.substr(slash + 1));
        if (den == 0) throw DomainError("rational: zero denominator in '" + text + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw DomainError("rational: cannot parse '" + text + "'");
    }
}

std::string rational_to_string(const Rat& value) {
    if (denominator(value) == 1) return numerator(value).str();
    return numerator(value).str() + "/" + denominator(value).str();
}

LinMatrix plane_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("plane file: invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("m") || !doc.contains("n") || !doc.contains("k") ||
        !doc.contains("entries"))
        throw DomainError("plane file: need fields m, n, k, entries");
    if (!doc["m"].is_number_integer() || !doc["n"].is_number_integer() ||
        !doc["k"].is_number_integer())
        throw DomainError("plane file: m, n, k must be integers");
    int m = doc["m"].get<int>();
    int n = doc["n"].get<int>();
    int k = doc["k"].get<int>();
    if (m < 1 || n < 1 || k < 0) throw DomainError("plane file: need m, n >= 1 and k >= 0");
    LinMatrix M = LinMatrix::zero(m, n, k);
    const auto& entries = doc["entries"];
    if (!entries.is_array() || int(entries.size()) != m)
        throw DomainError("plane file: entries must be an m-row array");
    for (int i = 0; i < m; ++i) {
        const auto& row = entries[i];
        if (!row.is_array() || int(row.size()) != n)
            throw DomainError("plane file: each row must have n entries");
        for (int j = 0; j < n; ++j) {
            const auto& cell = row[j];
            if (!cell.is_array() || int(cell.size()) != k + 1)
                throw DomainError("plane file: each entry must be a (k+1)-vector");
            for (int t = 0; t <= k; ++t) {
                if (!cell[t].is_string())
                    throw DomainError("plane file: coefficients must be rational strings");
                M.entries[i][j].coeffs[t] = rational_from_string(cell[t].get<std::string>());
            }
        }
    }
    return M;
}

std::string plane_to_json(const LinMatrix& M) {
    nlohmann::ordered_json doc;
    doc["m"] = M.m;
    doc["n"] = M.n;
    doc["k"] = M.k;
    auto rows = nlohmann::ordered_json::array();
    for (int i = 0; i < M.m; ++i) {
        auto row = nlohmann::ordered_json::array();
        for (int j = 0; j < M.n; ++j) {
            auto cell = nlohmann::ordered_json::array();
            for (int t = 0; t <= M.k; ++t)
                cell.push_back(rational_to_string(M.entries[i][j].coeffs[t]));
            row.push_back(std::move(cell));
        }
        rows.push_back(std::move(row));
    }
    doc["entries"] = std::move(rows);
    return doc.dump(2) + "\n";
}

LinMatrix load_plane_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("plane file: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return plane_from_json(buf.str());
}

void save_plane_file(const LinMatrix& M, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw DomainError("plane file: cannot write '" + path + "'");
    out << plane_to_json(M);
}

}  // namespace fano
