#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "vsym/rows.hpp"
#include "vsym/witt.hpp"

namespace vsym {

namespace io {

using nlohmann::json;

inline json load_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open file: " + path.string());
    json j;
    in >> j;
    return j;
}

inline MonomialOrder parse_order(const std::string& name) {
    if (name == "degrevlex") return MonomialOrder::degrevlex();
    if (name == "lex") return MonomialOrder::lex();
    throw std::runtime_error("unknown monomial order: " + name);
}

inline std::string order_name(const MonomialOrder& ord) {
    return ord.kind == MonomialOrder::Kind::lex ? "lex" : "degrevlex";
}

// {"vars": ["x1",...], "relations": ["x1*y1+...-1"], "order": "degrevlex"}
inline RingPtr ring_from_json(const json& j) {
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::vector<std::string> rels;
    if (j.contains("relations")) rels = j.at("relations").get<std::vector<std::string>>();
    MonomialOrder ord = MonomialOrder::degrevlex();
    if (j.contains("order")) ord = parse_order(j.at("order").get<std::string>());
    return ring_make(vars, rels, ord);
}

inline RingPtr load_ring(const std::filesystem::path& path) {
    return ring_from_json(load_json(path));
}

// {"ring": "<file>", "row": ["x","y","z"], "certificate": ["x","y","z"]}
// "certificate" optional; "ring" resolved relative to the row file.
struct RowFile {
    RingPtr ring;
    std::vector<RingElement> entries;
    std::optional<std::vector<RingElement>> certificate;
};

inline RowFile row_from_json(const json& j, const std::filesystem::path& base_dir) {
    RowFile out;
    if (j.at("ring").is_string()) {
        out.ring = load_ring(base_dir / j.at("ring").get<std::string>());
    } else {
        out.ring = ring_from_json(j.at("ring"));  // inline presentation
    }
    for (const auto& s : j.at("row"))
        out.entries.push_back(elem(out.ring, s.get<std::string>()));
    if (j.contains("certificate")) {
        std::vector<RingElement> cert;
        for (const auto& s : j.at("certificate"))
            cert.push_back(elem(out.ring, s.get<std::string>()));
        out.certificate = std::move(cert);
    }
    return out;
}

inline RowFile load_row(const std::filesystem::path& path) {
    return row_from_json(load_json(path), path.parent_path());
}

// [{"i":1,"j":2,"lambda":"w"}, ...]  (1-based indices on the wire)
inline std::vector<ElementaryMove> moves_from_json(const json& j, const RingPtr& ring) {
    std::vector<ElementaryMove> moves;
    for (const auto& m : j) {
        std::size_t i = m.at("i").get<std::size_t>();
        std::size_t jj = m.at("j").get<std::size_t>();
        if (i == 0 || jj == 0) throw std::runtime_error("move indices are 1-based");
        moves.push_back({i - 1, jj - 1, elem(ring, m.at("lambda").get<std::string>())});
    }
    return moves;
}

// {"ring": "<file>", "entries": [["0","-a1",...],...]}
inline SkewMatrix matrix_from_json(const json& j, const std::filesystem::path& base_dir) {
    RingPtr ring = j.at("ring").is_string()
                       ? load_ring(base_dir / j.at("ring").get<std::string>())
                       : ring_from_json(j.at("ring"));
    const auto& rows = j.at("entries");
    Matrix m(ring, rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t r = 0; r < m.rows; ++r) {
        if (rows[r].size() != m.cols) throw std::runtime_error("ragged matrix entries");
        for (std::size_t c = 0; c < m.cols; ++c)
            m.at(r, c) = elem(ring, rows[r][c].get<std::string>());
    }
    return skew_make(std::move(m));
}

inline SkewMatrix load_matrix(const std::filesystem::path& path) {
    return matrix_from_json(load_json(path), path.parent_path());
}

inline json matrix_to_json(const SkewMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.size(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(row);
    }
    return rows;
}

inline json row_to_json(const UnimodularRow& row) {
    json j;
    j["row"] = json::array();
    j["certificate"] = json::array();
    for (const auto& e : row.entries) j["row"].push_back(e.str());
    for (const auto& e : row.certificate) j["certificate"].push_back(e.str());
    return j;
}

}  // namespace io

}  // namespace vsym
