#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "ssc/fields.hpp"
#include "ssc/linear_sets.hpp"
#include "ssc/matrix.hpp"
#include "ssc/subspace.hpp"
#include "ssc/subspace_code.hpp"

namespace ssc {

using ordered_json = nlohmann::ordered_json;

/// Self-describing on-disk form of a subspace code: the field modulus travels
/// with the data, so files are portable across implementations with different
/// internal encodings. Entries are plain integers 0..q-1.
struct CodeFile {
    static constexpr const char* kFormat = "ssc-code/1";

    FieldCtx field;            // F_{q^k} used to build the code
    uint32_t ambient = 0;      // n
    SubspaceCode code;         // codewords with optional provenance labels
    ordered_json meta = ordered_json::object();  // construction name + parameters
    std::optional<Subspace> uSpace;              // reference subspace, if any
    uint32_t duplicatesDropped = 0;              // filled by load

    CodeFile(FieldCtx f, SubspaceCode c)
        : field(std::move(f)), ambient((uint32_t)c.ambient()), code(std::move(c)) {}
};

namespace detail {

inline ordered_json subspace_rows_json(const Subspace& S) {
    ordered_json rows = ordered_json::array();
    for (std::size_t i = 0; i < S.dim(); ++i) {
        ordered_json row = ordered_json::array();
        for (uint32_t v : S.basis().row(i)) row.push_back(v);
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Subspace subspace_from_json(const ordered_json& rows, uint32_t q, uint32_t ambient,
                                   const char* what) {
    if (!rows.is_array() || rows.empty())
        throw std::runtime_error(std::string(what) + ": expected a non-empty array of rows");
    MatrixGF m(q, rows.size(), ambient);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        if (!row.is_array() || row.size() != ambient)
            throw std::runtime_error(std::string(what) + ": row of wrong length");
        for (std::size_t j = 0; j < ambient; ++j) {
            const auto& cell = row[j];
            if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() >= q)
                throw std::runtime_error(std::string(what) + ": entry out of range");
            m.at(i, j) = cell.get<uint32_t>();
        }
    }
    return Subspace::from_matrix(m);
}

}  // namespace detail

inline ordered_json to_json(const CodeFile& f) {
    ordered_json j;
    j["format"] = CodeFile::kFormat;
    j["field"] = {{"q", f.field.q()}, {"k", f.field.k()}, {"modulus", f.field.modulus()}};
    j["ambient"] = f.ambient;
    j["codeDim"] = f.code.dim();
    ordered_json words = ordered_json::array();
    for (const Subspace& w : f.code.words()) words.push_back(detail::subspace_rows_json(w));
    j["codewords"] = std::move(words);
    bool any_label = false;
    for (const std::string& s : f.code.labels())
        if (!s.empty()) { any_label = true; break; }
    if (any_label) {
        ordered_json prov = ordered_json::array();
        for (const std::string& s : f.code.labels()) prov.push_back(s);
        j["provenance"] = std::move(prov);
    }
    j["meta"] = f.meta;
    if (f.uSpace) j["uSpace"] = detail::subspace_rows_json(*f.uSpace);
    return j;
}

inline CodeFile code_file_from_json(const ordered_json& j) {
    try {
        if (!j.is_object() || j.at("format").get<std::string>() != CodeFile::kFormat)
            throw std::runtime_error("unrecognized format tag");
        const auto& fld = j.at("field");
        const uint32_t q = fld.at("q").get<uint32_t>();
        const uint32_t k = fld.at("k").get<uint32_t>();
        const std::vector<uint32_t> modulus = fld.at("modulus").get<std::vector<uint32_t>>();
        FieldCtx field(q, k, modulus);  // validates primality and irreducibility
        const uint32_t ambient = j.at("ambient").get<uint32_t>();
        const uint32_t code_dim = j.at("codeDim").get<uint32_t>();
        if (code_dim < 1 || code_dim > ambient) throw std::runtime_error("codeDim out of range");

        const auto& words = j.at("codewords");
        if (!words.is_array()) throw std::runtime_error("codewords must be an array");
        std::vector<std::string> labels;
        if (j.contains("provenance")) {
            labels = j.at("provenance").get<std::vector<std::string>>();
            if (labels.size() != words.size())
                throw std::runtime_error("provenance length mismatch");
        }

        SubspaceCode code(q, code_dim, ambient);
        uint32_t dropped = 0;
        for (std::size_t i = 0; i < words.size(); ++i) {
            Subspace w = detail::subspace_from_json(words[i], q, ambient, "codeword");
            if (w.dim() != code_dim) throw std::runtime_error("codeword has wrong dimension");
            if (!code.insert(std::move(w), labels.empty() ? std::string() : labels[i])) ++dropped;
        }

        CodeFile out(std::move(field), std::move(code));
        out.ambient = ambient;
        out.duplicatesDropped = dropped;
        if (j.contains("meta")) out.meta = j.at("meta");
        if (j.contains("uSpace"))
            out.uSpace = detail::subspace_from_json(j.at("uSpace"), q, ambient, "uSpace");
        return out;
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("code file parse error: ") + e.what());
    }
}

inline std::string serialize_code_file(const CodeFile& f) { return to_json(f).dump(2) + "\n"; }

inline void save_code_file(const CodeFile& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << serialize_code_file(f);
    if (!out) throw std::runtime_error("write failed: " + path);
}

inline CodeFile load_code_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("code file parse error: ") + e.what());
    }
    return code_file_from_json(j);
}

// ============================================================================
// q-system wire form: {"r": int, "u": int, "basis": [[enc, ...], ...]}
// ============================================================================

inline ordered_json to_json(const QSystem& U) {
    ordered_json j;
    j["r"] = U.r;
    j["u"] = U.u();
    ordered_json basis = ordered_json::array();
    for (const auto& row : U.basis) {
        ordered_json jr = ordered_json::array();
        for (const ExtElement& e : row) jr.push_back(U.field.encoding(e));
        basis.push_back(std::move(jr));
    }
    j["basis"] = std::move(basis);
    return j;
}

inline QSystem q_system_from_json(const ordered_json& j, const FieldCtx& field) {
    try {
        const uint32_t r = j.at("r").get<uint32_t>();
        const uint32_t u = j.at("u").get<uint32_t>();
        const auto& basis = j.at("basis");
        if (!basis.is_array() || basis.size() != u)
            throw std::runtime_error("basis length disagrees with u");
        const std::uint64_t count = field.element_count();
        std::vector<std::vector<ExtElement>> rows;
        for (const auto& row : basis) {
            if (!row.is_array() || row.size() != r)
                throw std::runtime_error("basis vector of wrong length");
            std::vector<ExtElement> v;
            for (const auto& cell : row) {
                if (!cell.is_number_unsigned() || cell.get<std::uint64_t>() >= count)
                    throw std::runtime_error("element encoding out of range");
                v.push_back(field.from_encoding(cell.get<std::uint64_t>()));
            }
            rows.push_back(std::move(v));
        }
        return QSystem(field, r, std::move(rows));
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("q-system parse error: ") + e.what());
    }
}

inline QSystem load_q_system(const std::string& path, const FieldCtx& field) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open: " + path);
    ordered_json j;
    try {
        j = ordered_json::parse(in);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("q-system parse error: ") + e.what());
    }
    return q_system_from_json(j, field);
}

}  // namespace ssc
