#pragma once

#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "lcr/constructions.hpp"
#include "lcr/hlring.hpp"
#include "lcr/lcrng.hpp"

namespace lcr {

/// A parsed structure document. Kinds: "lcrng", "hlring", "ring".
struct StructureFile {
    std::string name;
    nlohmann::json metadata = nlohmann::json::object();
    std::variant<RawLcRng, RawHlRing, FiniteCommRing> payload;

    std::string kind() const
    {
        switch (payload.index()) {
        case 0: return "lcrng";
        case 1: return "hlring";
        default: return "ring";
        }
    }

    std::size_t order() const
    {
        return std::visit([](const auto& s) { return s.order(); }, payload);
    }

    bool operator==(const StructureFile& o) const
    {
        return name == o.name && metadata == o.metadata && payload == o.payload;
    }
};

namespace detail {

inline const nlohmann::json& field(const nlohmann::json& doc, const char* key)
{
    auto it = doc.find(key);
    if (it == doc.end())
        throw Error(ErrorCode::MalformedDocument, std::string("missing field \"") + key + "\"");
    return *it;
}

inline Elem element_field(const nlohmann::json& doc, const char* key, std::size_t order)
{
    const auto& v = field(doc, key);
    if (!v.is_number_unsigned() || v.get<std::uint64_t>() >= order)
        throw Error(ErrorCode::ShapeMismatch, std::string("\"") + key + "\" must be an element index below " +
                                                  std::to_string(order));
    return v.get<Elem>();
}

inline Table table_field(const nlohmann::json& doc, const char* key, std::size_t order, bool allow_null)
{
    const auto& v = field(doc, key);
    if (!v.is_array() || v.size() != order)
        throw Error(ErrorCode::ShapeMismatch, std::string("\"") + key + "\" must have " + std::to_string(order) + " rows");
    Table t(order);
    for (Elem i = 0; i < order; ++i) {
        const auto& row = v[i];
        if (!row.is_array() || row.size() != order)
            throw Error(ErrorCode::ShapeMismatch, std::string("\"") + key + "\" row " + std::to_string(i) +
                                                      " must have " + std::to_string(order) + " entries");
        for (Elem j = 0; j < order; ++j) {
            const auto& e = row[j];
            if (e.is_null() && allow_null)
                t(i, j) = undefined;
            else if (e.is_number_unsigned() && e.get<std::uint64_t>() < order)
                t(i, j) = e.get<Elem>();
            else
                throw Error(ErrorCode::ShapeMismatch, std::string("\"") + key + "\"[" + std::to_string(i) + "][" +
                                                          std::to_string(j) + "] is not an element index");
        }
    }
    return t;
}

inline std::string table_text(const Table& t)
{
    std::string out = "[\n";
    for (Elem i = 0; i < t.order(); ++i) {
        out += "    [";
        for (Elem j = 0; j < t.order(); ++j) {
            if (j)
                out += ", ";
            out += t.defined(i, j) ? std::to_string(t(i, j)) : std::string("null");
        }
        out += i + 1 < t.order() ? "],\n" : "]\n";
    }
    return out + "  ]";
}

} // namespace detail

/// Parses a structure document. Only the shape is checked: tables must be
/// square, of the declared order, with entries in range (null allowed in
/// "local_mul" only).
inline StructureFile parse_structure(std::string_view text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::MalformedDocument, e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorCode::MalformedDocument, "top level must be an object");

    StructureFile file;
    const auto& kind = detail::field(doc, "kind");
    if (!kind.is_string())
        throw Error(ErrorCode::MalformedDocument, "\"kind\" must be a string");
    if (auto it = doc.find("name"); it != doc.end()) {
        if (!it->is_string())
            throw Error(ErrorCode::MalformedDocument, "\"name\" must be a string");
        file.name = it->get<std::string>();
    }
    if (auto it = doc.find("metadata"); it != doc.end()) {
        if (!it->is_object())
            throw Error(ErrorCode::MalformedDocument, "\"metadata\" must be an object");
        file.metadata = *it;
    }
    const auto& order_field = detail::field(doc, "order");
    if (!order_field.is_number_unsigned() || order_field.get<std::uint64_t>() == 0 ||
        order_field.get<std::uint64_t>() > max_order)
        throw Error(ErrorCode::ShapeMismatch, "\"order\" must be between 1 and " + std::to_string(max_order));
    const auto n = order_field.get<std::size_t>();
    Table add = detail::table_field(doc, "add", n, false);

    const auto k = kind.get<std::string>();
    if (k == "lcrng") {
        file.payload = RawLcRng{std::move(add), detail::table_field(doc, "mul", n, false),
                                detail::table_field(doc, "local_mul", n, true),
                                detail::element_field(doc, "left_identity", n)};
    } else if (k == "hlring") {
        file.payload = RawHlRing{std::move(add), detail::table_field(doc, "bullet", n, false),
                                 detail::table_field(doc, "rarrow", n, false),
                                 detail::table_field(doc, "larrow", n, false),
                                 detail::element_field(doc, "identity", n)};
    } else if (k == "ring") {
        file.payload = FiniteCommRing{std::move(add), detail::table_field(doc, "mul", n, false),
                                      detail::element_field(doc, "one", n)};
    } else {
        throw Error(ErrorCode::UnknownKind, "\"" + k + "\"");
    }
    return file;
}

/// Canonical text: keys sorted, one table row per line.
inline std::string emit_structure(const StructureFile& file)
{
    std::vector<std::pair<std::string, std::string>> fields;
    auto elem = [](Elem e) { return std::to_string(e); };
    std::visit(
        [&](const auto& s) {
            using T = std::decay_t<decltype(s)>;
            fields.emplace_back("add", detail::table_text(s.add));
            if constexpr (std::is_same_v<T, RawLcRng>) {
                fields.emplace_back("left_identity", elem(s.left_identity));
                fields.emplace_back("local_mul", detail::table_text(s.local_mul));
                fields.emplace_back("mul", detail::table_text(s.mul));
            } else if constexpr (std::is_same_v<T, RawHlRing>) {
                fields.emplace_back("bullet", detail::table_text(s.bullet));
                fields.emplace_back("identity", elem(s.sigma));
                fields.emplace_back("larrow", detail::table_text(s.larrow));
                fields.emplace_back("rarrow", detail::table_text(s.rarrow));
            } else {
                fields.emplace_back("mul", detail::table_text(s.mul));
                fields.emplace_back("one", elem(s.one));
            }
        },
        file.payload);
    fields.emplace_back("kind", nlohmann::json(file.kind()).dump());
    fields.emplace_back("metadata", file.metadata.is_null() ? "{}" : file.metadata.dump());
    fields.emplace_back("name", nlohmann::json(file.name).dump());
    fields.emplace_back("order", std::to_string(file.order()));
    std::sort(fields.begin(), fields.end());

    std::string out = "{\n";
    for (std::size_t i = 0; i < fields.size(); ++i) {
        out += "  \"" + fields[i].first + "\": " + fields[i].second;
        out += i + 1 < fields.size() ? ",\n" : "\n";
    }
    return out + "}\n";
}

inline StructureFile make_file(std::string name, const LcRng& r) { return {std::move(name), nlohmann::json::object(), r.raw()}; }
inline StructureFile make_file(std::string name, const HlRing& h) { return {std::move(name), nlohmann::json::object(), h.raw()}; }
inline StructureFile make_file(std::string name, const FiniteCommRing& r) { return {std::move(name), nlohmann::json::object(), r}; }

} // namespace lcr
