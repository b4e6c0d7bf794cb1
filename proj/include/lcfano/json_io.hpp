// json_io.hpp
// Serialized polytope form {"dim":D,"vertices":[[..],..]}: lattice vertices
// as raw integer literals of arbitrary size, rational vertices as "p/q"
// strings. The writer is canonical (no whitespace, fixed key order), the
// parser is lenient about whitespace, and a hand-rolled scanner keeps
// oversized integers exact where a double would silently lose digits.
#pragma once

#include <cctype>
#include <cstddef>
#include <string>
#include <vector>

#include "lcfano/errors.hpp"
#include "lcfano/geometry.hpp"
#include "lcfano/rational.hpp"

namespace lcfano {

inline std::string write_polytope_json(std::size_t dim, const std::vector<IntVec>& vertices) {
    std::string s = "{\"dim\":" + std::to_string(dim) + ",\"vertices\":[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ',';
        s += '[';
        for (std::size_t j = 0; j < vertices[i].size(); ++j) {
            if (j) s += ',';
            s += to_string(vertices[i][j]);
        }
        s += ']';
    }
    return s + "]}";
}

inline std::string write_polytope_json(const LatticePolytope& p) {
    return write_polytope_json(p.dim(), p.vertices());
}

inline std::string write_rational_polytope_json(std::size_t dim, const RatMat& vertices) {
    std::string s = "{\"dim\":" + std::to_string(dim) + ",\"vertices\":[";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (i) s += ',';
        s += '[';
        for (std::size_t j = 0; j < vertices[i].size(); ++j) {
            if (j) s += ',';
            s += '"' + to_string(vertices[i][j]) + '"';
        }
        s += ']';
    }
    return s + "]}";
}

namespace detail {

struct JsonScanner {
    const std::string& text;
    std::size_t pos = 0;

    explicit JsonScanner(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("polytope json: unexpected end of input");
        return text[pos];
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("polytope json: expected '") + c + "' at offset " +
                             std::to_string(pos));
        ++pos;
    }
    bool try_consume(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string string_token() {
        expect('"');
        std::string out;
        while (pos < text.size() && text[pos] != '"') {
            if (text[pos] == '\\')
                throw ParseError("polytope json: escapes are not used in this format");
            out += text[pos++];
        }
        if (pos >= text.size()) throw ParseError("polytope json: unterminated string");
        ++pos;
        return out;
    }
    std::string integer_token() {
        skip_ws();
        std::string out;
        if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) out += text[pos++];
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
            out += text[pos++];
        if (out.empty() || out == "-" || out == "+")
            throw ParseError("polytope json: expected an integer at offset " +
                             std::to_string(pos));
        return out;
    }
};

template <typename Entry>
struct ParsedPolytope {
    std::size_t dim = 0;
    std::vector<std::vector<Entry>> vertices;
};

// Shared object scan; the entry reader distinguishes the two formats.
template <typename Entry, typename ReadEntry>
ParsedPolytope<Entry> parse_polytope_object(const std::string& text, ReadEntry read_entry) {
    JsonScanner sc(text);
    ParsedPolytope<Entry> out;
    bool have_dim = false, have_vertices = false;
    sc.expect('{');
    for (;;) {
        const std::string key = sc.string_token();
        sc.expect(':');
        if (key == "dim") {
            if (have_dim) throw ParseError("polytope json: duplicate dim");
            const Int d = int_from_string(sc.integer_token());
            if (d < 1 || !d.fits_ulong_p()) throw ParseError("polytope json: bad dim");
            out.dim = static_cast<std::size_t>(d.get_ui());
            have_dim = true;
        } else if (key == "vertices") {
            if (have_vertices) throw ParseError("polytope json: duplicate vertices");
            sc.expect('[');
            if (!sc.try_consume(']')) {
                do {
                    sc.expect('[');
                    std::vector<Entry> row;
                    if (!sc.try_consume(']')) {
                        do {
                            row.push_back(read_entry(sc));
                        } while (sc.try_consume(','));
                        sc.expect(']');
                    }
                    out.vertices.push_back(std::move(row));
                } while (sc.try_consume(','));
                sc.expect(']');
            }
            have_vertices = true;
        } else {
            throw ParseError("polytope json: unknown key \"" + key + "\"");
        }
        if (sc.try_consume(',')) continue;
        sc.expect('}');
        break;
    }
    sc.skip_ws();
    if (sc.pos != text.size()) throw ParseError("polytope json: trailing content");
    if (!have_dim || !have_vertices)
        throw ParseError("polytope json: need both dim and vertices");
    for (const auto& v : out.vertices)
        if (v.size() != out.dim)
            throw ParseError("polytope json: vertex length does not match dim");
    return out;
}

}  // namespace detail

inline LatticePolytope parse_lattice_polytope(const std::string& text,
                                              std::size_t vertex_cap = kDefaultVertexCap) {
    auto parsed = detail::parse_polytope_object<Int>(
        text, [](detail::JsonScanner& sc) { return int_from_string(sc.integer_token()); });
    return LatticePolytope(parsed.dim, std::move(parsed.vertices), vertex_cap);
}

struct RationalPolytopeData {
    std::size_t dim = 0;
    RatMat vertices;
};

inline RationalPolytopeData parse_rational_polytope(const std::string& text) {
    auto parsed = detail::parse_polytope_object<Rat>(text, [](detail::JsonScanner& sc) {
        if (sc.peek() == '"') return rat_from_string(sc.string_token());
        return Rat(int_from_string(sc.integer_token()));
    });
    RationalPolytopeData out;
    out.dim = parsed.dim;
    out.vertices = std::move(parsed.vertices);
    return out;
}

}  // namespace lcfano
