#pragma once

// JSON and LaTeX forms.
//
// Element:  {"ring": "QQ[t,s,z,z^-1]", "terms": [[[4,4,-1], "1/1"], ...]}
//           terms sorted by exponent vector (variable order of the ring)
// Matrix:   {"ring": ..., "rows": r, "cols": c, "entries": [[terms, ...], ...]}
//           an entry may also be given as an expression string when reading
// Word:     [{"i": 1, "j": 2, "param": terms, "inverted": false}, ...]
//
// Ring descriptors are the coefficient ring name followed by the variable
// list, Laurent variables listed with their inverse and truncations as
// quotients: "QQ[t,s]/(t^2)", "ZZ[i][x]", "F2[e]/(e^2)[x]".

#include <array>
#include <sstream>
#include <string>
#include <string_view>

#include "nilk/matrix.hpp"
#include "nilk/parse.hpp"
#include "nilk/steinberg.hpp"

namespace nilk {

/// Coefficient ring names, longest first so prefix matching is unambiguous.
inline constexpr std::array<std::string_view, 6> kCoefficientNames = {"F2[e]/(e^2)", "ZZ[C4]", "ZZ[i]",
                                                                      "QQ",          "ZZ",     "F2"};

inline std::string_view coefficient_name_of(std::string_view descriptor) {
    for (auto name : kCoefficientNames)
        if (descriptor.substr(0, name.size()) == name)
            return name;
    throw ParseError("unknown coefficient ring in '" + std::string(descriptor) + "'");
}

inline RingPtr parse_ring_suffix(std::string_view suffix) {
    std::vector<Variable> vars;
    std::size_t pos = 0;
    auto fail = [&](const std::string &why) {
        throw ParseError("ring suffix '" + std::string(suffix) + "': " + why);
    };
    if (pos < suffix.size() && suffix[pos] == '[') {
        auto close = suffix.find(']', pos);
        if (close == std::string_view::npos)
            fail("missing ']'");
        std::string_view body = suffix.substr(pos + 1, close - pos - 1);
        pos = close + 1;
        std::size_t start = 0;
        while (start <= body.size()) {
            auto comma = body.find(',', start);
            std::string_view tok = body.substr(start, comma == std::string_view::npos ? body.size() - start
                                                                                         : comma - start);
            if (tok.empty())
                fail("empty variable name");
            if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
                std::string base(tok.substr(0, tok.size() - 3));
                auto it = std::find_if(vars.begin(), vars.end(), [&](const Variable &v) { return v.name == base; });
                if (it == vars.end())
                    fail("inverse of unlisted variable " + base);
                it->kind = VarKind::Laurent;
            } else {
                vars.push_back(ordinary(std::string(tok)));
            }
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
    }
    while (pos < suffix.size()) {
        if (suffix.substr(pos, 2) != "/(")
            fail("expected '/('");
        auto close = suffix.find(')', pos);
        if (close == std::string_view::npos)
            fail("missing ')'");
        std::string_view q = suffix.substr(pos + 2, close - pos - 2);
        auto caret = q.find('^');
        if (caret == std::string_view::npos)
            fail("quotient must look like v^k");
        std::string name(q.substr(0, caret));
        int bound = std::stoi(std::string(q.substr(caret + 1)));
        auto it = std::find_if(vars.begin(), vars.end(), [&](const Variable &v) { return v.name == name; });
        if (it == vars.end() || it->kind != VarKind::Ordinary)
            fail("cannot truncate " + name);
        it->kind = VarKind::Truncated;
        it->bound = bound;
        pos = close + 1;
    }
    return make_ring(std::move(vars));
}

template <Coefficient C>
RingPtr parse_ring_descriptor(std::string_view descriptor) {
    auto name = coefficient_name_of(descriptor);
    if (name != coeff_traits<C>::name)
        throw RingMismatch("expected coefficients " + std::string(coeff_traits<C>::name) + ", got '" +
                           std::string(descriptor) + "'");
    return parse_ring_suffix(descriptor.substr(name.size()));
}

template <Coefficient C>
json terms_to_json(const Poly<C> &p) {
    json terms = json::array();
    for (const auto &[e, c] : p.terms())
        terms.push_back(json::array({e, coeff_traits<C>::to_json(c)}));
    return terms;
}

template <Coefficient C>
Poly<C> terms_from_json(const json &j, const RingPtr &ring) {
    if (j.is_string())
        return parse_poly<C>(j.get<std::string>(), ring);
    if (!j.is_array())
        throw ParseError("expected term list or expression, got " + j.dump());
    typename Poly<C>::TermMap terms;
    for (const auto &t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array())
            throw ParseError("expected [exponents, coefficient], got " + t.dump());
        auto e = t[0].get<std::vector<int>>();
        if (e.size() != ring->size())
            throw ParseError("exponent vector " + t[0].dump() + " does not match ring");
        C c = coeff_traits<C>::from_json(t[1]);
        auto [it, fresh] = terms.try_emplace(e, c);
        if (!fresh)
            it->second = it->second + c;
    }
    try {
        return Poly<C>(ring, std::move(terms));
    } catch (const std::invalid_argument &ex) {
        throw ParseError(ex.what());
    }
}

template <Coefficient C>
json to_json(const Poly<C> &p) {
    return {{"ring", p.descriptor()}, {"terms", terms_to_json(p)}};
}

template <Coefficient C>
Poly<C> poly_from_json(const json &j) {
    auto ring = parse_ring_descriptor<C>(j.at("ring").get<std::string>());
    return terms_from_json<C>(j.at("terms"), ring);
}

template <Coefficient C>
json to_json(const Matrix<C> &m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(terms_to_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return {{"ring", m.descriptor()}, {"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(rows)}};
}

template <Coefficient C>
Matrix<C> matrix_from_json(const json &j, const RingPtr &ring) {
    if (!j.is_object())
        throw ParseError("matrix must be an object");
    const auto &entries = j.at("entries");
    if (!entries.is_array() || entries.empty())
        throw ParseError("matrix entries must be a non-empty array of rows");
    std::vector<std::vector<Poly<C>>> rows;
    for (const auto &row : entries) {
        if (!row.is_array())
            throw ParseError("matrix row must be an array");
        auto &out = rows.emplace_back();
        for (const auto &e : row)
            out.push_back(terms_from_json<C>(e, ring));
    }
    auto m = Matrix<C>::from_rows(ring, rows);
    if (j.contains("rows") && j.at("rows").get<std::size_t>() != m.rows())
        throw ParseError("declared row count does not match entries");
    if (j.contains("cols") && j.at("cols").get<std::size_t>() != m.cols())
        throw ParseError("declared column count does not match entries");
    return m;
}

template <Coefficient C>
Matrix<C> matrix_from_json(const json &j) {
    return matrix_from_json<C>(j, parse_ring_descriptor<C>(j.at("ring").get<std::string>()));
}

template <Coefficient C>
json to_json(const StWord<C> &w) {
    json out = json::array();
    for (const auto &l : w.letters())
        out.push_back({{"i", l.i}, {"j", l.j}, {"param", terms_to_json(l.param)}, {"inverted", l.inverted}});
    return out;
}

template <Coefficient C>
StWord<C> word_from_json(const json &j, const RingPtr &ring) {
    if (!j.is_array())
        throw ParseError("word must be an array of letters");
    StWord<C> w(ring);
    for (const auto &l : j)
        w.push({l.at("i").get<std::size_t>(), l.at("j").get<std::size_t>(), terms_from_json<C>(l.at("param"), ring),
                l.value("inverted", false)});
    return w;
}

/// Matrix from a rows-of-expression-strings table.
template <Coefficient C, class Rows>
Matrix<C> matrix_from_text(const Rows &rows, const RingPtr &ring) {
    std::vector<std::vector<Poly<C>>> out;
    for (const auto &row : rows) {
        auto &r = out.emplace_back();
        for (const auto &cell : row)
            r.push_back(parse_poly<C>(cell, ring));
    }
    return Matrix<C>::from_rows(ring, out);
}

/// pmatrix source, one row per line.
template <Coefficient C>
std::string to_latex(const Matrix<C> &m) {
    std::ostringstream out;
    out << "\\begin{pmatrix}\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (c)
                out << " & ";
            out << m(r, c).to_latex();
        }
        out << (r + 1 < m.rows() ? " \\\\\n" : "\n");
    }
    out << "\\end{pmatrix}\n";
    return out.str();
}

} // namespace nilk
