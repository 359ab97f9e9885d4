#include "qhopf/render.hpp"

#include <json.hpp>

#include <sstream>

namespace qhopf {

namespace {

// One signed piece of a sum: `body` is sign-free, `negative` tells the
// joiner which connective to use.
struct Piece {
    bool negative;
    std::string body;
};

std::string join_pieces(const std::vector<Piece>& pieces) {
    if (pieces.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < pieces.size(); ++i) {
        if (i == 0)
            out += pieces[i].negative ? "-" : "";
        else
            out += pieces[i].negative ? " - " : " + ";
        out += pieces[i].body;
    }
    return out;
}

std::string h_power(int k) {
    if (k == 1) return "h";
    return "h^" + std::to_string(k);
}

// |c| h^k as text; `show_unit_coeff` keeps "1" when there is no h part and
// nothing else to print.
std::string magnitude(const Rat& c, int k, bool show_unit_coeff) {
    Rat m = c < 0 ? Rat(-c) : c;
    std::string out;
    if (m != 1) out = rat_str(m);
    if (k > 0) {
        if (!out.empty()) out += " ";
        out += h_power(k);
    }
    if (out.empty() && show_unit_coeff) out = "1";
    return out;
}

Piece hpoly_term_piece(const Rat& c, int k, const std::string& mono) {
    std::string coeff = magnitude(c, k, mono.empty());
    std::string body = coeff;
    if (!mono.empty()) {
        if (!coeff.empty()) body += " ";
        body += mono;
    }
    return {c < 0, body};
}

// Renders coeff * mono as one or more pieces. Multi-term coefficients get
// parenthesized so the sum structure stays unambiguous next to a monomial.
void append_term(std::vector<Piece>& pieces, const HPoly& coeff, const std::string& mono) {
    const auto& ts = coeff.terms();
    if (ts.empty()) return;
    if (ts.size() == 1) {
        pieces.push_back(hpoly_term_piece(ts[0].second, ts[0].first, mono));
        return;
    }
    if (mono.empty()) {
        for (const auto& [k, c] : ts) pieces.push_back(hpoly_term_piece(c, k, ""));
        return;
    }
    std::vector<Piece> inner;
    for (const auto& [k, c] : ts) inner.push_back(hpoly_term_piece(c, k, ""));
    pieces.push_back({false, "(" + join_pieces(inner) + ") " + mono});
}

template <class K, class Render>
std::string render_comb(const LinComb<K>& e, Render render_key) {
    std::vector<Piece> pieces;
    for (const auto& [k, c] : e.sorted_terms()) append_term(pieces, c, render_key(k));
    return join_pieces(pieces);
}

}  // namespace

std::string to_string(const HPoly& p) {
    std::vector<Piece> pieces;
    append_term(pieces, p, "");
    return join_pieces(pieces);
}

std::string to_string(const Necklace& n, const DoubleQuiver& dq) {
    if (n.is_idempotent()) return "@" + dq.vertex_name(n.vertex());
    std::string out = "(";
    for (std::size_t i = 0; i < n.word().size(); ++i) {
        if (i) out += " ";
        out += dq.dart_name(n.word()[i]);
    }
    return out + ")";
}

std::string to_string(const NecklaceMonomial& m, const DoubleQuiver& dq) {
    if (m.is_unit()) return "1";
    std::string out;
    for (std::size_t i = 0; i < m.factors().size(); ++i) {
        if (i) out += "&";
        out += to_string(m.factors()[i], dq);
    }
    return out;
}

std::string to_string(const SymLElement& e, const DoubleQuiver& dq) {
    return render_comb(e, [&](const NecklaceMonomial& m) {
        std::string s = to_string(m, dq);
        return s == "1" ? std::string() : s;
    });
}

std::string to_string(const TensorElement& t, const DoubleQuiver& dq) {
    return render_comb(t, [&](const MonoPair& k) {
        return to_string(k.a, dq) + " # " + to_string(k.b, dq);
    });
}

std::string to_string(const Tensor3Element& t, const DoubleQuiver& dq) {
    return render_comb(t, [&](const MonoTriple& k) {
        return to_string(k.a, dq) + " # " + to_string(k.b, dq) + " # " + to_string(k.c, dq);
    });
}

std::string to_string(const HeightedCollection& c, const DoubleQuiver& dq) {
    if (c.factors().empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < c.factors().size(); ++i) {
        if (i) out += "&";
        const HeightedNecklace& f = c.factors()[i];
        if (f.is_idempotent()) {
            out += "@" + dq.vertex_name(f.vertex());
        } else {
            for (auto [d, ht] : f.word())
                out += "(" + dq.dart_name(d) + "," + std::to_string(ht) + ")";
        }
    }
    return out;
}

std::string to_string(const HeightedElement& e, const DoubleQuiver& dq) {
    return render_comb(e, [&](const HeightedCollection& c) {
        std::string s = to_string(c, dq);
        return s == "1" ? std::string() : s;
    });
}

std::string to_string(VarId v, const DoubleQuiver& dq) {
    return "M[" + dq.dart_name(var_dart(v)) + "][" + std::to_string(var_row(v)) + "][" +
           std::to_string(var_col(v)) + "]";
}

std::string to_string(const RepMono& m, const DoubleQuiver& dq) {
    if (m.is_one()) return "1";
    std::string out;
    for (const auto& [v, k] : m.powers()) {
        if (!out.empty()) out += " ";
        out += to_string(v, dq);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

std::string to_string(const RepPoly& p, const DoubleQuiver& dq) {
    return render_comb(p, [&](const RepMono& m) {
        std::string s = to_string(m, dq);
        return s == "1" ? std::string() : s;
    });
}

std::string to_string(const DiffTerm& t, const DoubleQuiver& dq) {
    std::string out;
    if (!t.coord.is_one()) out = to_string(t.coord, dq);
    for (const auto& [v, k] : t.deriv.powers()) {
        if (!out.empty()) out += " ";
        out += "d/d" + to_string(v, dq);
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;  // empty means the identity operator
}

std::string to_string(const DiffOp& op, const DoubleQuiver& dq) {
    return render_comb(op, [&](const DiffTerm& t) { return to_string(t, dq); });
}

namespace {

using nlohmann::json;

json coeff_json(const HPoly& c) {
    json a = json::array();
    for (const auto& [k, r] : c.terms()) a.push_back({k, rat_str(r)});
    return a;
}

json factor_json(const Necklace& f, const DoubleQuiver& dq) {
    if (f.is_idempotent()) return {{"type", "vertex"}, {"name", dq.vertex_name(f.vertex())}};
    json darts = json::array();
    for (DartId d : f.word()) darts.push_back(dq.dart_name(d));
    return {{"type", "word"}, {"darts", darts}};
}

json mono_json(const NecklaceMonomial& m, const DoubleQuiver& dq) {
    json a = json::array();
    for (const Necklace& f : m.factors()) a.push_back(factor_json(f, dq));
    return a;
}

json heighted_json(const HeightedCollection& c, const DoubleQuiver& dq) {
    json a = json::array();
    for (const HeightedNecklace& f : c.factors()) {
        if (f.is_idempotent()) {
            a.push_back({{"type", "vertex"}, {"name", dq.vertex_name(f.vertex())}});
        } else {
            json letters = json::array();
            for (auto [d, ht] : f.word()) letters.push_back({dq.dart_name(d), ht});
            a.push_back({{"type", "word"}, {"letters", letters}});
        }
    }
    return a;
}

json vars_json(const RepMono& m, const DoubleQuiver& dq) {
    json a = json::array();
    for (const auto& [v, k] : m.powers())
        a.push_back({{"var", to_string(v, dq)}, {"power", k}});
    return a;
}

}  // namespace

std::string json_string(const SymLElement& e, const DoubleQuiver& dq) {
    json terms = json::array();
    for (const auto& [m, c] : e.sorted_terms())
        terms.push_back({{"coeff", coeff_json(c)}, {"monomial", mono_json(m, dq)}});
    return json{{"terms", terms}}.dump();
}

std::string json_string(const TensorElement& t, const DoubleQuiver& dq) {
    json terms = json::array();
    for (const auto& [k, c] : t.sorted_terms())
        terms.push_back({{"coeff", coeff_json(c)},
                         {"left", mono_json(k.a, dq)},
                         {"right", mono_json(k.b, dq)}});
    return json{{"terms", terms}}.dump();
}

std::string json_string(const HeightedElement& e, const DoubleQuiver& dq) {
    json terms = json::array();
    for (const auto& [k, c] : e.sorted_terms())
        terms.push_back({{"coeff", coeff_json(c)}, {"factors", heighted_json(k, dq)}});
    return json{{"terms", terms}}.dump();
}

std::string json_string(const RepPoly& p, const DoubleQuiver& dq) {
    json terms = json::array();
    for (const auto& [m, c] : p.sorted_terms())
        terms.push_back({{"coeff", coeff_json(c)}, {"vars", vars_json(m, dq)}});
    return json{{"terms", terms}}.dump();
}

std::string json_string(const DiffOp& op, const DoubleQuiver& dq) {
    json terms = json::array();
    for (const auto& [t, c] : op.sorted_terms())
        terms.push_back({{"coeff", coeff_json(c)},
                         {"coords", vars_json(t.coord, dq)},
                         {"derivs", vars_json(t.deriv, dq)}});
    return json{{"terms", terms}}.dump();
}

}  // namespace qhopf
