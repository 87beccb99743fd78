#pragma once
#include <map>
#include <string>
#include "germ2/germ.hpp"
#include "germ2/jet1.hpp"
#include "germ2/chartmap.hpp"

namespace germ2 {

/// Parsed .germ document. Coefficients are exact Gaussian rationals; floats
/// are rejected at the lexer. Canonical rendering round-trips structurally.
struct GermDocument {
    enum Kind { Map, Field } kind = Map;
    std::string name = "F";
    int nvars = 2; // 1 or 2
    int truncation = 12;
    Jet2 cx{12}, cy{12}; // two-variable payload
    Jet1 c1;             // one-variable payload
    std::map<std::string, std::string> metadata;

    friend bool operator==(const GermDocument& a, const GermDocument& b) {
        return a.kind == b.kind && a.name == b.name && a.nvars == b.nvars &&
               a.truncation == b.truncation && a.cx == b.cx && a.cy == b.cy &&
               a.c1 == b.c1 && a.metadata == b.metadata;
    }
};

GermDocument parse_germ(const std::string& text);
std::string render_germ(const GermDocument& doc);

MapGerm doc_to_map(const GermDocument& doc);
VFieldGerm doc_to_field(const GermDocument& doc);
Jet1 doc_to_jet1(const GermDocument& doc);

GermDocument doc_from_map(const MapGerm& F, const std::string& name);
GermDocument doc_from_field(const VFieldGerm& X, const std::string& name);
GermDocument doc_from_jet1(const Jet1& h, const std::string& name);

// re-truncate or pad a document to a new truncation order
GermDocument doc_with_order(const GermDocument& doc, int order);

// univariate expression parsing (the rendered forms of Poly1 / RatFunc)
Poly1 parse_poly1(const std::string& text, const std::string& var = "v");
RatFunc parse_ratfunc(const std::string& text, const std::string& var = "v");
SemiSeries parse_semiseries_json(const std::string& text);

} // namespace germ2
