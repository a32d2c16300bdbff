#pragma once

#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "mc/digraph.hpp"
#include "mc/monomial_ideal.hpp"
#include "mc/newton.hpp"
#include "mc/regularity.hpp"
#include "mc/simplicial.hpp"

namespace mc::io {

using nlohmann::json;

/// Parses "x1*x2^3, x2*x3^5, x3*x1^6". Variables are 1-based; n is the
/// largest index unless `nvars` is given. "1" is the unit monomial; blank
/// input or "0" is the zero ideal. Errors carry line and column.
MonomialIdeal parse_ideal_text(std::string_view text, std::optional<std::size_t> nvars = {});

/// {"n": 3, "gens": [[1,3,0], ...]}
MonomialIdeal parse_ideal_json(const json &doc);

/// JSON when the first non-blank character is '{', text grammar otherwise.
MonomialIdeal parse_ideal(std::string_view input, std::optional<std::size_t> nvars = {});

json ideal_to_json(const MonomialIdeal &ideal);

/// "5,1,1" or "[5,1,1]".
Exponent parse_exponent(std::string_view text);

/// {"n": 10, "edges": [[1,2], ...], "weights": {"7": 4}}; omitted weights are 1.
WeightedOrientedGraph parse_graph_json(const json &doc, bool normalize_sources = false);
WeightedOrientedGraph parse_graph(std::string_view text, bool normalize_sources = false);

json graph_to_json(const WeightedOrientedGraph &graph);

/// {"n": 3, "facets": [[1,2],[2,3]]}; [] is the void complex, [[]] is {emptyset}.
SimplicialComplex parse_complex_json(const json &doc);
SimplicialComplex parse_complex(std::string_view text);

json complex_to_json(const SimplicialComplex &complex);

json homology_to_json(const HomologyProfile &profile);

json exponent_to_json(const Exponent &a);

json vertex_set_to_json(VarSet set);

json certificate_to_json(const RationalCertificate &certificate);

/// {reg_ideal, reg_module, field, pairs_examined, witness?: {a, i, F}}.
json report_to_json(const RegularityReport &report, bool with_witness = true);

/// Reads the file at `source` if it exists, otherwise returns `source` itself.
std::string read_file_or_inline(const std::string &source);

} // namespace mc::io
