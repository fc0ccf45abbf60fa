#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include "facering/betti_table.hpp"
#include "facering/complex.hpp"
#include "facering/graph.hpp"

namespace facering {

using Instance = std::variant<SimplicialComplex, Graph>;

/// {"n":3,"facets":[[1,2],[1,3],[2,3]]}. {∅} writes "facets":[]; the void
/// complex adds "void":true. Facets in canonical order, compact, no newline.
std::string to_document(const SimplicialComplex& complex);
/// {"n":4,"edges":[[1,2],[2,3]]}
std::string to_document(const Graph& g);

/// Detects the document type by its "facets" or "edges" field. Throws
/// ParseError on malformed JSON or schema violations (including unsorted
/// inner arrays and out-of-range vertices).
Instance parse_document(std::string_view text);

/// 64-bit FNV-1a of the canonical document, 16 hex digits.
std::string digest(const SimplicialComplex& complex);
std::string digest(const Graph& g);

/// {"n":..,"field":..,"entries":[[i,j,b],...]}
std::string table_to_document(const GradedBettiTable& table);

}  // namespace facering
