#pragma once

#include <string>
#include <vector>

#include "koszul/cell_complex.hpp"
#include "koszul/corpus.hpp"
#include "koszul/cps.hpp"
#include "koszul/glued.hpp"
#include "koszul/homology.hpp"
#include "koszul/quadratic.hpp"
#include "koszul/strata.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

// JSON envelopes. Two input formats, dispatched on the "format" key:
//   regular-cw/v1       {"format", "dimension", "cells": [{"id", "dim",
//                        "boundary": [[id, sign], ...], "label"?}]}
//   glued-simplicial/v1 {"format", "simplices": [[name, ...], ...],
//                        "identifications": [[[..], [..]], ...]}
// Unknown keys are rejected (ParseError), as is a declared dimension that
// disagrees with the cells.

// Parse either envelope and build the complex (ParseError on malformed
// input, ValidationError/HypothesisError per the builders).
CellComplex parse_complex(const std::string& text);

// Canonical serializations; parse(emit(x)) == x and emitting again is
// byte-identical. `pretty` switches 2-space indentation on.
std::string emit_cw_json(const std::vector<CellRecord>& records,
                         int dimension, bool pretty);
std::string emit_glued_json(const GluedSimplicialSpec& spec, bool pretty);
std::string emit_corpus_entry(const CorpusEntry& e, bool pretty);

// Report serializations (keys sorted, arrays in documented orders; cells
// always listed by (dim, id)).
std::string homology_json(const HomologyTable& t, bool pretty);
std::string cps_json(const CpsTable& t, bool pretty);
std::string strata_json(const Stratification& s, const CellComplex& X,
                        bool pretty);
std::string verdict_json(const Verdict& v, bool pretty);
std::string cross_check_json(const CrossCheck& c, bool pretty);
std::string algebra_json(const AlgebraReport& r, bool pretty);

// Plain-text dump of a cross-check used in DisagreementError messages.
std::string cross_check_dump(const CrossCheck& c);

// Multiple single-field reports combined: one object for one field, a JSON
// array in command-line order for several.
std::string combine_reports(const std::vector<std::string>& per_field,
                            bool pretty);

}  // namespace koszul
