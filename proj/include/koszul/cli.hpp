#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace koszul {

// Command-line driver, callable in-process for tests.
//
// koszul <command> [--input FILE] [--field q|gf:P]... [--pretty] [args]
//   validate     structure, purity, codim-1 connectivity, boundary spheres
//   homology     reduced homology table
//   local        --cell ID: local homology table at one cell
//   cps          bigraded cohomology table
//   strata       singularity stratification
//   koszul       three criteria cross-checked
//   algebra      --max-degree N: graded dims, dual dims, Hilbert cross-check
//   examples     list | emit NAME: built-in corpus
//   check-corpus re-verify every frozen corpus fact over q and gf:2
//
// Default field gf:32003; --field may repeat (reports become an array).
// Exit codes: 0 ok, 1 validation/limit failure, 2 hypothesis failure,
// 3 parse or I/O failure, 4 criterion disagreement.
int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err);

}  // namespace koszul
