#include "koszul/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "koszul/corpus.hpp"
#include "koszul/cps.hpp"
#include "koszul/errors.hpp"
#include "koszul/homology.hpp"
#include "koszul/io.hpp"
#include "koszul/quadratic.hpp"
#include "koszul/strata.hpp"
#include "koszul/verdict.hpp"

namespace koszul {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    if (std::cin.bad()) throw ParseError("cannot read standard input");
  } else {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw ParseError("cannot open \"" + path + "\"");
    buf << f.rdbuf();
    if (f.bad()) throw ParseError("cannot read \"" + path + "\"");
  }
  return buf.str();
}

std::int64_t word_cap_from_env() {
  const char* s = std::getenv("KOSZUL_WORD_CAP");
  if (!s || !*s) return kDefaultWordCap;
  try {
    size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != std::string(s).size() || v <= 0)
      throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw ParseError("KOSZUL_WORD_CAP must be a positive integer");
  }
}

// ---------------------------------------------------------------- validate

int cmd_validate(const CellComplex& X, bool pretty, std::ostream& out) {
  const bool pure = X.is_pure();
  const BoundarySphereReport spheres = check_boundary_spheres(X);
  nlohmann::json j;
  j["boundary_spheres"] = spheres.pass;
  j["cells"] = X.size();
  if (pure)
    j["codim1_connected"] = X.is_codim1_connected();
  else
    j["codim1_connected"] = nullptr;
  std::vector<long long> counts;
  for (int k = 0; k <= X.dimension(); ++k)
    counts.push_back(static_cast<long long>(X.cells_of_dim(k).size()));
  j["counts"] = counts;
  j["dimension"] = X.dimension();
  j["failures"] = spheres.failures;
  j["pure"] = pure;
  out << (pretty ? j.dump(2) : j.dump()) << "\n";
  return spheres.pass ? 0 : 1;
}

// ------------------------------------------------------------ check-corpus

std::string describe_stratum(int s) {
  return s == Stratification::kNonSingular ? std::string("non-singular")
                                           : std::to_string(s);
}

bool check_entry(const CorpusEntry& e, const std::vector<FieldDesc>& fds,
                 std::ostream& err) {
  std::vector<std::string> bad;
  auto mismatch = [&bad](const std::string& s) { bad.push_back(s); };
  try {
    CellComplex X = build_corpus_entry(e);

    if (X.dimension() != e.dimension)
      mismatch("dimension " + std::to_string(X.dimension()) + " != " +
               std::to_string(e.dimension));
    for (int k = 0; k <= X.dimension(); ++k) {
      const long long n = static_cast<long long>(X.cells_of_dim(k).size());
      const long long want =
          k < static_cast<int>(e.counts.size()) ? e.counts[k] : -1;
      if (n != want)
        mismatch("count[" + std::to_string(k) + "] " + std::to_string(n) +
                 " != " + std::to_string(want));
    }
    const bool pure = X.is_pure();
    if (pure != e.pure)
      mismatch(std::string("pure ") + (pure ? "true" : "false"));
    if (pure) {
      const bool c1 = X.is_codim1_connected();
      if (c1 != e.codim1)
        mismatch(std::string("codim1 ") + (c1 ? "true" : "false"));
    }

    // Round trips: the entry's own serialization must parse back, and the
    // canonical cell serialization must be a fixed point of parse+emit.
    const std::string s1 = emit_corpus_entry(e, false);
    CellComplex X1 = parse_complex(s1);
    if (X1.size() != X.size()) mismatch("reparse changed the cell count");
    const std::string s2 = emit_cw_json(X1.to_records(), X1.dimension(), false);
    CellComplex X2 = parse_complex(s2);
    const std::string s3 = emit_cw_json(X2.to_records(), X2.dimension(), false);
    if (s2 != s3) mismatch("canonical serialization is not a fixed point");
    if (!e.glued && s1 != s2) mismatch("raw records not canonical");

    std::map<std::string, int> want_stratum;
    for (const auto& [n, ids] : e.strata)
      for (const std::string& id : ids) want_stratum[id] = n;

    for (const FieldDesc& fd : fds) {
      const HomologyTable rh = homology(X, fd, true);
      if (rh.dims != e.reduced_homology) {
        std::string got = "[";
        for (size_t i = 0; i < rh.dims.size(); ++i)
          got += (i ? "," : "") + std::to_string(rh.dims[i]);
        mismatch("reduced homology over " + fd.name() + " = " + got + "]");
      }
      const Stratification S = stratify(X, fd);
      for (int i = 0; i < X.size(); ++i) {
        const auto it = want_stratum.find(X.cell(i).id);
        const int want = it == want_stratum.end()
                             ? Stratification::kNonSingular
                             : it->second;
        if (S.stratum[i] != want)
          mismatch("stratum(" + X.cell(i).id + ") over " + fd.name() + " = " +
                   describe_stratum(S.stratum[i]) + " != " +
                   describe_stratum(want));
      }
      if (e.koszul == CorpusEntry::kHypothesisFail) {
        if (pure && X.is_codim1_connected())
          mismatch("hypotheses unexpectedly hold");
      } else {
        const CrossCheck c = cross_check(X, fd);
        if (c.koszul != (e.koszul == CorpusEntry::kYes))
          mismatch(std::string("koszul over ") + fd.name() + " = " +
                   (c.koszul ? "true" : "false"));
      }
    }
  } catch (const std::exception& ex) {
    mismatch(std::string("exception: ") + ex.what());
  }
  for (const std::string& b : bad) err << "  " << e.name << ": " << b << "\n";
  return bad.empty();
}

int cmd_check_corpus(std::ostream& out, std::ostream& err) {
  const std::vector<FieldDesc> fds = {FieldDesc::parse("q"),
                                      FieldDesc::parse("gf:2")};
  std::vector<const CorpusEntry*> entries;
  for (const CorpusEntry& e : corpus()) entries.push_back(&e);
  std::sort(entries.begin(), entries.end(),
            [](const CorpusEntry* a, const CorpusEntry* b) {
              return a->name < b->name;
            });
  int failures = 0;
  for (const CorpusEntry* e : entries) {
    const bool ok = check_entry(*e, fds, err);
    out << (ok ? "OK   " : "FAIL ") << e->name << "\n";
    failures += ok ? 0 : 1;
  }
  out << entries.size() - failures << "/" << entries.size() << " entries ok\n";
  return failures == 0 ? 0 : 1;
}

// ----------------------------------------------------------------- driver

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{
      "Exact Koszulity, homology and singularity tools for finite regular "
      "cell complexes"};
  app.name("koszul");

  std::string input = "-";
  std::vector<std::string> field_names;
  bool pretty = false;
  app.add_option("--input,-i", input, "input file (default: standard input)");
  app.add_option("--field,-f", field_names,
                 "coefficient field, q or gf:P (repeatable; default gf:32003)");
  app.add_flag("--pretty", pretty, "indent JSON output");
  app.require_subcommand(1);

  CLI::App* validate = app.add_subcommand(
      "validate", "check structure, hypotheses and boundary spheres");
  CLI::App* homology_cmd =
      app.add_subcommand("homology", "reduced homology table");
  CLI::App* local = app.add_subcommand("local", "local homology at one cell");
  std::string cell_id;
  local->add_option("--cell", cell_id, "cell id")->required();
  CLI::App* cps = app.add_subcommand("cps", "bigraded pair cohomology table");
  CLI::App* strata =
      app.add_subcommand("strata", "singularity stratification");
  CLI::App* koszul_cmd =
      app.add_subcommand("koszul", "three Koszulity criteria, cross-checked");
  CLI::App* algebra = app.add_subcommand(
      "algebra", "graded algebra dimensions and the Hilbert series check");
  int max_degree = 4;
  algebra->add_option("--max-degree", max_degree, "highest degree (default 4)")
      ->check(CLI::NonNegativeNumber);
  CLI::App* examples = app.add_subcommand("examples", "built-in corpus");
  std::string ex_action;
  std::string ex_name;
  examples->add_option("action", ex_action, "list | emit")->required();
  examples->add_option("name", ex_name, "entry name (for emit)");
  CLI::App* check =
      app.add_subcommand("check-corpus",
                         "re-verify every frozen corpus fact over q and gf:2");
  for (CLI::App* sub : {validate, homology_cmd, local, cps, strata, koszul_cmd,
                        algebra, examples, check})
    sub->fallthrough();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  }

  std::vector<FieldDesc> fds;
  for (const std::string& s : field_names) fds.push_back(FieldDesc::parse(s));
  if (fds.empty()) fds.push_back(FieldDesc::parse("gf:32003"));

  if (examples->parsed()) {
    if (ex_action == "list") {
      for (const CorpusEntry& e : corpus())
        out << e.name << "  (" << e.description << ")\n";
      return 0;
    }
    if (ex_action == "emit") {
      const CorpusEntry* e = corpus_find(ex_name);
      if (!e)
        throw ParseError("no corpus entry named \"" + ex_name +
                         "\"; try `examples list`");
      out << emit_corpus_entry(*e, pretty) << "\n";
      return 0;
    }
    throw ParseError("examples action must be `list` or `emit`");
  }
  if (check->parsed()) return cmd_check_corpus(out, err);

  const CellComplex X = parse_complex(read_input(input));

  if (validate->parsed()) return cmd_validate(X, pretty, out);

  std::vector<std::string> reports;
  for (const FieldDesc& fd : fds) {
    if (homology_cmd->parsed()) {
      reports.push_back(homology_json(homology(X, fd, true), pretty));
    } else if (local->parsed()) {
      const int c = X.index_of(cell_id);
      if (c < 0) throw ValidationError("no cell with id \"" + cell_id + "\"");
      reports.push_back(homology_json(local_homology(X, c, fd), pretty));
    } else if (cps->parsed()) {
      reports.push_back(cps_json(cps_table(X, fd), pretty));
    } else if (strata->parsed()) {
      reports.push_back(strata_json(stratify(X, fd), X, pretty));
    } else if (koszul_cmd->parsed()) {
      reports.push_back(cross_check_json(cross_check(X, fd), pretty));
    } else if (algebra->parsed()) {
      reports.push_back(algebra_json(
          hilbert_probe(X, fd, max_degree, word_cap_from_env()), pretty));
    }
  }
  out << combine_reports(reports, pretty) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  try {
    return run(args, out, err);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const BlowupError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const HypothesisError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const DisagreementError& e) {
    err << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace koszul
