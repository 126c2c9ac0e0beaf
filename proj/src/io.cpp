#include "koszul/io.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "koszul/errors.hpp"

namespace koszul {

namespace {

using nlohmann::json;  // std::map-backed: object keys serialize sorted

std::string dump(const json& j, bool pretty) {
  return pretty ? j.dump(2) : j.dump();
}

void require_keys(const json& obj, const std::set<std::string>& allowed,
                  const char* what) {
  for (const auto& item : obj.items())
    if (!allowed.count(item.key()))
      throw ParseError(std::string("unknown key \"") + item.key() + "\" in " +
                       what);
}

const json& need(const json& obj, const char* key, const char* what) {
  auto it = obj.find(key);
  if (it == obj.end())
    throw ParseError(std::string("missing key \"") + key + "\" in " + what);
  return *it;
}

std::string need_string(const json& v, const char* what) {
  if (!v.is_string()) throw ParseError(std::string(what) + " must be a string");
  return v.get<std::string>();
}

long long need_int(const json& v, const char* what) {
  if (!v.is_number_integer())
    throw ParseError(std::string(what) + " must be an integer");
  return v.get<long long>();
}

std::vector<std::string> need_string_array(const json& v, const char* what) {
  if (!v.is_array()) throw ParseError(std::string(what) + " must be an array");
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(need_string(x, what));
  return out;
}

CellComplex parse_cw(const json& j) {
  require_keys(j, {"format", "dimension", "cells"}, "a regular-cw document");
  const long long declared =
      need_int(need(j, "dimension", "a regular-cw document"), "\"dimension\"");
  const json& cells = need(j, "cells", "a regular-cw document");
  if (!cells.is_array()) throw ParseError("\"cells\" must be an array");
  std::vector<CellRecord> records;
  long long maxdim = -1;
  for (const json& c : cells) {
    if (!c.is_object()) throw ParseError("each cell must be an object");
    require_keys(c, {"id", "dim", "boundary", "label"}, "a cell");
    CellRecord r;
    r.id = need_string(need(c, "id", "a cell"), "\"id\"");
    r.dim = static_cast<int>(need_int(need(c, "dim", "a cell"), "\"dim\""));
    maxdim = std::max(maxdim, static_cast<long long>(r.dim));
    if (auto it = c.find("label"); it != c.end())
      r.label = need_string(*it, "\"label\"");
    if (auto it = c.find("boundary"); it != c.end()) {
      if (!it->is_array()) throw ParseError("\"boundary\" must be an array");
      for (const json& f : *it) {
        if (!f.is_array() || f.size() != 2)
          throw ParseError("boundary entries must be [id, sign] pairs");
        r.boundary.emplace_back(
            need_string(f[0], "a boundary id"),
            static_cast<int>(need_int(f[1], "a boundary sign")));
      }
    }
    records.push_back(std::move(r));
  }
  if (declared != maxdim)
    throw ParseError("declared dimension " + std::to_string(declared) +
                     " disagrees with the cells (max dim " +
                     std::to_string(maxdim) + ")");
  return CellComplex::from_records(std::move(records));
}

CellComplex parse_glued(const json& j) {
  require_keys(j, {"format", "simplices", "identifications"},
               "a glued-simplicial document");
  GluedSimplicialSpec spec;
  const json& simp = need(j, "simplices", "a glued-simplicial document");
  if (!simp.is_array()) throw ParseError("\"simplices\" must be an array");
  for (const json& s : simp)
    spec.simplices.push_back(need_string_array(s, "a simplex"));
  if (auto it = j.find("identifications"); it != j.end()) {
    if (!it->is_array())
      throw ParseError("\"identifications\" must be an array");
    for (const json& pair : *it) {
      if (!pair.is_array() || pair.size() != 2)
        throw ParseError("each identification must be a pair of tuples");
      spec.identifications.push_back(
          {need_string_array(pair[0], "an identification tuple"),
           need_string_array(pair[1], "an identification tuple")});
    }
  }
  return build_glued_simplicial(spec);
}

json cw_to_json(const std::vector<CellRecord>& records, int dimension) {
  json cells = json::array();
  for (const CellRecord& r : records) {
    json c;
    c["id"] = r.id;
    c["dim"] = r.dim;
    json bnd = json::array();
    for (const auto& [fid, sign] : r.boundary)
      bnd.push_back(json::array({fid, sign}));
    c["boundary"] = std::move(bnd);
    if (!r.label.empty()) c["label"] = r.label;
    cells.push_back(std::move(c));
  }
  json j;
  j["format"] = "regular-cw/v1";
  j["dimension"] = dimension;
  j["cells"] = std::move(cells);
  return j;
}

json glued_to_json(const GluedSimplicialSpec& spec) {
  json j;
  j["format"] = "glued-simplicial/v1";
  j["simplices"] = spec.simplices;
  json ids = json::array();
  for (const auto& pair : spec.identifications)
    ids.push_back(json::array({pair[0], pair[1]}));
  j["identifications"] = std::move(ids);
  return j;
}

json witness_to_json(const Witness& w) {
  json j;
  j["kind"] = w.kind;
  j["degree"] = w.degree;
  j["n"] = w.n;
  j["k"] = w.k;
  j["cell"] = w.cell;
  j["cell_dim"] = w.cell_dim;
  j["dim"] = w.dim;
  return j;
}

json verdict_to_json(const Verdict& v) {
  json j;
  j["koszul"] = v.koszul;
  j["criterion"] = v.criterion;
  j["field"] = v.field;
  json ws = json::array();
  for (const Witness& w : v.witnesses) ws.push_back(witness_to_json(w));
  j["witnesses"] = std::move(ws);
  return j;
}

}  // namespace

CellComplex parse_complex(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw ParseError("the top level must be an object");
  const std::string format =
      need_string(need(j, "format", "the document"), "\"format\"");
  if (format == "regular-cw/v1") return parse_cw(j);
  if (format == "glued-simplicial/v1") return parse_glued(j);
  throw ParseError("unknown format \"" + format + "\"");
}

std::string emit_cw_json(const std::vector<CellRecord>& records, int dimension,
                         bool pretty) {
  return dump(cw_to_json(records, dimension), pretty);
}

std::string emit_glued_json(const GluedSimplicialSpec& spec, bool pretty) {
  return dump(glued_to_json(spec), pretty);
}

std::string emit_corpus_entry(const CorpusEntry& e, bool pretty) {
  if (e.glued) return emit_glued_json(e.spec, pretty);
  return emit_cw_json(e.records, e.declared_dim, pretty);
}

std::string homology_json(const HomologyTable& t, bool pretty) {
  json j;
  j["field"] = t.field;
  j["reduced"] = t.reduced;
  j["dims"] = t.dims;
  return dump(j, pretty);
}

std::string cps_json(const CpsTable& t, bool pretty) {
  json j;
  j["field"] = t.field;
  j["d"] = t.d;
  j["dims"] = t.dims;
  return dump(j, pretty);
}

std::string strata_json(const Stratification& s, const CellComplex& X,
                        bool pretty) {
  // Cells absent from every listed stratum are non-singular.
  std::vector<int> present;
  for (int v : s.stratum)
    if (v != Stratification::kNonSingular) present.push_back(v);
  std::sort(present.begin(), present.end());
  present.erase(std::unique(present.begin(), present.end()), present.end());
  json strata = json::array();
  for (int n : present) {
    std::vector<int> cells = s.cells_in(n);
    std::sort(cells.begin(), cells.end(), [&X](int a, int b) {
      const auto& ca = X.cell(a);
      const auto& cb = X.cell(b);
      return std::tie(ca.dim, ca.id) < std::tie(cb.dim, cb.id);
    });
    json ids = json::array();
    for (int c : cells) ids.push_back(X.cell(c).id);
    json row;
    row["n"] = n;
    row["cells"] = std::move(ids);
    strata.push_back(std::move(row));
  }
  json j;
  j["field"] = s.field;
  j["strata"] = std::move(strata);
  return dump(j, pretty);
}

std::string verdict_json(const Verdict& v, bool pretty) {
  return dump(verdict_to_json(v), pretty);
}

std::string cross_check_json(const CrossCheck& c, bool pretty) {
  json j;
  j["koszul"] = c.koszul;
  j["field"] = c.field;
  json vs = json::array();
  for (const Verdict& v : c.verdicts) vs.push_back(verdict_to_json(v));
  j["verdicts"] = std::move(vs);
  return dump(j, pretty);
}

std::string algebra_json(const AlgebraReport& r, bool pretty) {
  json j;
  j["field"] = r.field;
  j["max_degree"] = r.N;
  j["gens"] = r.gens;
  j["dims"] = r.dims;
  j["dims_dual"] = r.dims_dual;
  j["deviations"] = r.deviations;
  j["pass"] = r.pass;
  return dump(j, pretty);
}

std::string cross_check_dump(const CrossCheck& c) {
  std::ostringstream os;
  os << "field " << c.field << "\n";
  for (const Verdict& v : c.verdicts) {
    os << v.criterion << ": koszul=" << (v.koszul ? "true" : "false") << "\n";
    for (const Witness& w : v.witnesses) {
      os << "  witness kind=" << w.kind;
      if (w.degree >= 0) os << " degree=" << w.degree;
      if (w.n >= 0) os << " n=" << w.n;
      if (w.k >= 0) os << " k=" << w.k;
      if (!w.cell.empty())
        os << " cell=" << w.cell << " cell_dim=" << w.cell_dim;
      os << " dim=" << w.dim << "\n";
    }
  }
  return os.str();
}

std::string combine_reports(const std::vector<std::string>& per_field,
                            bool pretty) {
  if (per_field.size() == 1) return per_field[0];
  json arr = json::array();
  for (const std::string& s : per_field) arr.push_back(json::parse(s));
  return dump(arr, pretty);
}

}  // namespace koszul
