#pragma once

/* Bundled example links. Each corpus entry is a PD file plus a metadata
   JSON; every non-null metadata field carries a provenance note saying where
   the value comes from, so test expectations are auditable. */

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "diagram.hpp"
#include "laurent.hpp"
#include "rational.hpp"

namespace twistkit {

struct ProvenancedInt {
  int value = 0;
  std::string provenance;
};

struct ProvenancedBool {
  bool value = false;
  std::string provenance;
};

struct ProvenancedPoly {
  LaurentPoly value;
  std::string provenance;
};

struct CorpusEntry {
  std::string name;
  std::string pd_path;
  std::string pd_text;
  ProvenancedInt components;
  std::optional<ProvenancedInt> genus;
  std::optional<ProvenancedBool> fibered;
  std::optional<ProvenancedPoly> alexander;  // classical polynomial, unit-normalized
  std::string notes;

  LinkDiagram diagram() const { return parse_pd(pd_text); }
};

namespace detail {

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  if (!in) throw std::runtime_error("cannot read " + p.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline std::string need_provenance(const nlohmann::json& field, const std::string& name) {
  if (!field.contains("provenance") || !field["provenance"].is_string() ||
      field["provenance"].get<std::string>().empty())
    throw std::runtime_error("metadata field '" + name + "' lacks a provenance note");
  return field["provenance"].get<std::string>();
}

}  // namespace detail

inline CorpusEntry load_corpus_entry(const std::filesystem::path& dir, const std::string& name) {
  CorpusEntry e;
  e.name = name;
  std::filesystem::path pd = dir / (name + ".pd");
  e.pd_path = pd.string();
  e.pd_text = detail::slurp(pd);
  nlohmann::json meta = nlohmann::json::parse(detail::slurp(dir / (name + ".meta.json")));
  if (meta.value("name", name) != name)
    throw std::runtime_error("metadata name mismatch for " + name);
  const auto& comp = meta.at("components");
  e.components.value = comp.at("value").get<int>();
  e.components.provenance = detail::need_provenance(comp, "components");
  if (meta.contains("genus") && !meta["genus"].is_null()) {
    ProvenancedInt g;
    g.value = meta["genus"].at("value").get<int>();
    g.provenance = detail::need_provenance(meta["genus"], "genus");
    e.genus = g;
  }
  if (meta.contains("fibered") && !meta["fibered"].is_null()) {
    ProvenancedBool f;
    f.value = meta["fibered"].at("value").get<bool>();
    f.provenance = detail::need_provenance(meta["fibered"], "fibered");
    e.fibered = f;
  }
  if (meta.contains("alexander") && !meta["alexander"].is_null()) {
    ProvenancedPoly a;
    std::vector<Rational> coeffs;
    for (const auto& c : meta["alexander"].at("coeffs")) {
      if (c.is_number_integer())
        coeffs.push_back(Rational(c.get<long>()));
      else
        coeffs.push_back(rat_from_string(c.get<std::string>()));
    }
    a.value = poly_from(coeffs).normalize_unit();
    a.provenance = detail::need_provenance(meta["alexander"], "alexander");
    e.alexander = a;
  }
  e.notes = meta.value("notes", "");
  // the declared component count must agree with the diagram itself
  if (component_count(e.diagram()) != e.components.value)
    throw std::runtime_error("component count mismatch for " + name);
  return e;
}

inline std::vector<std::string> list_corpus(const std::filesystem::path& dir) {
  std::vector<std::string> names;
  for (const auto& de : std::filesystem::directory_iterator(dir))
    if (de.path().extension() == ".pd") names.push_back(de.path().stem().string());
  std::sort(names.begin(), names.end());
  return names;
}

inline std::vector<CorpusEntry> load_corpus(const std::filesystem::path& dir) {
  std::vector<CorpusEntry> entries;
  for (const auto& n : list_corpus(dir)) entries.push_back(load_corpus_entry(dir, n));
  return entries;
}

}  // namespace twistkit
