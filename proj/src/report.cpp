#include "parastab/report.hpp"

#include <algorithm>
#include <sstream>

namespace parastab::report {

using nlohmann::json;

namespace {

json int_array(const IntVec& v) {
  json a = json::array();
  for (int x : v) a.push_back(std::to_string(x));
  return a;
}

json labels(const std::vector<int>& v) { return int_array(v); }

std::string slope_text(const SlopeReport& s) {
  return s.degree.str() + "/" + std::to_string(s.rank);
}

}  // namespace

json root(const RootSystem& rs, const Root& r) {
  return {{"coords", int_array(r.coords)}, {"display", rs.display(r)}};
}

json weight(const Weight& w) { return int_array(w.fw); }

json slope(const SlopeReport& s) {
  return {{"degree", s.degree.str()}, {"rank", std::to_string(s.rank)}, {"slope", slope_text(s)}};
}

json candidate(const SubmoduleCandidate& c) {
  const RootSystem& rs = c.parabolic().roots();
  json roots = json::array();
  for (const Root& r : c.roots()) roots.push_back(root(rs, r));
  const char* kind = c.empty() ? "zero" : c.is_full() ? "full" : "proper";
  return {{"roots", roots},
          {"rank", std::to_string(c.rank())},
          {"c1_weight", weight(c.c1_weight())},
          {"kind", kind}};
}

json root_system(const RootSystem& rs) {
  json cartan = json::array();
  for (int i = 0; i < rs.rank(); ++i) {
    IntVec row;
    for (int j = 0; j < rs.rank(); ++j) row.push_back(rs.cartan(i, j));
    cartan.push_back(int_array(row));
  }
  IntVec half;
  for (int i = 0; i < rs.rank(); ++i) half.push_back(rs.half_length(i));
  return {{"type", rs.type().name()},
          {"rank", std::to_string(rs.rank())},
          {"cartan", cartan},
          {"simple_root_half_lengths", int_array(half)},
          {"root_count", std::to_string(rs.size())},
          {"positive_root_count", std::to_string(rs.positive_count())},
          {"highest_root", root(rs, rs.highest_root())},
          {"weyl_order", rs.weyl_order().str()},
          {"min_admissible_char", std::to_string(min_admissible_char(rs))}};
}

json submodules(const ParabolicData& pd, CharMode mode,
                const std::vector<SubmoduleCandidate>& family) {
  const RootSystem& rs = pd.roots();
  json tangent = json::array();
  for (std::size_t idx : pd.tangent()) tangent.push_back(root(rs, rs.root(idx)));
  json cands = json::array();
  std::size_t proper = 0;
  for (const auto& c : family) {
    cands.push_back(candidate(c));
    if (c.proper()) ++proper;
  }
  return {{"type", rs.type().name()},
          {"levi", labels(pd.levi().labels(rs.rank()))},
          {"char", std::to_string(mode.characteristic())},
          {"dimension", std::to_string(pd.dimension())},
          {"tangent_roots", tangent},
          {"closed_count", std::to_string(family.size())},
          {"proper_count", std::to_string(proper)},
          {"candidates", cands}};
}

json verdict(const StabilityVerdict& v) {
  json witnesses = json::array();
  for (const auto& w : v.witnesses) {
    json j = candidate(w.candidate);
    j["slope"] = slope(w.slope);
    witnesses.push_back(j);
  }
  json max_proper = nullptr;
  if (v.max_proper) {
    max_proper = candidate(v.max_proper->candidate);
    max_proper["slope"] = slope(v.max_proper->slope);
  }
  return {{"status", v.status ? json(to_string(*v.status)) : json(nullptr)},
          {"scope", "G-equivariant subbundles of T(G/P)"},
          {"polarization", int_array(v.polarization.coeffs)},
          {"tangent", slope(v.tangent)},
          {"witnesses", witnesses},
          {"max_proper", max_proper},
          {"closed_subsets", std::to_string(v.closed_subsets)},
          {"proper_subsets", std::to_string(v.proper_subsets)},
          {"characteristic",
           {{"char", std::to_string(v.char_note.characteristic)},
            {"min_admissible", std::to_string(v.char_note.min_admissible)},
            {"admissible", v.char_note.admissible},
            {"notes", v.char_note.notes}}},
          {"truncated", v.truncated}};
}

json polarization_search(int max_coeff, const PolarizationSearch& s) {
  json witnesses = json::array();
  for (const auto& w : s.witnesses) {
    json c = candidate(w.candidate);
    witnesses.push_back({{"polarization", int_array(w.polarization.coeffs)},
                         {"subbundle", c},
                         {"subbundle_slope", slope(w.subset_slope)},
                         {"tangent_slope", slope(w.tangent_slope)}});
  }
  return {{"max_coeff", std::to_string(max_coeff)},
          {"scanned", std::to_string(s.scanned)},
          {"witness_count", std::to_string(s.witnesses.size())},
          {"witnesses", witnesses}};
}

json vector_fields(const VectorFieldAlgebra& a, const ParabolicData& pd) {
  const int n = pd.roots().rank();
  return {{"type", pd.roots().type().name()},
          {"crossed", labels(pd.crossed().labels(n))},
          {"kind", a.exceptional ? "exceptional" : "adjoint"},
          {"algebra", a.name},
          {"dimension", std::to_string(a.dimension)}};
}

namespace {

void render(std::ostringstream& os, const json& j, const std::string& indent) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const json& v = it.value();
      if (v.is_structured() && !v.empty()) {
        os << indent << it.key() << ":\n";
        render(os, v, indent + "  ");
      } else {
        os << indent << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump())
           << "\n";
      }
    }
  } else if (j.is_array()) {
    const bool words = std::all_of(j.begin(), j.end(), [](const json& x) {
      return !x.is_structured() && (!x.is_string() || x.get<std::string>().find(' ') == std::string::npos);
    });
    if (words) {
      os << indent;
      for (std::size_t i = 0; i < j.size(); ++i)
        os << (i ? " " : "") << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump());
      os << "\n";
      return;
    }
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (!j[i].is_structured()) {
        os << indent << "- " << (j[i].is_string() ? j[i].get<std::string>() : j[i].dump()) << "\n";
        continue;
      }
      os << indent << "- [" << i << "]\n";
      render(os, j[i], indent + "  ");
    }
  } else {
    os << indent << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

}  // namespace

std::string render_text(const json& payload) {
  std::ostringstream os;
  render(os, payload, "");
  return os.str();
}

}  // namespace parastab::report
