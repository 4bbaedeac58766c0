#include "toralg/report.hpp"

#include <cmath>
#include <sstream>

#include "json.hpp"
#include "toralg/exact_linalg.hpp"

namespace toralg {

using nlohmann::json;

namespace {

std::string verdict_str(SearchVerdict v) {
  switch (v) {
    case SearchVerdict::yes:
      return "yes";
    case SearchVerdict::no:
      return "no";
    default:
      return "not verified";
  }
}

std::string verdict_str(CyclicityVerdict v) {
  switch (v) {
    case CyclicityVerdict::cyclic:
      return "cyclic";
    case CyclicityVerdict::non_cyclic:
      return "non-cyclic";
    default:
      return "not verified";
  }
}

std::string verdict_str(MaximalityVerdict v) {
  switch (v) {
    case MaximalityVerdict::maximal:
      return "maximal";
    case MaximalityVerdict::not_maximal:
      return "not maximal";
    default:
      return "not verified";
  }
}

std::string verdict_str(TransitivityVerdict v) {
  switch (v) {
    case TransitivityVerdict::transitive:
      return "transitive";
    case TransitivityVerdict::not_transitive:
      return "not transitive";
    default:
      return "not verified";
  }
}

std::string verdict_str(IdealEquivalence v) {
  switch (v) {
    case IdealEquivalence::equivalent:
      return "equivalent";
    case IdealEquivalence::inequivalent:
      return "inequivalent";
    default:
      return "not verified";
  }
}

std::string vec_str(const std::vector<long>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += std::to_string(v[i]) + (i + 1 < v.size() ? "," : "");
  return s + ")";
}

json vec_json(const std::vector<long>& v) {
  json a = json::array();
  for (long x : v) a.push_back(x);
  return a;
}

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(10);
  os << x;
  return os.str();
}

}  // namespace

InvariantReport analyze_action(const ZdAction& a, const ActionFieldData* fd,
                               const AnalyzeOptions& opt,
                               const std::string& name) {
  InvariantReport r;
  r.name = name;
  r.n = a.n;
  r.d = a.d;
  for (int i = 0; i < a.d; ++i) {
    const IntMatrix& g = a.gens[static_cast<std::size_t>(i)];
    InvariantReport::GeneratorFacts f{};
    auto e = is_ergodic(g);
    f.ergodic = e.ergodic;
    f.ergodic_certificate = e.certificate;
    f.hyperbolic = is_hyperbolic(g);
    f.all_real = all_roots_real(charpoly(g));
    f.entropy = entropy(g);
    r.generators.push_back(f);
  }
  r.irreducible = is_irreducible(a, opt.box);
  r.cartan = is_cartan(a);
  r.condition_r = satisfies_R(a, opt.box);

  LyapunovData ld = lyapunov_data(a);
  {
    std::vector<long> v(static_cast<std::size_t>(a.d), -3);
    for (;;) {
      r.entropy_table.push_back({v, entropy_function(ld, v)});
      std::size_t pos = 0;
      for (; pos < v.size(); ++pos) {
        if (++v[pos] <= 3) break;
        v[pos] = -3;
      }
      if (pos == v.size()) break;
    }
  }
  if (a.d == 2) r.weyl = weyl_chambers(a);

  FixedPointData fix = fixed_points(a);
  r.fix_order = fix.order;
  r.fix_factors = fix.invariant_factors;

  CommutantBasis c = commutant_z_basis(a);
  r.commutant_rank = c.rank();
  r.commutant_abelian = c.is_abelian();
  r.torsion = torsion_elements(a, c);

  r.cyclic = cyclicity(a);

  if (fd && fd->field && r.cartan.cartan &&
      r.irreducible.verdict == SearchVerdict::yes) {
    IntMatrix w = rho(a, *r.irreducible.witness);
    if (charpoly(w) == fd->field->poly()) {
      r.maximal = is_maximal_cartan(a, *fd->field, w, fd->fundamental_units,
                                    opt.unit_box);
      if (opt.with_affine)
        r.affine = affine_report(a, *fd->field, w, fd->fundamental_units);
      r.transitive = centralizer_transitive(a, fd);
    }
  }

  bool nv = false;
  nv |= r.irreducible.verdict == SearchVerdict::not_verified;
  nv |= r.condition_r.verdict == SearchVerdict::not_verified;
  nv |= r.cyclic.verdict == CyclicityVerdict::not_verified;
  if (r.maximal) nv |= r.maximal->verdict == MaximalityVerdict::not_verified;
  if (r.transitive)
    nv |= r.transitive->verdict == TransitivityVerdict::not_verified;
  r.not_verified_present = nv;
  return r;
}

std::string render_text(const InvariantReport& r) {
  std::ostringstream os;
  os << "action: " << (r.name.empty() ? "(unnamed)" : r.name) << "\n";
  os << "torus dimension: " << r.n << "\n";
  os << "acting rank: " << r.d << "\n";
  for (std::size_t i = 0; i < r.generators.size(); ++i) {
    const auto& g = r.generators[i];
    os << "generator " << i << ": ergodic=" << (g.ergodic ? "yes" : "no")
       << " (" << g.ergodic_certificate << ")"
       << ", hyperbolic=" << (g.hyperbolic ? "yes" : "no")
       << ", real spectrum=" << (g.all_real ? "yes" : "no")
       << ", entropy=" << fmt(g.entropy) << "\n";
  }
  os << "irreducible: " << verdict_str(r.irreducible.verdict);
  if (r.irreducible.witness) os << " (witness " << vec_str(*r.irreducible.witness) << ")";
  os << "\n";
  os << "cartan: " << (r.cartan.cartan ? "yes" : "no") << " ("
     << r.cartan.reason << ")\n";
  os << "condition (R): " << verdict_str(r.condition_r.verdict);
  if (r.condition_r.witness)
    os << " (witness " << vec_str(r.condition_r.witness->first) << ", "
       << vec_str(r.condition_r.witness->second) << ")";
  os << "\n";
  os << "entropy table (|n| <= 3):\n";
  for (const auto& e : r.entropy_table)
    os << "  h" << vec_str(e.nvec) << " = " << fmt(e.value) << "\n";
  if (r.weyl) {
    os << "weyl chambers: " << r.weyl->chambers.size()
       << (r.weyl->degenerate ? " (degenerate)" : "") << "\n";
    for (const auto& ch : r.weyl->chambers)
      os << "  sector (" << fmt(ch.from_angle) << ", " << fmt(ch.to_angle)
         << "): h(n) = " << fmt(ch.coeff_n1) << "*n1 + " << fmt(ch.coeff_n2)
         << "*n2\n";
  }
  os << "fixed points: " << r.fix_order.get_str();
  if (!r.fix_factors.empty()) {
    os << " (invariant factors";
    for (const auto& f : r.fix_factors) os << " " << f.get_str();
    os << ")";
  }
  os << "\n";
  os << "commutant rank: " << r.commutant_rank
     << (r.commutant_abelian ? " (abelian)" : " (non-abelian)") << "\n";
  if (r.torsion)
    os << "commutant torsion: " << r.torsion->elements.size() << " elements ("
       << r.torsion->note << ")\n";
  os << "cyclic: " << verdict_str(r.cyclic.verdict);
  if (r.cyclic.witness) {
    os << " (witness (";
    for (std::size_t i = 0; i < r.cyclic.witness->size(); ++i)
      os << (*r.cyclic.witness)[i].get_str()
         << (i + 1 < r.cyclic.witness->size() ? "," : "");
    os << "))";
  }
  if (r.cyclic.obstruction_prime)
    os << " (orbit form vanishes mod " << r.cyclic.obstruction_prime << ")";
  os << "\n";
  if (r.maximal) {
    os << "maximal: " << verdict_str(r.maximal->verdict) << " (box "
       << r.maximal->box << ")\n";
  }
  if (r.transitive)
    os << "centralizer transitive: " << verdict_str(r.transitive->verdict)
       << "\n";
  if (r.affine) {
    os << "affine centralizer: type " << r.affine->abstract_type
       << ", torsion order " << r.affine->zaff_torsion_order.get_str()
       << ", index [Z_Aff : action] = " << r.affine->index_zaff.get_str()
       << "\n";
  }
  return os.str();
}

namespace {

json to_json(const InvariantReport& r) {
  json j;
  j["name"] = r.name;
  j["dim"] = r.n;
  j["rank"] = r.d;
  j["generators"] = json::array();
  for (const auto& g : r.generators) {
    json gj;
    gj["ergodic"] = g.ergodic;
    gj["ergodic_certificate"] = g.ergodic_certificate;
    gj["hyperbolic"] = g.hyperbolic;
    gj["real_spectrum"] = g.all_real;
    gj["entropy"] = g.entropy;
    j["generators"].push_back(gj);
  }
  j["irreducible"] = verdict_str(r.irreducible.verdict);
  if (r.irreducible.witness)
    j["irreducible_witness"] = vec_json(*r.irreducible.witness);
  j["cartan"] = r.cartan.cartan;
  j["cartan_reason"] = r.cartan.reason;
  j["condition_R"] = verdict_str(r.condition_r.verdict);
  if (r.condition_r.witness) {
    j["condition_R_witness"] = json::array(
        {vec_json(r.condition_r.witness->first),
         vec_json(r.condition_r.witness->second)});
  }
  j["entropy_table"] = json::array();
  for (const auto& e : r.entropy_table) {
    json ej;
    ej["n"] = vec_json(e.nvec);
    ej["h"] = e.value;
    j["entropy_table"].push_back(ej);
  }
  if (r.weyl) {
    json wj;
    wj["count"] = r.weyl->chambers.size();
    wj["degenerate"] = r.weyl->degenerate;
    wj["chambers"] = json::array();
    for (const auto& ch : r.weyl->chambers) {
      json cj;
      cj["from"] = ch.from_angle;
      cj["to"] = ch.to_angle;
      cj["coeff_n1"] = ch.coeff_n1;
      cj["coeff_n2"] = ch.coeff_n2;
      wj["chambers"].push_back(cj);
    }
    j["weyl"] = wj;
  }
  j["fixed_points"] = r.fix_order.get_str();
  j["fix_invariant_factors"] = json::array();
  for (const auto& f : r.fix_factors)
    j["fix_invariant_factors"].push_back(f.get_str());
  j["commutant_rank"] = r.commutant_rank;
  j["commutant_abelian"] = r.commutant_abelian;
  if (r.torsion) j["commutant_torsion_order"] = r.torsion->elements.size();
  j["cyclic"] = verdict_str(r.cyclic.verdict);
  if (r.cyclic.obstruction_prime)
    j["cyclic_obstruction_prime"] = r.cyclic.obstruction_prime;
  if (r.maximal) {
    j["maximal"] = verdict_str(r.maximal->verdict);
    j["maximal_box"] = r.maximal->box;
  }
  if (r.transitive)
    j["centralizer_transitive"] = verdict_str(r.transitive->verdict);
  if (r.affine) {
    json aj;
    aj["abstract_type"] = r.affine->abstract_type;
    aj["torsion_order"] = r.affine->zaff_torsion_order.get_str();
    aj["index"] = r.affine->index_zaff.get_str();
    aj["unit_index"] = r.affine->unit_index.get_str();
    j["affine_centralizer"] = aj;
  }
  j["not_verified_present"] = r.not_verified_present;
  return j;
}

}  // namespace

std::string render_json(const InvariantReport& r) {
  return to_json(r).dump(2) + "\n";
}

std::string render_text(const ComparisonReport& r) {
  std::ostringstream os;
  os << "dimensions: " << r.n_a << " vs " << r.n_b << ", rank " << r.d << "\n";
  os << "entropy functions equal (|n| <= 3, 1e-8): "
     << (r.entropy_equal ? "yes" : "no")
     << " (max deviation " << fmt(r.entropy_max_deviation) << ")\n";
  os << "conjugate over Q: " << verdict_str(r.rational.verdict) << " ("
     << r.rational.note << ")\n";
  os << "conjugate over Z: " << verdict_str(r.integral.verdict);
  if (!r.integral.obstruction.empty()) os << " (" << r.integral.obstruction << ")";
  os << "\n";
  os << "time-change equivalent over Q: " << verdict_str(r.time_change.verdict)
     << " (" << r.time_change.note << ")\n";
  os << "cyclicity: " << verdict_str(r.cyclicity_a.verdict) << " vs "
     << verdict_str(r.cyclicity_b.verdict) << "\n";
  os << "fixed points: " << r.fix_a.get_str() << " vs " << r.fix_b.get_str()
     << "\n";
  os << "commutant ranks: " << r.commutant_rank_a << " vs "
     << r.commutant_rank_b << "\n";
  if (r.maximality_available)
    os << "maximality: " << verdict_str(r.maximal_a.verdict) << " vs "
       << verdict_str(r.maximal_b.verdict) << "\n";
  if (r.ideal_available)
    os << "ideal classes: " << verdict_str(r.ideal_classes.verdict) << " ("
       << r.ideal_classes.note << ")\n";
  os << "distinguishing invariant: " << r.distinguishing_invariant << "\n";
  os << r.summary << "\n";
  return os.str();
}

std::string render_json(const ComparisonReport& r) {
  json j;
  j["dim_a"] = r.n_a;
  j["dim_b"] = r.n_b;
  j["rank"] = r.d;
  j["entropy_equal"] = r.entropy_equal;
  j["entropy_max_deviation"] = r.entropy_max_deviation;
  j["conjugate_over_Q"] = verdict_str(r.rational.verdict);
  j["conjugate_over_Z"] = verdict_str(r.integral.verdict);
  j["z_obstruction"] = r.integral.obstruction;
  j["time_change_equivalent"] = verdict_str(r.time_change.verdict);
  j["cyclicity"] = json::array({verdict_str(r.cyclicity_a.verdict),
                                verdict_str(r.cyclicity_b.verdict)});
  j["fixed_points"] =
      json::array({r.fix_a.get_str(), r.fix_b.get_str()});
  j["commutant_ranks"] =
      json::array({r.commutant_rank_a, r.commutant_rank_b});
  if (r.maximality_available)
    j["maximality"] = json::array({verdict_str(r.maximal_a.verdict),
                                   verdict_str(r.maximal_b.verdict)});
  if (r.ideal_available)
    j["ideal_classes"] = verdict_str(r.ideal_classes.verdict);
  j["distinguishing_invariant"] = r.distinguishing_invariant;
  j["summary"] = r.summary;
  return j.dump(2) + "\n";
}

}  // namespace toralg
