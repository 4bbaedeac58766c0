#ifndef TORALG_REPORT_HPP
#define TORALG_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "toralg/classify.hpp"

namespace toralg {

// Everything the analyzer computes for a single action. Deterministic
// field order; the JSON rendering mirrors the text rendering field for
// field.
struct InvariantReport {
  std::string name;
  int n = 0, d = 0;

  struct GeneratorFacts {
    bool ergodic;
    std::string ergodic_certificate;
    bool hyperbolic;
    bool all_real;
    double entropy;
  };
  std::vector<GeneratorFacts> generators;

  IrreducibilityVerdict irreducible;
  CartanResult cartan;
  ConditionRResult condition_r;

  struct EntropyEntry {
    std::vector<long> nvec;
    double value;
  };
  std::vector<EntropyEntry> entropy_table;  // |n|_inf <= 3, d <= 2 full grid

  std::optional<WeylChamberSet> weyl;  // d == 2 only

  Int fix_order = 0;
  std::vector<Int> fix_factors;

  int commutant_rank = 0;
  bool commutant_abelian = false;
  std::optional<TorsionResult> torsion;

  CyclicityResult cyclic;
  std::optional<MaximalityResult> maximal;
  std::optional<AffineReport> affine;
  std::optional<TransitivityResult> transitive;

  bool not_verified_present = false;  // any bounded-search three-state open
};

struct AnalyzeOptions {
  int box = 3;          // search box for condition (R) / irreducibility
  int unit_box = 50;    // maximality search box
  bool with_affine = true;
};

InvariantReport analyze_action(const ZdAction& a, const ActionFieldData* fd,
                               const AnalyzeOptions& opt = {},
                               const std::string& name = "");

std::string render_text(const InvariantReport& r);
std::string render_json(const InvariantReport& r);

std::string render_text(const ComparisonReport& r);
std::string render_json(const ComparisonReport& r);

}  // namespace toralg

#endif
