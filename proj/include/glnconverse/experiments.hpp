#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "glnconverse/decompositions.hpp"
#include "glnconverse/rankin_selberg.hpp"

namespace glnc {

struct ExperimentConfig {
  int n = 2;
  long p = 3;
  int k = 1;
  int rmax = 0;  // 0 means the default floor(n/2)
  bool all_generic = false;
  double tol_group = 1e-8;  // agreement / grouping tolerance
  double tol_sep = 1e-6;    // separation threshold for the converse scan
  uint64_t seed = 2026;

  int effective_rmax() const { return rmax > 0 ? rmax : n / 2; }
};

// Owns the field, the group contexts of ranks 1..n, and their inventories,
// built lazily and shared by the operations below.
class Engine {
 public:
  explicit Engine(const ExperimentConfig& cfg);
  Engine(const Engine&) = delete;

  const ExperimentConfig& config() const { return cfg_; }
  const Field& field() const { return field_; }
  const GroupContext& context(int r);
  const Inventory& inventory(int r);
  const Inventory& inventory_bar(int r);
  const std::vector<cplx>& table(int r, int comp);

 private:
  ExperimentConfig cfg_;
  Field field_;
  std::vector<std::unique_ptr<GroupContext>> ctx_;
  std::vector<std::unique_ptr<Inventory>> inv_;
  std::vector<std::unique_ptr<Inventory>> inv_bar_;
  std::vector<std::map<int, std::vector<cplx>>> tables_;
};

struct InventoryComponentRow {
  int id;
  int dim;
  bool cuspidal;
  long omega_exponent;
  std::vector<cplx> fingerprint;
};

struct InventoryReport {
  int n;
  long p;
  int k;
  long q;
  long group_order, unipotent_order, module_dim;
  long dcosets_total, relevant;
  double max_commutator;
  std::vector<InventoryComponentRow> comps;
  long generic_count, cuspidal_count, cuspidal_expected;
  bool cuspidal_count_ok;
  std::vector<long> omega_exponents, omega_expected;  // cuspidal, sorted
  bool omega_multiset_ok;
};
InventoryReport run_inventory(Engine& eng);

struct GammaReport {
  int n;
  long p;
  int k;
  long q;
  int rmax;
  bool all_generic;
  uint64_t seed;
  std::vector<GammaRecord> records;
  double max_residual;
  double max_dual_dev;
  bool all_ok;
};
GammaReport run_gamma(Engine& eng);

struct ConversePairRow {
  int pi1, pi2;
  long omega_exponent;
  bool separated;
  int sep_rank, sep_tau;
  double sep_gap;
  double max_gap;
};

struct ConverseReport {
  int n;
  long p;
  int k;
  long q;
  int rmax;
  bool all_generic;
  uint64_t seed;
  double tol_group, tol_sep;
  int cuspidal_count;
  std::vector<ConversePairRow> pairs;  // every same-omega pair exactly once
  int failures;
  std::vector<GammaRecord> records;
  bool ok;
};
ConverseReport run_converse(Engine& eng);

struct SpecialPairRow {
  int pi1, pi2;
  double p_dev;
};

struct SpecialPairReport {
  int n;
  long q;
  std::vector<double> symmetry_dev;  // per generic component
  double max_symmetry;
  long elements_checked;
  long sampled_checks;  // extra rng-sampled checks when n >= 4
  double max_sampled_symmetry;
  long p_count;
  std::vector<SpecialPairRow> pairs;  // cuspidal pairs on the mirabolic
  double max_pair_dev;
  double self_dev;
  bool ok;
};
SpecialPairReport run_special_pair_audit(Engine& eng);

struct HeightAuditRow {
  int pi1, pi2, height;
  bool hyp;          // standing hypotheses plus gamma agreement at this rank
  double gamma_gap;  // -1 when an extraction was unusable
  bool agree;
  double bessel_gap;
  bool violated;
};

struct HeightAuditReport {
  int n;
  long q;
  std::vector<long> cell_sizes;
  long mismatches;
  bool partition_ok;
  int cover_half, cover_kmin;
  std::vector<std::vector<long>> cover_sizes;
  long uncovered;
  std::vector<HeightAuditRow> rows;
  long violations;
  double max_reconstruction_dev;
  long reconstruction_checked;
  long implied_pairs, implied_violations;
  bool ok;
};
HeightAuditReport run_height_audit(Engine& eng);

struct CentralCharGroup {
  std::vector<int> members;
  std::vector<long> omegas;
  bool mixed;
};

struct CentralCharReport {
  int n;
  long q;
  int cuspidal_count;
  std::vector<CentralCharGroup> groups;
  int collisions;
  bool vacuous;
  bool ok;
};
CentralCharReport run_central_char_probe(Engine& eng);

struct VerifyCheck {
  std::string name;
  bool pass;
  std::string detail;
};

struct VerifyReport {
  std::string suite;
  int n;
  long p;
  int k;
  std::vector<VerifyCheck> checks;
  bool pass;
};
VerifyReport run_verify(Engine& eng, const std::string& suite);
const std::vector<std::string>& verify_suites();

}  // namespace glnc
