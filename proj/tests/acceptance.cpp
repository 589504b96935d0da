// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <tuple>
#include <vector>

#include "glnconverse/experiments.hpp"
#include "glnconverse/reports.hpp"
#include "support/character_oracle.hpp"

using namespace glnc;

namespace {

struct ConfigKey {
  int n;
  long p;
  int k;
  bool operator<(const ConfigKey& o) const {
    return std::tie(n, p, k) < std::tie(o.n, o.p, o.k);
  }
};

std::map<ConfigKey, std::unique_ptr<Engine>> g_engines;

Engine& engine(int n, long p, int k) {
  ConfigKey key{n, p, k};
  auto it = g_engines.find(key);
  if (it == g_engines.end()) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.p = p;
    cfg.k = k;
    it = g_engines.emplace(key, std::make_unique<Engine>(cfg)).first;
  }
  return *it->second;
}

const std::vector<ConfigKey> kMainConfigs = {{2, 2, 1}, {2, 3, 1}, {2, 5, 1},
                                             {3, 2, 1}, {3, 3, 1}, {4, 2, 1}};

std::string cfg_name(const ConfigKey& c) {
  return "(" + std::to_string(c.n) + "," + std::to_string(c.p) + ")";
}

bool crit_spectral(std::string& detail) {
  for (const auto& c : kMainConfigs) {
    Engine& eng = engine(c.n, c.p, c.k);
    const Inventory& inv = eng.inventory(c.n);
    const GroupContext& ctx = eng.context(c.n);
    long total = 0;
    for (const auto& comp : inv.comps) total += comp.dim;
    if (total != ctx.size() / ctx.unipotent_order()) {
      detail = cfg_name(c) + " dimensions do not exhaust the module";
      return false;
    }
    if (inv.max_commutator > 1e-8) {
      detail = cfg_name(c) + " commutator norm " + std::to_string(inv.max_commutator);
      return false;
    }
    if (inv.comps.size() != inv.dcosets.relevant.size()) {
      detail = cfg_name(c) + " component count mismatch";
      return false;
    }
    detail += (detail.empty() ? "" : ", ") + cfg_name(c) + ":" + std::to_string(inv.comps.size());
  }
  return true;
}

bool crit_cuspidal(std::string& detail) {
  for (const auto& c : kMainConfigs) {
    Engine& eng = engine(c.n, c.p, c.k);
    const Inventory& inv = eng.inventory(c.n);
    long q = eng.field().q();
    long expected_dim = 1;
    for (int i = 1; i < c.n; ++i) {
      long qi = 1;
      for (int t = 0; t < i; ++t) qi *= q;
      expected_dim *= qi - 1;
    }
    long count = 0;
    std::vector<long> omegas;
    for (const auto& comp : inv.comps) {
      if (!comp.cuspidal) continue;
      ++count;
      omegas.push_back(comp.omega_exponent);
      if (comp.dim != expected_dim) {
        detail = cfg_name(c) + " cuspidal dim " + std::to_string(comp.dim) + " expected " +
                 std::to_string(expected_dim);
        return false;
      }
    }
    std::sort(omegas.begin(), omegas.end());
    if (count != cuspidal_count_oracle(eng.field(), c.n)) {
      detail = cfg_name(c) + " cuspidal count " + std::to_string(count) + " vs oracle " +
               std::to_string(cuspidal_count_oracle(eng.field(), c.n));
      return false;
    }
    if (omegas != cuspidal_omega_exponents_oracle(eng.field(), c.n)) {
      detail = cfg_name(c) + " central character multiset mismatch";
      return false;
    }
    detail += (detail.empty() ? "" : ", ") + cfg_name(c) + ":" + std::to_string(count);
  }
  return true;
}

bool crit_trace_oracle(std::string& detail) {
  for (const auto& c : {ConfigKey{2, 2, 1}, ConfigKey{2, 3, 1}}) {
    Engine& eng = engine(c.n, c.p, c.k);
    const GroupContext& ctx = eng.context(c.n);
    const Inventory& inv = eng.inventory(c.n);
    testing::CharacterTable ct = testing::character_table(ctx);
    std::vector<std::vector<cplx>> oracle;
    for (int irr = 0; irr < int(ct.degs.size()); ++irr) {
      testing::TraceBessel tb = testing::trace_bessel(ctx, ct, irr);
      if (tb.generic) oracle.push_back(std::move(tb.table));
    }
    if (oracle.size() != inv.comps.size()) {
      detail = cfg_name(c) + " generic count " + std::to_string(oracle.size()) + " vs " +
               std::to_string(inv.comps.size());
      return false;
    }
    std::vector<bool> used(oracle.size(), false);
    double worst = 0;
    for (int comp = 0; comp < int(inv.comps.size()); ++comp) {
      const auto& t = eng.table(c.n, comp);
      double best = 1e18;
      int pick = -1;
      for (int o = 0; o < int(oracle.size()); ++o) {
        if (used[size_t(o)]) continue;
        double dev = 0;
        for (long g = 0; g < ctx.size(); ++g)
          dev = std::max(dev, std::abs(t[size_t(g)] - oracle[size_t(o)][size_t(g)]));
        if (dev < best) {
          best = dev;
          pick = o;
        }
      }
      used[size_t(pick)] = true;
      worst = std::max(worst, best);
    }
    if (worst > 1e-8) {
      detail = cfg_name(c) + " max deviation " + std::to_string(worst);
      return false;
    }
    char buf[64];
    std::snprintf(buf, sizeof buf, "%s dev %.2e", cfg_name(c).c_str(), worst);
    detail += (detail.empty() ? "" : ", ") + std::string(buf);
  }
  return true;
}

bool crit_height(std::string& detail) {
  for (const auto& c : {ConfigKey{2, 3, 1}, ConfigKey{3, 2, 1}, ConfigKey{3, 3, 1},
                        ConfigKey{4, 2, 1}}) {
    Engine& eng = engine(c.n, c.p, c.k);
    const GroupContext& ctx = eng.context(c.n);
    HeightReport hp = height_partition_check(ctx);
    long total = 0;
    for (long s : hp.cell_sizes) total += s;
    if (!hp.partition_ok || hp.mismatches != 0 || total != ctx.size()) {
      detail = cfg_name(c) + " partition failed";
      return false;
    }
    RefinedCoverReport cover = refined_cover_check(ctx);
    if (cover.uncovered != 0) {
      detail = cfg_name(c) + " uncovered " + std::to_string(cover.uncovered);
      return false;
    }
    detail += (detail.empty() ? "" : ", ") + cfg_name(c) + ":" + std::to_string(total);
  }
  return true;
}

bool crit_symmetry(std::string& detail) {
  for (const auto& c : kMainConfigs) {
    Engine& eng = engine(c.n, c.p, c.k);
    SpecialPairReport rep = run_special_pair_audit(eng);
    if (!rep.ok) {
      detail = cfg_name(c) + " audit failed (max symmetry " +
               std::to_string(rep.max_symmetry) + ", max pair " +
               std::to_string(rep.max_pair_dev) + ")";
      return false;
    }
    if (c.n >= 4 && rep.sampled_checks < 100000) {
      detail = cfg_name(c) + " sampled only " + std::to_string(rep.sampled_checks);
      return false;
    }
    detail += (detail.empty() ? "" : ", ") + cfg_name(c) +
              (c.n >= 4 ? ":exhaustive+sampled" : ":exhaustive");
  }
  return true;
}

bool crit_gamma(std::string& detail) {
  double worst_res = 0, worst_dual = 0;
  long records = 0;
  for (const auto& c : kMainConfigs) {
    Engine& eng = engine(c.n, c.p, c.k);
    GammaReport rep = run_gamma(eng);
    if (!rep.all_ok) {
      detail = cfg_name(c) + " has a failed extraction";
      return false;
    }
    for (const auto& r : rep.records) {
      if (r.probes_admitted < 9) {
        detail = cfg_name(c) + " only " + std::to_string(r.probes_admitted) + " probes";
        return false;
      }
    }
    if (rep.max_residual > 1e-7) {
      detail = cfg_name(c) + " residual " + std::to_string(rep.max_residual);
      return false;
    }
    if (rep.max_dual_dev > 1e-6) {
      detail = cfg_name(c) + " dual deviation " + std::to_string(rep.max_dual_dev);
      return false;
    }
    worst_res = std::max(worst_res, rep.max_residual);
    worst_dual = std::max(worst_dual, rep.max_dual_dev);
    records += long(rep.records.size());
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%ld records, max residual %.2e, max dual dev %.2e", records,
                worst_res, worst_dual);
  detail = buf;
  return true;
}

bool crit_converse(std::string& detail) {
  for (const auto& c : {ConfigKey{2, 3, 1}, ConfigKey{3, 2, 1}, ConfigKey{3, 3, 1},
                        ConfigKey{4, 2, 1}}) {
    Engine& eng = engine(c.n, c.p, c.k);
    ConverseReport rep = run_converse(eng);
    if (rep.failures != 0 || !rep.ok) {
      detail = cfg_name(c) + " failures " + std::to_string(rep.failures);
      return false;
    }
    detail += (detail.empty() ? "" : ", ") + cfg_name(c) + ":" +
              std::to_string(rep.pairs.size()) + "pairs@rmax" + std::to_string(rep.rmax);
  }
  return true;
}

bool crit_determinism(std::string& detail) {
  ExperimentConfig cfg;
  cfg.n = 2;
  cfg.p = 3;
  cfg.k = 1;
  Engine e1(cfg), e2(cfg);
  if (to_json_string(run_gamma(e1)) != to_json_string(run_gamma(e2))) {
    detail = "gamma json differs between fresh engines";
    return false;
  }
  if (gamma_csv(run_gamma(e1)) != gamma_csv(run_gamma(e2))) {
    detail = "gamma csv differs between fresh engines";
    return false;
  }
  if (to_json_string(run_converse(e1)) != to_json_string(run_converse(e2))) {
    detail = "converse json differs between fresh engines";
    return false;
  }
  if (to_json_string(run_height_audit(e1)) != to_json_string(run_height_audit(e2))) {
    detail = "height json differs between fresh engines";
    return false;
  }
  ExperimentConfig cfg32;
  cfg32.n = 3;
  cfg32.p = 2;
  cfg32.k = 1;
  Engine e3(cfg32), e4(cfg32);
  if (to_json_string(run_gamma(e3)) != to_json_string(run_gamma(e4))) {
    detail = "gamma json differs at (3,2)";
    return false;
  }
  detail = "byte-identical structured reports at (2,3) and (3,2)";
  return true;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<bool(std::string&)> fn;
  };
  const std::vector<Criterion> criteria = {
      {"spectral decomposition closes on every target configuration", crit_spectral},
      {"cuspidal census matches the orbit oracle", crit_cuspidal},
      {"projector tables equal the independent trace sums", crit_trace_oracle},
      {"height partition and refined cover are exhaustive", crit_height},
      {"inversion symmetry and mirabolic agreement hold", crit_symmetry},
      {"functional equation residuals stay within tolerance", crit_gamma},
      {"twist separation succeeds with zero failures", crit_converse},
      {"fixed seeds reproduce byte-identical reports", crit_determinism},
  };

  int failures = 0;
  for (size_t i = 0; i < criteria.size(); ++i) {
    std::string detail;
    bool ok = false;
    try {
      ok = criteria[i].fn(detail);
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    if (!ok) ++failures;
    std::printf("criterion %zu [%s]: %s%s%s\n", i + 1, ok ? "PASS" : "FAIL", criteria[i].name,
                detail.empty() ? "" : " -- ", detail.c_str());
    std::fflush(stdout);
  }
  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
