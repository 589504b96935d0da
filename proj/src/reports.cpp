#include "glnconverse/reports.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace glnc {

namespace {

using json = nlohmann::ordered_json;

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string num(const cplx& z) {
  std::string s = num(z.real());
  s += (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
  return s;
}

std::string yesno(bool b) { return b ? "yes" : "no"; }
std::string passfail(bool b) { return b ? "pass" : "FAIL"; }

json head(const char* op) {
  json j;
  j["schema"] = "glnconverse/1";
  j["op"] = op;
  return j;
}

json jc(const cplx& z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json gamma_record_json(const GammaRecord& r) {
  json j;
  j["pi_id"] = r.pi_id;
  j["tau_rank"] = r.tau_rank;
  j["tau_id"] = r.tau_id;
  j["gamma"] = jc(r.gamma);
  j["max_residual"] = r.max_residual;
  j["probes_admitted"] = r.probes_admitted;
  j["probes_walked"] = r.probes_walked;
  j["gamma_dual"] = jc(r.gamma_dual);
  j["dual_product_dev"] = r.dual_product_dev;
  j["ok"] = r.ok;
  j["note"] = r.note;
  return j;
}

}  // namespace

// ---------------------------------------------------------------------------
// inventory
// ---------------------------------------------------------------------------

std::string to_text(const InventoryReport& rep) {
  std::ostringstream os;
  os << "inventory for GL_" << rep.n << " over F_" << rep.q << " (p = " << rep.p
     << ", k = " << rep.k << ")\n";
  os << "  group order " << rep.group_order << ", unipotent order " << rep.unipotent_order
     << ", module dimension " << rep.module_dim << "\n";
  os << "  double cosets " << rep.dcosets_total << " total, " << rep.relevant << " relevant\n";
  os << "  max commutator norm " << num(rep.max_commutator) << "\n";
  os << "  components (" << rep.generic_count << "):\n";
  for (const auto& c : rep.comps) {
    os << "    #" << c.id << "  dim " << c.dim << "  " << (c.cuspidal ? "cuspidal " : "induced ")
       << " omega_exponent " << c.omega_exponent << "\n";
  }
  os << "  cuspidal count " << rep.cuspidal_count << " (expected " << rep.cuspidal_expected
     << "): " << passfail(rep.cuspidal_count_ok) << "\n";
  os << "  cuspidal central exponents {";
  for (size_t i = 0; i < rep.omega_exponents.size(); ++i)
    os << (i ? "," : "") << rep.omega_exponents[i];
  os << "} vs oracle {";
  for (size_t i = 0; i < rep.omega_expected.size(); ++i) os << (i ? "," : "") << rep.omega_expected[i];
  os << "}: " << passfail(rep.omega_multiset_ok) << "\n";
  return os.str();
}

std::string to_json_string(const InventoryReport& rep) {
  json j = head("inventory");
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["q"] = rep.q;
  j["group_order"] = rep.group_order;
  j["unipotent_order"] = rep.unipotent_order;
  j["module_dim"] = rep.module_dim;
  j["double_cosets_total"] = rep.dcosets_total;
  j["double_cosets_relevant"] = rep.relevant;
  j["max_commutator"] = rep.max_commutator;
  j["components"] = json::array();
  for (const auto& c : rep.comps) {
    json jcc;
    jcc["id"] = c.id;
    jcc["dim"] = c.dim;
    jcc["cuspidal"] = c.cuspidal;
    jcc["omega_exponent"] = c.omega_exponent;
    json fp = json::array();
    for (const auto& z : c.fingerprint) fp.push_back(jc(z));
    jcc["fingerprint"] = fp;
    j["components"].push_back(jcc);
  }
  j["generic_count"] = rep.generic_count;
  j["cuspidal_count"] = rep.cuspidal_count;
  j["cuspidal_expected"] = rep.cuspidal_expected;
  j["cuspidal_count_ok"] = rep.cuspidal_count_ok;
  j["omega_exponents"] = rep.omega_exponents;
  j["omega_expected"] = rep.omega_expected;
  j["omega_multiset_ok"] = rep.omega_multiset_ok;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// gamma
// ---------------------------------------------------------------------------

std::string to_text(const GammaReport& rep) {
  std::ostringstream os;
  os << "gamma table for GL_" << rep.n << " over F_" << rep.q << ", twists up to rank "
     << rep.rmax << (rep.all_generic ? " (all generic twists)" : " (cuspidal twists)")
     << ", seed " << rep.seed << "\n";
  for (const auto& r : rep.records) {
    os << "  pi #" << r.pi_id << "  x  rank-" << r.tau_rank << " twist #" << r.tau_id
       << "  gamma = " << num(r.gamma) << "  residual " << num(r.max_residual) << "  probes "
       << r.probes_admitted << (r.ok ? "" : "  [" + r.note + "]") << "\n";
  }
  os << "  records " << rep.records.size() << ", max residual " << num(rep.max_residual)
     << ", max dual deviation " << num(rep.max_dual_dev) << ": " << passfail(rep.all_ok) << "\n";
  return os.str();
}

std::string to_json_string(const GammaReport& rep) {
  json j = head("gamma");
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["q"] = rep.q;
  j["rmax"] = rep.rmax;
  j["all_generic"] = rep.all_generic;
  j["seed"] = rep.seed;
  j["records"] = json::array();
  for (const auto& r : rep.records) j["records"].push_back(gamma_record_json(r));
  j["max_residual"] = rep.max_residual;
  j["max_dual_dev"] = rep.max_dual_dev;
  j["all_ok"] = rep.all_ok;
  return j.dump(2) + "\n";
}

std::string gamma_csv(const GammaReport& rep) {
  std::ostringstream os;
  os << "n,q,pi_id,tau_rank,tau_id,gamma_re,gamma_im,max_residual,probes\n";
  for (const auto& r : rep.records) {
    os << rep.n << "," << rep.q << "," << r.pi_id << "," << r.tau_rank << "," << r.tau_id << ","
       << num(r.gamma.real()) << "," << num(r.gamma.imag()) << "," << num(r.max_residual) << ","
       << r.probes_admitted << "\n";
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// converse
// ---------------------------------------------------------------------------

std::string to_text(const ConverseReport& rep) {
  std::ostringstream os;
  os << "converse separation for GL_" << rep.n << " over F_" << rep.q << ", twists up to rank "
     << rep.rmax << ", seed " << rep.seed << "\n";
  os << "  cuspidal components " << rep.cuspidal_count << ", same-central-character pairs "
     << rep.pairs.size() << "\n";
  for (const auto& p : rep.pairs) {
    os << "  pair (#" << p.pi1 << ", #" << p.pi2 << ")  omega_exponent " << p.omega_exponent;
    if (p.separated)
      os << "  separated at rank " << p.sep_rank << " twist #" << p.sep_tau << " with gap "
         << num(p.sep_gap) << "\n";
    else
      os << "  NOT separated (max gap " << num(p.max_gap) << ")\n";
  }
  os << "  failures " << rep.failures << ": " << passfail(rep.ok) << "\n";
  return os.str();
}

std::string to_json_string(const ConverseReport& rep) {
  json j = head("converse");
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["q"] = rep.q;
  j["rmax"] = rep.rmax;
  j["all_generic"] = rep.all_generic;
  j["seed"] = rep.seed;
  j["tol_group"] = rep.tol_group;
  j["tol_sep"] = rep.tol_sep;
  j["cuspidal_count"] = rep.cuspidal_count;
  j["pairs"] = json::array();
  for (const auto& p : rep.pairs) {
    json jp;
    jp["pi1"] = p.pi1;
    jp["pi2"] = p.pi2;
    jp["omega_exponent"] = p.omega_exponent;
    jp["separated"] = p.separated;
    jp["sep_rank"] = p.sep_rank;
    jp["sep_tau"] = p.sep_tau;
    jp["sep_gap"] = p.sep_gap;
    jp["max_gap"] = p.max_gap;
    j["pairs"].push_back(jp);
  }
  j["failures"] = rep.failures;
  j["records"] = json::array();
  for (const auto& r : rep.records) j["records"].push_back(gamma_record_json(r));
  j["ok"] = rep.ok;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// special pair audit
// ---------------------------------------------------------------------------

std::string to_text(const SpecialPairReport& rep) {
  std::ostringstream os;
  os << "special pair audit for GL_" << rep.n << " over F_" << rep.q << "\n";
  os << "  inversion symmetry over " << rep.elements_checked
     << " elements per component, max deviation " << num(rep.max_symmetry) << "\n";
  if (rep.sampled_checks > 0)
    os << "  sampled symmetry checks " << rep.sampled_checks << ", max deviation "
       << num(rep.max_sampled_symmetry) << "\n";
  os << "  mirabolic subgroup size " << rep.p_count << "\n";
  for (const auto& p : rep.pairs)
    os << "  cuspidal pair (#" << p.pi1 << ", #" << p.pi2 << ")  mirabolic deviation "
       << num(p.p_dev) << "\n";
  os << "  max pair deviation " << num(rep.max_pair_dev) << ", self deviation "
     << num(rep.self_dev) << ": " << passfail(rep.ok) << "\n";
  return os.str();
}

std::string to_json_string(const SpecialPairReport& rep) {
  json j = head("special-pair");
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["symmetry_dev"] = rep.symmetry_dev;
  j["max_symmetry"] = rep.max_symmetry;
  j["elements_checked"] = rep.elements_checked;
  j["sampled_checks"] = rep.sampled_checks;
  j["max_sampled_symmetry"] = rep.max_sampled_symmetry;
  j["p_count"] = rep.p_count;
  j["pairs"] = json::array();
  for (const auto& p : rep.pairs)
    j["pairs"].push_back(json{{"pi1", p.pi1}, {"pi2", p.pi2}, {"p_dev", p.p_dev}});
  j["max_pair_dev"] = rep.max_pair_dev;
  j["self_dev"] = rep.self_dev;
  j["ok"] = rep.ok;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// height audit
// ---------------------------------------------------------------------------

std::string to_text(const HeightAuditReport& rep) {
  std::ostringstream os;
  os << "height audit for GL_" << rep.n << " over F_" << rep.q << "\n";
  os << "  height cells";
  for (size_t i = 0; i < rep.cell_sizes.size(); ++i) os << " " << i << ":" << rep.cell_sizes[i];
  os << "  (mismatches " << rep.mismatches << ", partition " << passfail(rep.partition_ok)
     << ")\n";
  os << "  refined cover up to r = " << rep.cover_half << ", k >= " << rep.cover_kmin
     << ", uncovered " << rep.uncovered << "\n";
  for (const auto& r : rep.rows) {
    os << "  pair (#" << r.pi1 << ", #" << r.pi2 << ") height " << r.height << "  hyp "
       << yesno(r.hyp) << "  gamma_gap " << num(r.gamma_gap) << "  bessel_gap "
       << num(r.bessel_gap) << "  agree " << yesno(r.agree)
       << (r.violated ? "  VIOLATED" : "") << "\n";
  }
  os << "  reconstruction: " << rep.reconstruction_checked << " values, max deviation "
     << num(rep.max_reconstruction_dev) << "\n";
  os << "  implied low-to-high pairs " << rep.implied_pairs << ", violations "
     << rep.implied_violations << "\n";
  os << "  violations " << rep.violations << ": " << passfail(rep.ok) << "\n";
  return os.str();
}

std::string to_json_string(const HeightAuditReport& rep) {
  json j = head("height");
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["cell_sizes"] = rep.cell_sizes;
  j["mismatches"] = rep.mismatches;
  j["partition_ok"] = rep.partition_ok;
  j["cover_half"] = rep.cover_half;
  j["cover_kmin"] = rep.cover_kmin;
  j["cover_sizes"] = rep.cover_sizes;
  j["uncovered"] = rep.uncovered;
  j["rows"] = json::array();
  for (const auto& r : rep.rows) {
    json jr;
    jr["pi1"] = r.pi1;
    jr["pi2"] = r.pi2;
    jr["height"] = r.height;
    jr["hyp"] = r.hyp;
    jr["gamma_gap"] = r.gamma_gap;
    jr["agree"] = r.agree;
    jr["bessel_gap"] = r.bessel_gap;
    jr["violated"] = r.violated;
    j["rows"].push_back(jr);
  }
  j["violations"] = rep.violations;
  j["max_reconstruction_dev"] = rep.max_reconstruction_dev;
  j["reconstruction_checked"] = rep.reconstruction_checked;
  j["implied_pairs"] = rep.implied_pairs;
  j["implied_violations"] = rep.implied_violations;
  j["ok"] = rep.ok;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// central character probe
// ---------------------------------------------------------------------------

std::string to_text(const CentralCharReport& rep) {
  std::ostringstream os;
  os << "central character probe for GL_" << rep.n << " over F_" << rep.q << "\n";
  os << "  cuspidal components " << rep.cuspidal_count
     << (rep.vacuous ? " (vacuous: fewer than two)" : "") << "\n";
  for (size_t i = 0; i < rep.groups.size(); ++i) {
    const auto& g = rep.groups[i];
    os << "  group " << i << ": components {";
    for (size_t m = 0; m < g.members.size(); ++m) os << (m ? "," : "") << "#" << g.members[m];
    os << "} central exponents {";
    for (size_t m = 0; m < g.omegas.size(); ++m) os << (m ? "," : "") << g.omegas[m];
    os << "}" << (g.mixed ? "  MIXED" : "") << "\n";
  }
  os << "  collisions " << rep.collisions << ": " << passfail(rep.ok) << "\n";
  return os.str();
}

std::string to_json_string(const CentralCharReport& rep) {
  json j = head("central-char");
  j["n"] = rep.n;
  j["q"] = rep.q;
  j["cuspidal_count"] = rep.cuspidal_count;
  j["groups"] = json::array();
  for (const auto& g : rep.groups)
    j["groups"].push_back(json{{"members", g.members}, {"omegas", g.omegas}, {"mixed", g.mixed}});
  j["collisions"] = rep.collisions;
  j["vacuous"] = rep.vacuous;
  j["ok"] = rep.ok;
  return j.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

std::string to_text(const VerifyReport& rep) {
  std::ostringstream os;
  os << "verify suite '" << rep.suite << "' at n = " << rep.n << ", p = " << rep.p
     << ", k = " << rep.k << "\n";
  for (const auto& c : rep.checks)
    os << "  [" << passfail(c.pass) << "] " << c.name << " (" << c.detail << ")\n";
  os << "  " << rep.checks.size() << " checks: " << passfail(rep.pass) << "\n";
  return os.str();
}

std::string to_json_string(const VerifyReport& rep) {
  json j = head("verify");
  j["suite"] = rep.suite;
  j["n"] = rep.n;
  j["p"] = rep.p;
  j["k"] = rep.k;
  j["checks"] = json::array();
  for (const auto& c : rep.checks)
    j["checks"].push_back(json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}});
  j["pass"] = rep.pass;
  return j.dump(2) + "\n";
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw UsageError("cannot open for writing: " + path);
  os << content;
  if (!os) throw UsageError("write failed: " + path);
}

}  // namespace glnc
