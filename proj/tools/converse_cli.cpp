// Command line driver for the verification engine.
//
// Exit codes: 0 success, 1 a verification failed, 2 usage error.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "glnconverse/experiments.hpp"
#include "glnconverse/reports.hpp"

namespace {

struct CommonOpts {
  glnc::ExperimentConfig cfg;
  std::string format = "text";
  std::string out;
};

void add_common(CLI::App* app, CommonOpts& o, bool with_csv) {
  app->add_option("--n", o.cfg.n, "matrix rank")->capture_default_str();
  app->add_option("--p", o.cfg.p, "field characteristic")->capture_default_str();
  app->add_option("--k", o.cfg.k, "field extension degree")->capture_default_str();
  app->add_option("--rmax", o.cfg.rmax, "largest twist rank (0 selects floor(n/2))")
      ->capture_default_str();
  app->add_option("--seed", o.cfg.seed, "probe seed")->capture_default_str();
  app->add_flag("--all-generic", o.cfg.all_generic, "twist by every generic component");
  app->add_option("--tol-group", o.cfg.tol_group, "grouping tolerance")->capture_default_str();
  app->add_option("--tol-sep", o.cfg.tol_sep, "separation tolerance")->capture_default_str();
  std::vector<std::string> formats = {"text", "json"};
  if (with_csv) formats.push_back("csv");
  app->add_option("--format", o.format, "stdout format")
      ->check(CLI::IsMember(formats))
      ->capture_default_str();
  app->add_option("--out", o.out, "directory that receives every format of the report");
}

void emit(const CommonOpts& o, const std::string& stem, const std::string& text,
          const std::string& json, const std::string& csv = {}) {
  if (!o.out.empty()) {
    std::filesystem::create_directories(o.out);
    std::filesystem::path dir(o.out);
    glnc::write_text_file((dir / (stem + ".txt")).string(), text);
    glnc::write_text_file((dir / (stem + ".json")).string(), json);
    if (!csv.empty()) glnc::write_text_file((dir / (stem + ".csv")).string(), csv);
  }
  if (o.format == "text")
    std::cout << text;
  else if (o.format == "json")
    std::cout << json;
  else
    std::cout << csv;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite field verification engine for the local converse machinery"};
  app.require_subcommand(1);

  CommonOpts inv_o, gam_o, con_o, aud_o, ver_o;
  std::string which = "special-pair";
  std::string suite = "all";

  CLI::App* inv = app.add_subcommand("inventory", "spectral inventory of the induced module");
  add_common(inv, inv_o, false);
  CLI::App* gam = app.add_subcommand("gamma", "gamma factor table");
  add_common(gam, gam_o, true);
  CLI::App* con = app.add_subcommand("converse", "pairwise separation of cuspidal components");
  add_common(con, con_o, false);
  CLI::App* aud = app.add_subcommand("audit", "structural audits");
  add_common(aud, aud_o, false);
  aud->add_option("--which", which, "audit to run")
      ->check(CLI::IsMember({"special-pair", "height", "central-char"}))
      ->capture_default_str();
  CLI::App* ver = app.add_subcommand("verify", "internal consistency suites");
  add_common(ver, ver_o, false);
  ver->add_option("--suite", suite, "suite to run")
      ->check(CLI::IsMember(glnc::verify_suites()))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    bool ok = true;
    if (inv->parsed()) {
      glnc::Engine eng(inv_o.cfg);
      auto rep = glnc::run_inventory(eng);
      emit(inv_o, "inventory", glnc::to_text(rep), glnc::to_json_string(rep));
      ok = rep.cuspidal_count_ok && rep.omega_multiset_ok;
    } else if (gam->parsed()) {
      glnc::Engine eng(gam_o.cfg);
      auto rep = glnc::run_gamma(eng);
      emit(gam_o, "gamma", glnc::to_text(rep), glnc::to_json_string(rep), glnc::gamma_csv(rep));
      ok = rep.all_ok;
    } else if (con->parsed()) {
      glnc::Engine eng(con_o.cfg);
      auto rep = glnc::run_converse(eng);
      emit(con_o, "converse", glnc::to_text(rep), glnc::to_json_string(rep));
      ok = rep.ok;
    } else if (aud->parsed()) {
      glnc::Engine eng(aud_o.cfg);
      if (which == "special-pair") {
        auto rep = glnc::run_special_pair_audit(eng);
        emit(aud_o, "special-pair", glnc::to_text(rep), glnc::to_json_string(rep));
        ok = rep.ok;
      } else if (which == "height") {
        auto rep = glnc::run_height_audit(eng);
        emit(aud_o, "height", glnc::to_text(rep), glnc::to_json_string(rep));
        ok = rep.ok;
      } else {
        auto rep = glnc::run_central_char_probe(eng);
        emit(aud_o, "central-char", glnc::to_text(rep), glnc::to_json_string(rep));
        ok = rep.ok;
      }
    } else if (ver->parsed()) {
      glnc::Engine eng(ver_o.cfg);
      auto rep = glnc::run_verify(eng, suite);
      emit(ver_o, "verify", glnc::to_text(rep), glnc::to_json_string(rep));
      ok = rep.pass;
    }
    return ok ? 0 : 1;
  } catch (const glnc::UsageError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return 2;
  } catch (const glnc::VerificationError& e) {
    std::fprintf(stderr, "verification error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
