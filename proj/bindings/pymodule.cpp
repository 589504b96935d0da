#include <pybind11/pybind11.h>

#include "glnconverse/experiments.hpp"
#include "glnconverse/reports.hpp"

namespace py = pybind11;

namespace {

glnc::ExperimentConfig make_cfg(int n, long p, int k, int rmax, uint64_t seed, bool all_generic,
                                double tol_group, double tol_sep) {
  glnc::ExperimentConfig cfg;
  cfg.n = n;
  cfg.p = p;
  cfg.k = k;
  cfg.rmax = rmax;
  cfg.seed = seed;
  cfg.all_generic = all_generic;
  cfg.tol_group = tol_group;
  cfg.tol_sep = tol_sep;
  return cfg;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "finite field verification engine for the local converse machinery";

  auto common = [](auto fn) { return fn; };
  (void)common;

#define GLNC_ARGS                                                                       \
  py::arg("n") = 2, py::arg("p") = 3, py::arg("k") = 1, py::arg("rmax") = 0,            \
  py::arg("seed") = 2026, py::arg("all_generic") = false, py::arg("tol_group") = 1e-8,  \
  py::arg("tol_sep") = 1e-6

  m.def(
      "inventory_json",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_inventory(eng));
      },
      GLNC_ARGS);
  m.def(
      "gamma_json",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_gamma(eng));
      },
      GLNC_ARGS);
  m.def(
      "gamma_csv",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::gamma_csv(glnc::run_gamma(eng));
      },
      GLNC_ARGS);
  m.def(
      "converse_json",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_converse(eng));
      },
      GLNC_ARGS);
  m.def(
      "special_pair_json",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_special_pair_audit(eng));
      },
      GLNC_ARGS);
  m.def(
      "height_json",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_height_audit(eng));
      },
      GLNC_ARGS);
  m.def(
      "central_char_json",
      [](int n, long p, int k, int rmax, uint64_t seed, bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_central_char_probe(eng));
      },
      GLNC_ARGS);
  m.def(
      "verify_json",
      [](const std::string& suite, int n, long p, int k, int rmax, uint64_t seed,
         bool all_generic, double tg, double ts) {
        glnc::Engine eng(make_cfg(n, p, k, rmax, seed, all_generic, tg, ts));
        return glnc::to_json_string(glnc::run_verify(eng, suite));
      },
      py::arg("suite") = "all", GLNC_ARGS);
  m.def("verify_suites", [] {
    py::list out;
    for (const auto& s : glnc::verify_suites()) out.append(s);
    return out;
  });

#undef GLNC_ARGS
}
