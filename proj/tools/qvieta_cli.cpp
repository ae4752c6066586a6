// Command-line driver: seeded verification campaigns over random generic
// tuples, single-shot quasideterminants, ribbon functions and membership
// queries. Exit codes: 0 pass, 1 check failure, 2 usage or I/O error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qvieta/qvieta.hpp"

namespace {

int degree_bound_from_env() {
  if (const char* s = std::getenv("QVIETA_DEGREE_BOUND")) {
    try {
      const int v = std::stoi(s);
      if (v >= 1) return v;
    } catch (...) {
    }
    std::cerr << "warning: ignoring invalid QVIETA_DEGREE_BOUND=\"" << s << "\"\n";
  }
  return 5;
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int cmd_verify(const qvieta::CampaignConfig& cfg, const std::string& report_path,
               bool json_stdout) {
  qvieta::CampaignReport report = qvieta::run_campaign(cfg);
  if (!report_path.empty()) {
    std::ofstream out(report_path, std::ios::binary);
    if (!out) {
      std::cerr << "error: cannot open report file " << report_path << "\n";
      return 2;
    }
    out << report.to_jsonl();
    if (!out.good()) {
      std::cerr << "error: failed writing report file " << report_path << "\n";
      return 2;
    }
  }
  if (json_stdout)
    std::cout << report.to_jsonl();
  else
    std::cout << report.summary_text();
  return report.all_passed() ? 0 : 1;
}

int cmd_quasidet(const std::string& input_path, int p, int q) {
  std::ifstream in(input_path);
  if (!in) {
    std::cerr << "error: cannot open " << input_path << "\n";
    return 2;
  }
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    std::cerr << "error: malformed JSON: " << e.what() << "\n";
    return 2;
  }
  qvieta::BlockMatrix a = qvieta::block_matrix_from_json(j);
  qvieta::QuasidetResult r = qvieta::quasidet(a, p, q);
  if (!r.defined()) {
    std::cout << "undefined: " << r.failure->describe() << "\n";
    return 1;
  }
  std::cout << qvieta::matrix_to_json(*r.value).dump() << "\n";
  return 0;
}

int cmd_ribbon(const std::string& parts_csv, int n) {
  qvieta::Composition J;
  for (const auto& part : split_commas(parts_csv)) J.push_back(std::stoi(part));
  if (J.empty()) {
    std::cerr << "error: empty composition\n";
    return 2;
  }
  std::cout << qvieta::ribbon(J, n).str() << "\n";
  return 0;
}

int cmd_membership(const std::string& poly_text, int n, int degree_bound) {
  qvieta::FreePolynomial p = qvieta::FreePolynomial::parse(poly_text, n);
  qvieta::MembershipResult r = qvieta::symm_membership(p, degree_bound);
  if (r.refused) {
    std::cerr << "refused: " << r.refusal << "\n";
    return 2;
  }
  if (r.member)
    std::cout << "member: " << r.certificate_text() << "\n";
  else
    std::cout << "non-member\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact quasideterminant / noncommutative Vieta verification engine"};
  app.require_subcommand(1);

  qvieta::CampaignConfig cfg;
  cfg.membership_degree_bound = degree_bound_from_env();
  std::string checks_csv, report_path;
  bool json_stdout = false;
  auto* verify = app.add_subcommand("verify", "run a seeded verification campaign");
  verify->add_option("--n", cfg.n, "number of solutions x_1..x_n");
  verify->add_option("--dim", cfg.dim, "matrix dimension d");
  verify->add_option("--trials", cfg.trials, "number of independent tuples");
  verify->add_option("--seed", cfg.seed, "master seed (64-bit)");
  verify->add_option("--bound", cfg.entry_bound, "entry bound for random draws");
  verify->add_option("--checks", checks_csv, "comma list of checks to run");
  verify->add_option("--report", report_path, "write JSON-lines report to this path");
  verify->add_flag("--json", json_stdout, "print the JSON-lines report to stdout");

  std::string qd_input;
  int qd_p = 1, qd_q = 1;
  auto* qd = app.add_subcommand("quasidet", "quasideterminant of a block matrix JSON file");
  qd->add_option("--input", qd_input, "BlockMatrix JSON file")->required();
  qd->add_option("--p", qd_p, "row label");
  qd->add_option("--q", qd_q, "column label");

  std::string ribbon_parts;
  int ribbon_n = 2;
  auto* rb = app.add_subcommand("ribbon", "ribbon Schur function R_J");
  rb->add_option("--J", ribbon_parts, "composition, e.g. 1,2,1")->required();
  rb->add_option("--n", ribbon_n, "alphabet size");

  std::string memb_poly;
  int memb_n = 2;
  auto* mb = app.add_subcommand("membership", "decide membership in Symm with certificate");
  mb->add_option("--poly", memb_poly, "polynomial, e.g. \"y1.y1 + y1.y2 + y2.y2\"")->required();
  mb->add_option("--n", memb_n, "alphabet size");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*verify) {
      if (!checks_csv.empty()) cfg.checks = split_commas(checks_csv);
      return cmd_verify(cfg, report_path, json_stdout);
    }
    if (*qd) return cmd_quasidet(qd_input, qd_p, qd_q);
    if (*rb) return cmd_ribbon(ribbon_parts, ribbon_n);
    if (*mb) return cmd_membership(memb_poly, memb_n, cfg.membership_degree_bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
