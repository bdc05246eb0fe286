#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <set>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "ucf/io.hpp"
#include "ucf/report.hpp"
#include "ucf/ucf.hpp"

namespace {

using ucf::report::Json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

unsigned env_threads() {
  const char* v = std::getenv("UCF_THREADS");
  if (v == nullptr || *v == '\0') return 0;
  try {
    const long t = std::stol(v);
    return t > 0 ? static_cast<unsigned>(t) : 0;
  } catch (const std::exception&) {
    return 0;
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ucf::Error(ucf::ErrorCode::ParseError, "cannot open " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

int cmd_analyze(const std::string& path) {
  const std::string text = slurp(path);
  const ucf::Family f = ucf::parse_family(std::string_view(text));
  const auto a = ucf::report::analyze(f, path, ucf::report::digest(text));
  print(a.json);
  return a.violation ? kExitViolation : kExitPass;
}

int cmd_construct(const std::string& kind, int n, int k, bool no_verify, const std::string& out) {
  ucf::Construction c = [&] {
    if (kind == "astar") return ucf::build_astar(n, !no_verify);
    if (kind == "astarstar") return ucf::build_astarstar(n, !no_verify);
    return ucf::build_ak(n, k, !no_verify);
  }();
  Json j = ucf::report::construction_report(c);
  const std::string text = ucf::emit_family(c.family);
  if (!out.empty()) {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ucf::Error(ucf::ErrorCode::ParseError, "cannot write " + out);
    f << text;
    j["family_file"] = out;
    j["family_digest"] = ucf::report::digest(text);
  } else {
    Json lines = Json::array();
    for (ucf::SetWord s : c.family) lines.push_back(ucf::format_set_line(s));
    j["family"] = lines;
  }
  print(j);
  return kExitPass;
}

int cmd_verify(const std::string& id_text, int n, bool deep, const std::string& out_dir, bool necessity, bool timing,
               std::size_t max_violations) {
  const ucf::TheoremId id = ucf::parse_theorem_id(id_text);
  if (n >= 5 && !deep) {
    std::cerr << "error: n=" << n << " enumerates millions of families; pass --deep\n";
    return kExitUsage;
  }
  if (n >= 5) std::cerr << "enumerating all union-closed families on [" << n << "] ...\n";
  ucf::VerifyOptions opt;
  opt.threads = env_threads();
  opt.hypothesis_necessity = necessity;
  opt.max_violations = max_violations;
  const ucf::VerifyReport r = ucf::verify_theorem(id, n, opt);
  if (n >= 5) std::cerr << "checked " << r.families_checked << " families\n";
  Json j = ucf::report::verify_report(r, timing);
  if (!out_dir.empty() && !r.violations.empty()) {
    std::filesystem::create_directories(out_dir);
    Json files = Json::array();
    for (std::size_t i = 0; i < r.violations.size(); ++i) {
      const auto p = std::filesystem::path(out_dir) /
                     (std::string(ucf::to_string(id)) + "_n" + std::to_string(n) + "_" + std::to_string(i) + ".txt");
      std::ofstream(p, std::ios::binary) << ucf::emit_family(r.violations[i].family);
      files.push_back(p.string());
    }
    j["violation_files"] = files;
  }
  print(j);
  return r.pass() ? kExitPass : kExitViolation;
}

int cmd_bounds(int n, const std::string& grid) {
  const ucf::Rational step = ucf::Rational::parse(grid);
  const auto b = ucf::report::bounds_report(n, step);
  print(b.json);
  return b.ok ? kExitPass : kExitViolation;
}

int cmd_enumerate(int n, bool separating, bool count_only, bool iso) {
  ucf::EnumFilter filter;
  if (separating) filter.separating = true;
  if (!count_only) {
    const std::uint64_t count = ucf::enumerate_uc(n, filter, [](const ucf::Family& f) { std::cout << ucf::emit_family(f); });
    std::cerr << count << " families\n";
    return kExitPass;
  }
  Json j;
  j["command"] = "enumerate";
  j["n"] = n;
  j["filter"] = ucf::report::to_json(filter);
  if (iso) {
    std::set<ucf::Family> classes;
    j["count"] = ucf::enumerate_uc(n, filter, [&](const ucf::Family& f) { classes.insert(ucf::canonical_form(f)); });
    j["iso_classes"] = classes.size();
  } else {
    j["count"] = ucf::enumerate_uc(n, filter, [](const ucf::Family&) {});
  }
  print(j);
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Analyze, construct and exhaustively check union-closed families"};
  app.require_subcommand(1);

  std::string path;
  auto* analyze = app.add_subcommand("analyze", "Report every computed property of a family file");
  analyze->add_option("file", path, "Family file")->required();

  std::string kind, out;
  int n = 0, k = 0;
  bool no_verify = false;
  auto* construct = app.add_subcommand("construct", "Build an extremal family with its certificate");
  construct->add_option("kind", kind, "astar | astarstar | ak")
      ->required()
      ->check(CLI::IsMember({"astar", "astarstar", "ak"}));
  construct->add_option("--n", n, "Ground set size")->required();
  construct->add_option("--k", k, "Target height (ak only)");
  construct->add_flag("--no-verify", no_verify, "Skip the certificate checks");
  construct->add_option("--out", out, "Write the family to this file");

  std::string id, out_dir;
  int vn = 0;
  bool deep = false, necessity = false, timing = false;
  std::size_t max_violations = 1000;
  auto* verify = app.add_subcommand("verify", "Check a theorem over every union-closed family on [n]");
  verify->add_option("--id", id, "T1.2 L1.3 T1.4 L2.1.1 T2.1 C2.2 T4.1 PROPS")->required();
  verify->add_option("--n", vn, "Ground set size")->required();
  verify->add_flag("--deep", deep, "Allow n=5");
  verify->add_option("--out", out_dir, "Write violating families to this directory");
  verify->add_flag("--hypothesis-necessity", necessity, "Drop the n >= 4 hypothesis");
  verify->add_flag("--timing", timing, "Include elapsed time (not byte-stable)");
  verify->add_option("--max-violations", max_violations, "Stored violation cap");

  int bn = 0;
  std::string grid = "1/100";
  auto* bounds = app.add_subcommand("bounds", "Minimize the relaxed bound functions");
  bounds->add_option("--n", bn, "Ground set size")->required();
  bounds->add_option("--grid", grid, "Grid step as p/q");

  int en = 0;
  bool separating = false, count_only = false, iso = false;
  auto* enumerate = app.add_subcommand("enumerate", "List union-closed families with base [n]");
  enumerate->add_option("--n", en, "Ground set size")->required();
  enumerate->add_flag("--separating", separating, "Only separating families");
  enumerate->add_flag("--count-only", count_only, "Print counts instead of families");
  enumerate->add_flag("--iso-classes", iso, "Also count isomorphism classes (with --count-only)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*analyze) return cmd_analyze(path);
    if (*construct) return cmd_construct(kind, n, k, no_verify, out);
    if (*verify) return cmd_verify(id, vn, deep, out_dir, necessity, timing, max_violations);
    if (*bounds) return cmd_bounds(bn, grid);
    if (*enumerate) return cmd_enumerate(en, separating, count_only, iso);
  } catch (const ucf::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ucf::ErrorCode::CertificateFailed ? kExitViolation : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
