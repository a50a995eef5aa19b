// Command-line front end: resolve plane curve germs, emit zeta reports in
// JSON/DOT/LaTeX/plain text, run the verification suites and family sweeps.
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "germzeta/errors.hpp"
#include "germzeta/germ.hpp"
#include "germzeta/hodge.hpp"
#include "germzeta/parse.hpp"
#include "germzeta/report.hpp"
#include "germzeta/resolve.hpp"
#include "germzeta/suspension.hpp"
#include "germzeta/surface.hpp"
#include "germzeta/verify.hpp"
#include "germzeta/zeta.hpp"

namespace {

using germzeta::Rat;
using ordered_json = nlohmann::ordered_json;

ordered_json rat_json(const Rat& r) {
  return ordered_json{{"num", r.num().get_str()}, {"den", r.den().get_str()}};
}

ordered_json ratfun_json(const germzeta::RatFun1& z) {
  auto [num, den] = germzeta::cleared_coeffs(z);
  ordered_json jn = ordered_json::array(), jd = ordered_json::array();
  for (const auto& c : num) jn.push_back(c.get_str());
  for (const auto& c : den) jd.push_back(c.get_str());
  return ordered_json{{"num", jn}, {"den", jd}};
}

ordered_json poles_json(const std::vector<germzeta::PoleInfo>& ps) {
  ordered_json arr = ordered_json::array();
  for (const auto& p : ps)
    arr.push_back(ordered_json{{"location", rat_json(p.location)},
                               {"order", p.order},
                               {"residue", rat_json(p.leading)}});
  return arr;
}

ordered_json rats_json(const std::vector<Rat>& v) {
  ordered_json arr = ordered_json::array();
  for (const auto& r : v) arr.push_back(rat_json(r));
  return arr;
}

ordered_json bipoly_json(const germzeta::BiPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& [e, c] : p.terms())
    arr.push_back(ordered_json{{"w", e.first}, {"T", e.second}, {"coeff", rat_json(c)}});
  return arr;
}

ordered_json report_head(const std::string& command) {
  return ordered_json{{"schema_version", "1"}, {"command", command}};
}

void write_out(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw germzeta::ParamOutOfRange("cannot open output file: " + path);
  f << text << "\n";
}

germzeta::ResolutionGraph resolve_poly(const std::string& text) {
  return germzeta::resolve_germ(germzeta::germ_localize(germzeta::parse_poly(text)));
}

std::vector<Rat> split_rats(const std::string& text, char sep) {
  std::vector<Rat> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (item.empty()) throw germzeta::ParamOutOfRange("empty entry in list: " + text);
    out.push_back(Rat::from_string(item));
  }
  if (out.empty()) throw germzeta::ParamOutOfRange("empty list: " + text);
  return out;
}

std::pair<long, long> parse_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos)
    throw germzeta::ParamOutOfRange("range must look like a..b, got: " + text);
  try {
    long lo = std::stol(text.substr(0, dots));
    long hi = std::stol(text.substr(dots + 2));
    return {lo, hi};
  } catch (const std::exception&) {
    throw germzeta::ParamOutOfRange("range must look like a..b, got: " + text);
  }
}

int run(int argc, char** argv) {
  CLI::App app{"Topological zeta functions of plane curve germs via embedded resolution"};
  app.require_subcommand(1);

  std::string poly, format = "json", out_path, suite, family, range_text, preset, lines_text,
              alphas_text;
  long d = 1, n_param = 0, big_n = 1;
  std::uint64_t seed = germzeta::kDefaultSeed;
  bool inject_fault = false;

  auto* cmd_resolve = app.add_subcommand("resolve", "Resolve a germ and print its graph");
  cmd_resolve->add_option("--poly", poly, "germ polynomial in x, y")->required();
  cmd_resolve->add_option("--format", format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}));
  cmd_resolve->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_zeta = app.add_subcommand("zeta", "Topological zeta function of a germ");
  cmd_zeta->add_option("--poly", poly, "germ polynomial in x, y")->required();
  cmd_zeta->add_option("--d", d, "restrict to strata with d | N")->check(CLI::PositiveNumber);
  cmd_zeta->add_option("--format", format, "json, latex or text")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  cmd_zeta->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_lct = app.add_subcommand("lct", "Log canonical threshold of a germ");
  cmd_lct->add_option("--poly", poly, "germ polynomial in x, y")->required();
  cmd_lct->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_lct->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_susp = app.add_subcommand("suspend", "Zeta function of f(x,y) + z^2");
  cmd_susp->add_option("--poly", poly, "curve germ polynomial in x, y")->required();
  cmd_susp->add_option("--format", format, "json, latex or text")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  cmd_susp->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_surf = app.add_subcommand("surface-contrib",
                                      "Residue contribution of a weighted line configuration");
  cmd_surf->add_option("--preset", preset,
                       "one-line, two-lines, three-concurrent, three-general, "
                       "three-concurrent-plus-one or four-general");
  cmd_surf->add_option("--lines", lines_text, "semicolon-separated a,b,c coefficient triples");
  cmd_surf->add_option("--alphas", alphas_text, "comma-separated weights, one per line")
      ->required();
  cmd_surf->add_option("--N", big_n, "multiplicity prefactor")->check(CLI::PositiveNumber);
  cmd_surf->add_option("--format", format, "json or text")
      ->check(CLI::IsMember({"json", "text"}));
  cmd_surf->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_hodge = app.add_subcommand("hodge", "Hodge-refined zeta function of a germ");
  cmd_hodge->add_option("--poly", poly, "germ polynomial in x, y")->required();
  cmd_hodge->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_verify = app.add_subcommand("verify", "Run the verification suites");
  cmd_verify->add_option("--suite", suite, "single suite to run (default: all)")
      ->check(CLI::IsMember(germzeta::suite_names()));
  cmd_verify->add_option("--seed", seed, "seed for the randomized suites");
  cmd_verify->add_flag("--inject-fault", inject_fault)->group("");  // test hook, hidden
  cmd_verify->add_option("--out", out_path, "output file (default stdout)");

  auto* cmd_sweep = app.add_subcommand("sweep", "Scan a parametric family");
  cmd_sweep->add_option("--family", family, "y2xk, x3y2xk, suspension or threevar")
      ->required()
      ->check(CLI::IsMember(germzeta::sweep_families()));
  cmd_sweep->add_option("--range", range_text, "k range, e.g. 5..16")->required();
  cmd_sweep->add_option("--n", n_param, "extra parameter of the three-variable family");
  cmd_sweep->add_option("--out", out_path, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (app.got_subcommand(cmd_resolve)) {
    germzeta::ResolveResult rr =
        germzeta::resolve_germ_full(germzeta::germ_localize(germzeta::parse_poly(poly)));
    if (format == "dot") {
      write_out(out_path, germzeta::emit_dot(rr.graph));
      return 0;
    }
    ordered_json rep = report_head("resolve");
    rep["input"] = {{"poly", poly}};
    rep["blowups"] = rr.audit.size();
    rep["graph"] = ordered_json::parse(germzeta::graph_to_json(rr.graph));
    write_out(out_path, rep.dump(2));
    return 0;
  }

  if (app.got_subcommand(cmd_zeta)) {
    germzeta::ResolutionGraph g = resolve_poly(poly);
    germzeta::RatFun1 z = germzeta::zeta_d(g, d);
    auto ps = germzeta::poles(z);
    if (format == "latex") {
      write_out(out_path, germzeta::emit_latex(z));
      return 0;
    }
    if (format == "text") {
      std::string text = "zeta = " + z.to_string() + "\nlct = " + germzeta::lct(g).to_string();
      for (const auto& p : ps)
        text += "\npole " + p.location.to_string() + " (order " + std::to_string(p.order) +
                ", residue " + p.leading.to_string() + ")";
      write_out(out_path, text);
      return 0;
    }
    ordered_json rep = report_head("zeta");
    rep["input"] = {{"poly", poly}, {"d", d}};
    rep["graph"] = ordered_json::parse(germzeta::graph_to_json(g));
    rep["zeta"] = ratfun_json(z);
    rep["latex"] = germzeta::emit_latex(z);
    rep["poles"] = poles_json(ps);
    rep["candidates"] = rats_json(germzeta::candidate_poles(g));
    rep["lct"] = rat_json(germzeta::lct(g));
    write_out(out_path, rep.dump(2));
    return 0;
  }

  if (app.got_subcommand(cmd_lct)) {
    germzeta::ResolutionGraph g = resolve_poly(poly);
    Rat l = germzeta::lct(g);
    if (format == "text") {
      write_out(out_path, "lct = " + l.to_string());
      return 0;
    }
    ordered_json rep = report_head("lct");
    rep["input"] = {{"poly", poly}};
    rep["lct"] = rat_json(l);
    rep["candidates"] = rats_json(germzeta::candidate_poles(g));
    write_out(out_path, rep.dump(2));
    return 0;
  }

  if (app.got_subcommand(cmd_susp)) {
    germzeta::ResolutionGraph g = resolve_poly(poly);
    germzeta::RatFun1 zf = germzeta::zeta_top(g);
    germzeta::RatFun1 zf2 = germzeta::zeta_d(g, 2);
    germzeta::RatFun1 zF = germzeta::suspend_zeta(zf, zf2);
    if (format == "latex") {
      write_out(out_path, germzeta::emit_latex(zF));
      return 0;
    }
    if (format == "text") {
      write_out(out_path, "suspended zeta = " + zF.to_string());
      return 0;
    }
    ordered_json rep = report_head("suspend");
    rep["input"] = {{"poly", poly}};
    rep["curve_zeta"] = ratfun_json(zf);
    rep["curve_zeta_d2"] = ratfun_json(zf2);
    rep["suspended"] = ratfun_json(zF);
    rep["latex"] = germzeta::emit_latex(zF);
    rep["poles"] = poles_json(germzeta::poles(zF));
    write_out(out_path, rep.dump(2));
    return 0;
  }

  if (app.got_subcommand(cmd_surf)) {
    if (preset.empty() == lines_text.empty())
      throw germzeta::ParamOutOfRange("give exactly one of --preset and --lines");
    std::vector<std::array<Rat, 3>> lines;
    if (!preset.empty()) {
      lines = germzeta::preset_lines(preset);
    } else {
      std::stringstream ss(lines_text);
      std::string triple;
      while (std::getline(ss, triple, ';')) {
        auto v = split_rats(triple, ',');
        if (v.size() != 3)
          throw germzeta::ParamOutOfRange("each line needs three coefficients: " + triple);
        lines.push_back({v[0], v[1], v[2]});
      }
    }
    germzeta::SurfaceConfig cfg = germzeta::make_config(lines, split_rats(alphas_text, ','));
    germzeta::ConfigResolution res = germzeta::arrangement_resolve(cfg);
    Rat contrib = germzeta::contribution_surface(res, big_n);
    if (format == "text") {
      write_out(out_path, "contribution = " + contrib.to_string());
      return 0;
    }
    ordered_json rep = report_head("surface-contrib");
    ordered_json jlines = ordered_json::array();
    for (const auto& l : lines)
      jlines.push_back(ordered_json::array({rat_json(l[0]), rat_json(l[1]), rat_json(l[2])}));
    rep["input"] = {{"preset", preset.empty() ? nullptr : ordered_json(preset)},
                    {"lines", jlines},
                    {"alphas", rats_json(cfg.alphas)},
                    {"N", big_n}};
    rep["curve_weights"] = rats_json(res.curve_alpha);
    ordered_json pts = ordered_json::array();
    for (const auto& [a, b] : res.points) pts.push_back(ordered_json::array({a, b}));
    rep["double_points"] = pts;
    rep["blowups"] = res.blowups;
    rep["chi_consistent"] = germzeta::chi_bookkeeping_holds(res);
    rep["contribution"] = rat_json(contrib);
    write_out(out_path, rep.dump(2));
    return 0;
  }

  if (app.got_subcommand(cmd_hodge)) {
    germzeta::ResolutionGraph g = resolve_poly(poly);
    germzeta::HodgeZeta zh = germzeta::zeta_hodge(g);
    ordered_json rep = report_head("hodge");
    rep["input"] = {{"poly", poly}};
    rep["graph"] = ordered_json::parse(germzeta::graph_to_json(g));
    rep["hodge"] = {{"num", bipoly_json(zh.num)}, {"den", bipoly_json(zh.den)}};
    ordered_json orders = ordered_json::array();
    for (const Rat& cand : germzeta::candidate_poles(g))
      orders.push_back(ordered_json{{"location", rat_json(cand)},
                                    {"order", germzeta::hodge_pole_order(zh, cand)}});
    rep["pole_orders"] = orders;
    write_out(out_path, rep.dump(2));
    return 0;
  }

  if (app.got_subcommand(cmd_verify)) {
    std::vector<std::string> names =
        suite.empty() ? germzeta::suite_names() : std::vector<std::string>{suite};
    germzeta::SuiteOptions opt;
    opt.seed = seed;
    opt.inject_fault = inject_fault;
    ordered_json suites = ordered_json::array();
    bool all_pass = true;
    for (const auto& name : names) {
      germzeta::SuiteResult r = germzeta::run_suite(name, opt);
      all_pass = all_pass && r.pass();
      ordered_json notes = ordered_json::array();
      for (const auto& t : r.failure_notes) notes.push_back(t);
      suites.push_back(ordered_json{{"suite", r.suite},
                                    {"checks", r.checks},
                                    {"failures", r.failures},
                                    {"skipped", r.skipped},
                                    {"pass", r.pass()},
                                    {"failure_notes", notes}});
      std::cerr << "suite " << r.suite << ": " << (r.pass() ? "PASS" : "FAIL") << " ("
                << r.checks << " checks, " << r.failures << " failures";
      if (r.skipped) std::cerr << ", " << r.skipped << " germs skipped";
      std::cerr << ")\n";
    }
    ordered_json rep = report_head("verify");
    rep["seed"] = seed;
    rep["suites"] = suites;
    rep["pass"] = all_pass;
    write_out(out_path, rep.dump(2));
    return all_pass ? 0 : 2;
  }

  if (app.got_subcommand(cmd_sweep)) {
    auto [lo, hi] = parse_range(range_text);
    auto records = germzeta::run_sweep(family, lo, hi, n_param);
    ordered_json recs = ordered_json::array();
    bool all_ok = true;
    for (const auto& r : records) {
      all_ok = all_ok && r.ok;
      recs.push_back(
          ordered_json{{"n", r.n}, {"k", r.k}, {"ok", r.ok}, {"detail", r.detail}});
    }
    ordered_json rep = report_head("sweep");
    rep["family"] = family;
    rep["n"] = n_param;
    rep["range"] = ordered_json::array({lo, hi});
    rep["records"] = recs;
    rep["pass"] = all_ok;
    write_out(out_path, rep.dump(2));
    return all_ok ? 0 : 2;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const germzeta::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
