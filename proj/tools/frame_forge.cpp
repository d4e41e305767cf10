// frame-forge: command-line front end for the frameforge library.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "frameforge/frameforge.hpp"

namespace ff = frameforge;
using ff::json;

namespace {

constexpr const char* kVersion = "0.1.0";

struct Globals {
  int window_exp = 4;
  double tol = ff::kValueTol;
  int tq_range = 9;
  int depth = 20;
  std::uint64_t seed = 0;
  std::string format = "json";
  bool timing = false;
};

struct Result {
  json report;
  bool ok = true;
};

struct Run {
  Globals g;
  json inputs = json::object();

  // A file, "-" for stdin, or a catalog name.
  json load(const std::string& src, const std::string& role) {
    std::string text;
    if (src == "-") {
      text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    } else if (std::ifstream in(src); in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      text = ss.str();
    } else if (ff::find_catalog_entry(src)) {
      json j = ff::to_json(ff::catalog(src, g.window_exp));
      inputs[role] = {{"source", src}, {"fnv1a", ff::fnv1a("catalog:" + src + ":" + std::to_string(g.window_exp))}};
      return j;
    } else {
      ff::catalog(src, g.window_exp);  // throws with the list of names
    }
    inputs[role] = {{"source", src == "-" ? "stdin" : src}, {"fnv1a", ff::fnv1a(text)}};
    try {
      return json::parse(text);
    } catch (const nlohmann::json::exception& e) {
      throw ff::input_error(role + ": " + e.what());
    }
  }

  ff::StepFunction step(const std::string& src, const std::string& role, const char* key) {
    return ff::step_in(load(src, role), key);
  }

  ff::PeriodicStepFunction filter_or_one(const std::string& src, const std::string& role) {
    if (src == "one") return ff::PeriodicStepFunction::constant(1.0);
    return ff::pstep_in(load(src, role), "m0");
  }

  ff::ScalingPair scaling(const std::string& src) {
    ff::ScalingPair p = ff::is_scaling(step(src, "scaling", "phi"), g.tol);
    if (!p.all() || !p.m0) throw ff::input_error("input is not a scaling function (S1-S3 fail)");
    return p;
  }

  json envelope(const std::string& command) const {
    return json{{"ff-schema", ff::kSchemaVersion},
                {"command", command},
                {"tool_version", kVersion},
                {"inputs", inputs},
                {"flags",
                 {{"window_exp", g.window_exp}, {"tol", g.tol}, {"tq_range", g.tq_range}, {"depth", g.depth}, {"seed", g.seed}}}};
  }
};

json opt(const std::optional<ff::Interval>& i) { return i ? ff::to_json(*i) : json(nullptr); }

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ff::input_error("cannot write " + path);
  out << text;
}

// One row per piece of the canonical partition, plus zero rows on gaps.
std::string plot_rows(const ff::Pieces& p, ff::Dyadic lo, ff::Dyadic hi) {
  std::vector<ff::Dyadic> pts{lo, hi};
  for (const auto& q : p) pts.insert(pts.end(), {q.iv.a, q.iv.b});
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::ostringstream os;
  os.precision(17);
  os << "xi_num,xi_exp,re,im,abs\n";
  for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
    if (pts[k] < lo || !(pts[k] < hi)) continue;
    const ff::Piece* q = ff::detail::find_piece(p, pts[k]);
    ff::cplx v = q ? q->v.value() : ff::cplx{};
    os << pts[k].num() << ',' << pts[k].exp() << ',' << v.real() << ',' << v.imag() << ',' << std::abs(v) << '\n';
  }
  return os.str();
}

void flatten(const json& j, const std::string& path, std::ostream& os) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), path.empty() ? it.key() : path + "." + it.key(), os);
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
  } else {
    os << path << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

json deviation_json(const ff::Deviation& d) {
  return json{{"value", d.value}, {"witness", opt(d.witness)}, {"negative_side", d.negative_side}};
}

// --- commands -------------------------------------------------------------

Result cmd_catalog(Run& r, const std::string& name) {
  Result res;
  res.report = r.envelope("catalog");
  if (name.empty()) {
    json list = json::array();
    for (const auto& e : ff::catalog_entries())
      list.push_back({{"name", e.name}, {"kind", e.kind == ff::CatalogKind::scaling ? "scaling" : "wavelet"}, {"description", e.description}});
    res.report["entries"] = list;
    return res;
  }
  res.report["name"] = name;
  res.report["function"] = ff::to_json(ff::catalog(name, r.g.window_exp));
  return res;
}

Result cmd_verify_scaling(Run& r, const std::string& src) {
  ff::ScalingPair p = ff::is_scaling(r.step(src, "scaling", "phi"), r.g.tol);
  Result res;
  res.report = r.envelope("verify-scaling");
  json b = ff::scaling_bundle(p);
  for (auto it = b.begin(); it != b.end(); ++it)
    if (it.key() != "ff-schema") res.report[it.key()] = it.value();
  ff::MaximalityReport m = ff::is_maximal(p.phi, r.g.tol);
  res.report["is_maximal"] = m.maximal;
  res.report["maximal_witness"] = opt(m.witness);
  res.report["S1"] = ff::to_json(p.s1);
  res.report["S2"] = ff::to_json(p.s2);
  res.report["S3"] = ff::to_json(p.s3);
  res.ok = p.all();
  return res;
}

json wavelet_bundle(const ff::StepFunction& psi, const ff::FilterBank& bank, const std::string& provenance) {
  return json{{"ff-schema", ff::kSchemaVersion}, {"kind", "wavelet"}, {"provenance", provenance}, {"psi", ff::to_json(psi)},
              {"m0", ff::to_json(bank.m0)}, {"m1", ff::to_json(bank.m1)}};
}

Result cmd_synthesize(Run& r, const std::string& src, const std::string& mu0, const std::string& mu1, const std::string& out) {
  ff::ScalingPair p = r.scaling(src);
  ff::FilterBank bank = ff::complete_bank(*p.m0, r.filter_or_one(mu0, "mu0"), r.filter_or_one(mu1, "mu1"));
  ff::StepFunction psi = ff::synthesize(p.phi, bank.m1);
  ff::Check fp = ff::check_FP(bank, r.g.tol);
  json bundle = wavelet_bundle(psi, bank, "synthesize " + src);
  Result res;
  res.report = r.envelope("synthesize");
  res.report["FP"] = ff::to_json(fp);
  if (!out.empty()) {
    write_file(out, bundle.dump(2) + "\n");
    res.report["written"] = out;
  } else {
    res.report["bundle"] = bundle;
  }
  res.ok = fp.ok;
  return res;
}

Result cmd_verify_wavelet(Run& r, const std::string& src, bool norm_check) {
  ff::StepFunction psi = r.step(src, "wavelet", "psi");
  ff::ParsevalReport pr = ff::is_parseval(psi, r.g.tol);
  ff::TqReport shown = ff::t_q_range(psi, r.g.tq_range, r.g.tol);
  Result res;
  res.report = r.envelope("verify-wavelet");
  res.report["calderon_max_dev"] = pr.calderon.value;
  res.report["calderon"] = deviation_json(pr.calderon);
  auto tq_json = [](const ff::TqValue& v) {
    return json{{"q", v.q}, {"max_abs", v.max_abs}, {"witness", opt(v.witness)}};
  };
  json tq = json::array();
  for (const auto& v : shown.values) tq.push_back(tq_json(v));
  res.report["tq"] = {{"range", r.g.tq_range}, {"max_abs", shown.max_abs}, {"values", tq},
                      {"witness", shown.witness ? tq_json(*shown.witness) : json(nullptr)}};
  res.report["tq_complete"] = {{"range", ff::complete_tq_range(psi)}, {"max_abs", pr.tq.max_abs},
                               {"witness", pr.tq.witness ? tq_json(*pr.tq.witness) : json(nullptr)}};
  double n = ff::norm_sq(psi);
  if (norm_check) {
    res.report["norm_sq"] = n;
    res.report["orthonormal"] = pr.ok && std::abs(n - 1.0) <= r.g.tol;
  }
  json w = json::array();
  if (pr.calderon.value > r.g.tol && pr.calderon.witness)
    w.push_back({{"label", "calderon"}, {"xi", ff::to_json(pr.calderon.witness->a)}, {"expected", 1.0},
                 {"got", 1.0 + (pr.calderon.value)}});
  if (pr.tq.witness && pr.tq.witness->witness)
    w.push_back({{"label", "t_q"}, {"q", pr.tq.witness->q}, {"xi", ff::to_json(pr.tq.witness->witness->a)}, {"expected", 0.0},
                 {"got", pr.tq.witness->max_abs}});
  res.report["witnesses"] = w;
  res.report["verdicts"] = {{"calderon", pr.calderon.value <= r.g.tol}, {"t_q", !pr.tq.witness}, {"parseval", pr.ok}};
  res.ok = pr.ok;
  return res;
}

Result cmd_project(Run& r, const std::string& src, const std::string& set, const std::string& out) {
  ff::StepFunction phi = r.step(src, "scaling", "phi");
  ff::PeriodicSet e = ff::pset_in(r.load(set, "set"));
  ff::StepFunction proj = ff::project(phi, e);
  ff::ScalingPair p = ff::is_scaling(proj, r.g.tol);
  Result res;
  res.report = r.envelope("project");
  json bundle = ff::scaling_bundle(p);
  res.report["verdicts"] = bundle["verdicts"];
  if (!out.empty()) {
    write_file(out, bundle.dump(2) + "\n");
    res.report["written"] = out;
  } else {
    res.report["bundle"] = bundle;
  }
  return res;
}

Result cmd_check_projection(Run& r, const std::string& src, const std::string& set) {
  ff::ScalingPair p = r.scaling(src);
  ff::MaximalityReport m = ff::is_maximal(p.phi, r.g.tol);
  if (!m.maximal) throw ff::input_error("check-projection needs a maximal scaling function; run maximalize first");
  ff::PeriodicSet e = ff::pset_in(r.load(set, "set"));
  ff::ProjectionConditions pc = ff::check_projection_conditions(p.phi, *p.m0, e, r.g.tol);
  Result res;
  res.report = r.envelope("check-projection");
  res.report["C"] = ff::to_json(pc.C);
  res.report["conditions"] = {{"reductive", pc.reductive}, {"cond1", pc.cond1}, {"cond2", pc.cond2}, {"cond3", pc.cond3},
                              {"all", pc.all()}};
  res.report["displayed_form"] = pc.displayed_form;
  res.report["window_sufficient"] = pc.window_sufficient;
  res.report["witnesses"] = {{"reductive", opt(pc.reductive_witness)}, {"cond1", opt(pc.cond1_witness)},
                             {"cond2", opt(pc.cond2_witness)}, {"cond3", opt(pc.cond3_witness)}};
  res.ok = pc.all();
  return res;
}

std::pair<ff::Amp, ff::Amp> parse_pair(const std::string& s) {
  std::vector<double> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stod(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw ff::input_error("--pair expects four numbers re,im,re,im");
    }
  }
  if (v.size() != 4) throw ff::input_error("--pair expects four numbers re,im,re,im");
  return {ff::Amp(ff::cplx(v[0], v[1])), ff::Amp(ff::cplx(v[2], v[3]))};
}

Result cmd_maximalize(Run& r, const std::string& src, const std::string& nu, const std::string& pair, const std::string& out) {
  ff::ScalingPair p = r.scaling(src);
  ff::MaximalizationChoices ch;
  if (!nu.empty()) ch.nu = r.filter_or_one(nu, "nu");
  if (!pair.empty()) ch.pair = parse_pair(pair);
  ff::Maximalization mx = ff::maximalize(p, ch, r.g.tol);
  ff::ScalingPair star = ff::is_scaling(mx.phi_star, r.g.tol);
  json bundle = ff::scaling_bundle(star);
  bundle["m0_star"] = ff::to_json(mx.m0_star);
  bundle["tail_bound"] = mx.tail_bound;
  bundle["unchanged"] = mx.unchanged;
  if (!out.empty()) {
    write_file(out, bundle.dump(2) + "\n");
    Result res;
    res.report = r.envelope("maximalize");
    res.report["written"] = out;
    res.report["verdicts"] = bundle["verdicts"];
    res.report["tail_bound"] = mx.tail_bound;
    res.ok = star.all();
    return res;
  }
  // Without -o the bundle itself goes to stdout so it can be piped on.
  Result res;
  res.report = bundle;
  res.report["inputs"] = r.inputs;
  res.ok = star.all();
  return res;
}

Result cmd_gauge(Run& r, const std::string& src, const std::string& scaling_src, const std::string& mu_src,
                 const std::string& nu_src, const std::string& sigma_src) {
  ff::StepFunction psi = r.step(src, "wavelet", "psi");
  ff::ScalingPair p = r.scaling(scaling_src);
  ff::PeriodicStepFunction mu = r.filter_or_one(mu_src, "mu");
  ff::PeriodicStepFunction nu = r.filter_or_one(nu_src, "nu");
  ff::PeriodicStepFunction sigma = sigma_src.empty() ? ff::delta(mu) : r.filter_or_one(sigma_src, "sigma");
  ff::StepFunction out = ff::gauge_wavelet(psi, mu, nu, sigma, p.S, r.g.tol);
  Result res;
  res.report = r.envelope("gauge");
  res.report["psi"] = ff::to_json(out);
  res.report["modulus_unchanged"] = ff::modulus(out).pieces() == ff::modulus(psi).pieces();
  return res;
}

ff::PeriodicStepFunction lowpass_from(Run& r, const std::string& src) {
  json j = r.load(src, "input");
  if (j.is_object() && j.value("kind", "") == "pstep") return ff::pstep_from_json(j);
  ff::ScalingPair p = ff::is_scaling(ff::step_in(j, "phi"), r.g.tol);
  if (!p.all() || !p.m0) throw ff::input_error("input is not a scaling function (S1-S3 fail)");
  return *p.m0;
}

Result cmd_extend_filter(Run& r, const std::string& src, const std::string& mu0, const std::string& mu1) {
  ff::PeriodicStepFunction m0 = lowpass_from(r, src);
  ff::FilterBank bank = ff::complete_bank(m0, r.filter_or_one(mu0, "mu0"), r.filter_or_one(mu1, "mu1"));
  Result res;
  res.report = r.envelope("extend-filter");
  res.report["bundle"] = {{"ff-schema", ff::kSchemaVersion}, {"kind", "filters"}, {"m0", ff::to_json(bank.m0)},
                          {"m1", ff::to_json(bank.m1)}};
  return res;
}

Result cmd_check_fp(Run& r, const std::string& src, const std::string& mu0, const std::string& mu1) {
  json j = r.load(src, "input");
  ff::FilterBank bank;
  if (j.is_object() && j.contains("bundle")) j = j.at("bundle");
  if (j.is_object() && j.contains("m0") && j.contains("m1")) {
    bank.m0 = ff::pstep_from_json(j.at("m0"));
    bank.m1 = ff::pstep_from_json(j.at("m1"));
  } else {
    ff::ScalingPair p = ff::is_scaling(ff::step_in(j, "phi"), r.g.tol);
    if (!p.all() || !p.m0) throw ff::input_error("input is not a scaling function (S1-S3 fail)");
    bank = ff::complete_bank(*p.m0, r.filter_or_one(mu0, "mu0"), r.filter_or_one(mu1, "mu1"));
  }
  ff::Check c = ff::check_FP(bank, r.g.tol);
  Result res;
  res.report = r.envelope("check-fp");
  res.report["FP"] = ff::to_json(c);
  res.report["max_defect"] = c.max_defect;
  res.ok = c.ok;
  return res;
}

// Writes the CSV; the report only names the file.
Result cmd_export_plot(Run& r, const std::string& src, const std::string& key, const std::string& out) {
  json j = r.load(src, "input");
  if (j.is_object() && j.contains("bundle")) j = j.at("bundle");
  if (j.is_object() && !key.empty()) {
    if (!j.contains(key)) throw ff::input_error("no '" + key + "' in the input");
    j = j.at(key);
  } else if (j.is_object() && !j.contains("pieces")) {
    for (const char* k : {"phi", "psi", "m0"})
      if (j.contains(k)) {
        j = j.at(k);
        break;
      }
  }
  std::string csv;
  if (j.is_object() && j.value("kind", "step") == "pstep") {
    csv = plot_rows(ff::pstep_from_json(j).pieces(), ff::Dyadic(0), ff::Dyadic(1));
  } else {
    ff::StepFunction f = ff::step_from_json(j);
    csv = plot_rows(f.pieces(), -ff::Dyadic::pow2(f.window_exp()), ff::Dyadic::pow2(f.window_exp()));
  }
  Result res;
  res.report = r.envelope("export-plot");
  if (out.empty() || out == "-") {
    std::cout << csv;
    res.report = json();
  } else {
    write_file(out, csv);
    res.report["written"] = out;
  }
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frame-forge: exact step-function scaling functions, filter banks and wavelets"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--window-exp", g.window_exp, "frequency window [-2^W, 2^W)")->capture_default_str();
  app.add_option("--tol", g.tol, "value tolerance")->capture_default_str();
  app.add_option("--tq-range", g.tq_range, "report t_q for odd |q| up to this")->capture_default_str();
  app.add_option("--depth", g.depth, "product depth recorded for oracle comparisons")->capture_default_str();
  app.add_option("--seed", g.seed, "seed for randomized corpora")->capture_default_str();
  app.add_option("--format", g.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
  app.add_flag("--timing", g.timing, "add wall time to the report");

  std::string input, scaling_src, set_src, mu0 = "one", mu1 = "one", nu, pair, out, mu, sigma, key;
  bool norm_check = false;
  std::function<Result(Run&)> action;

  auto* c_cat = app.add_subcommand("catalog", "list built-ins, or print one");
  c_cat->add_option("name", input);
  c_cat->callback([&] { action = [&](Run& r) { return cmd_catalog(r, input); }; });

  auto* c_vs = app.add_subcommand("verify-scaling", "check the scaling axioms and maximality");
  c_vs->add_option("input", input, "file, - or catalog name")->required();
  c_vs->callback([&] { action = [&](Run& r) { return cmd_verify_scaling(r, input); }; });

  auto* c_syn = app.add_subcommand("synthesize", "build a wavelet from a scaling function");
  c_syn->add_option("input", scaling_src);
  c_syn->add_option("--scaling", scaling_src);
  c_syn->add_option("--mu0", mu0, "one or a file")->capture_default_str();
  c_syn->add_option("--mu1", mu1, "one or a file")->capture_default_str();
  c_syn->add_option("-o,--output", out);
  c_syn->callback([&] { action = [&](Run& r) { return cmd_synthesize(r, scaling_src, mu0, mu1, out); }; });

  auto* c_vw = app.add_subcommand("verify-wavelet", "Parseval frame test");
  c_vw->alias("verify");
  c_vw->add_option("input", input);
  c_vw->add_option("--wavelet", input);
  c_vw->add_flag("--norm-check", norm_check, "report the norm and orthonormality");
  c_vw->callback([&] { action = [&](Run& r) { return cmd_verify_wavelet(r, input, norm_check); }; });

  auto* c_pr = app.add_subcommand("project", "restrict a scaling function to E + Z");
  c_pr->add_option("input", scaling_src);
  c_pr->add_option("--scaling", scaling_src);
  c_pr->add_option("--set", set_src)->required();
  c_pr->add_option("-o,--output", out);
  c_pr->callback([&] { action = [&](Run& r) { return cmd_project(r, scaling_src, set_src, out); }; });

  auto* c_cp = app.add_subcommand("check-projection", "conditions for a projection to stay a scaling function");
  c_cp->add_option("input", scaling_src);
  c_cp->add_option("--scaling", scaling_src);
  c_cp->add_option("--set", set_src)->required();
  c_cp->callback([&] { action = [&](Run& r) { return cmd_check_projection(r, scaling_src, set_src); }; });

  auto* c_mx = app.add_subcommand("maximalize", "extend a scaling function to a maximal one");
  c_mx->add_option("input", scaling_src);
  c_mx->add_option("--scaling", scaling_src);
  c_mx->add_option("--nu", nu, "unimodular filter file");
  c_mx->add_option("--pair", pair, "re,im,re,im");
  c_mx->add_option("-o,--output", out);
  c_mx->callback([&] { action = [&](Run& r) { return cmd_maximalize(r, scaling_src, nu, pair, out); }; });

  auto* c_g = app.add_subcommand("gauge", "apply a unimodular gauge to a wavelet");
  c_g->add_option("input", input);
  c_g->add_option("--wavelet", input);
  c_g->add_option("--scaling", scaling_src)->required();
  c_g->add_option("--mu", mu, "one or a file")->default_val("one");
  c_g->add_option("--nu", nu, "one or a file")->default_val("one");
  c_g->add_option("--sigma", sigma, "defaults to mu(2x)conj mu(x)");
  c_g->callback([&] { action = [&](Run& r) { return cmd_gauge(r, input, scaling_src, mu, nu, sigma); }; });

  auto* c_ef = app.add_subcommand("extend-filter", "complete a low-pass filter to a two-channel bank");
  c_ef->add_option("input", input, "scaling function or low-pass filter")->required();
  c_ef->add_option("--mu0", mu0, "one or a file")->capture_default_str();
  c_ef->add_option("--mu1", mu1, "one or a file")->capture_default_str();
  c_ef->callback([&] { action = [&](Run& r) { return cmd_extend_filter(r, input, mu0, mu1); }; });

  auto* c_fp = app.add_subcommand("check-fp", "unitarity of the filter matrix");
  c_fp->add_option("input", input, "filter bundle, wavelet bundle or scaling function")->required();
  c_fp->add_option("--mu0", mu0, "one or a file")->capture_default_str();
  c_fp->add_option("--mu1", mu1, "one or a file")->capture_default_str();
  c_fp->callback([&] { action = [&](Run& r) { return cmd_check_fp(r, input, mu0, mu1); }; });

  auto* c_ep = app.add_subcommand("export-plot", "CSV of a step function over its pieces");
  c_ep->add_option("input", input)->required();
  c_ep->add_option("--key", key, "phi, psi, m0, m1, ...");
  c_ep->add_option("-o,--output", out, "CSV file (default stdout)");
  c_ep->callback([&] { action = [&](Run& r) { return cmd_export_plot(r, input, key, out); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Run run;
  run.g = g;
  auto t0 = std::chrono::steady_clock::now();
  Result res;
  try {
    res = action(run);
  } catch (const ff::input_error& e) {
    std::cerr << "frame-forge: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const ff::error& e) {
    std::cerr << "frame-forge: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "frame-forge: invalid input: " << e.what() << "\n";
    return 2;
  }
  if (!res.report.is_null()) {
    if (g.timing) {
      auto dt = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
      res.report["wall_ms"] = dt;
    }
    if (g.format == "csv") {
      std::cout << "key,value\n";
      flatten(res.report, "", std::cout);
    } else {
      std::cout << res.report.dump(2) << "\n";
    }
  }
  return res.ok ? 0 : 1;
}
