#include "commands.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "setlab/classifiers.hpp"
#include "setlab/family_lab.hpp"
#include "setlab/filter_conditions.hpp"
#include "setlab/generators.hpp"
#include "setlab/partitioner.hpp"
#include "setlab/set_io.hpp"
#include "setlab/shiftpunch.hpp"
#include "setlab/spec_json.hpp"
#include "setlab/symbolic.hpp"

namespace setlab::cli {

namespace {

using Json = nlohmann::ordered_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct MissingFile : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Text lines and the JSON mirror are built side by side; --json picks which one is printed.
struct Report {
  std::vector<std::string> lines;
  Json json = Json::object();

  void line(const std::string& s) { lines.push_back(s); }
};

std::string join(const std::vector<std::size_t>& v, const char* sep = ",") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string braces(const std::vector<std::size_t>& v) { return "{" + join(v) + "}"; }

std::string interval_str(const Interval& iv) {
  return "[" + std::to_string(iv.start) + "," + std::to_string(iv.start + iv.length) + ")";
}

std::string opt_str(const std::optional<std::size_t>& v) { return v ? std::to_string(*v) : "none"; }

Json opt_json(const std::optional<std::size_t>& v) { return v ? Json(*v) : Json(nullptr); }

void require_file(const std::string& path) {
  if (!std::filesystem::exists(path) || std::filesystem::is_directory(path)) throw MissingFile("no such file: " + path);
}

WindowSet load_set(const std::string& path) {
  require_file(path);
  return read_set_file(path);
}

GeneratorSpec load_spec(const std::string& path) {
  require_file(path);
  return read_spec_file(path);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path);
  out << text;
  if (!out) throw Error("write failed for " + path);
}

Json verdict_json(const WindowVerdict& v) {
  Json j;
  j["status"] = to_string(v.status);
  if (v.interval) j["interval"] = {v.interval->start, v.interval->start + v.interval->length};
  if (!v.elements.empty()) j["F"] = v.elements;
  return j;
}

std::string verdict_text(const WindowVerdict& v, const char* interval_label, bool with_f = false) {
  std::string s = to_string(v.status);
  if (with_f && !v.holds()) s += " F=" + braces(v.elements);
  if (v.interval) s += std::string(" ") + interval_label + "=" + interval_str(*v.interval);
  return s;
}

Json profile_json(const GapProfile& p) {
  return {{"covering_gap", opt_json(p.covering_gap)},
          {"longest_run", p.longest_run},
          {"head", opt_json(p.head)},
          {"tail_slack", opt_json(p.tail_slack)}};
}

std::string profile_text(const GapProfile& p) {
  return "covering_gap=" + opt_str(p.covering_gap) + " longest_run=" + std::to_string(p.longest_run) +
         " head=" + opt_str(p.head) + " tail_slack=" + opt_str(p.tail_slack);
}

void describe_set(Report& r, const std::string& key, const WindowSet& a) {
  r.line(key + " H=" + std::to_string(a.coded_horizon()) + " E=" + std::to_string(a.effective_horizon()) +
         " count=" + std::to_string(a.count()));
  r.json[key] = {{"coded_horizon", a.coded_horizon()}, {"effective_horizon", a.effective_horizon()}, {"count", a.count()}};
}

Polynomial parse_poly(const std::string& text) {
  Polynomial p;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      p.coefficients.push_back(std::stoll(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("polynomial coefficients must be integers, got '" + text + "'");
    }
  }
  if (p.coefficients.empty()) throw UsageError("empty polynomial");
  return p;
}

std::vector<std::size_t> sample_steps(std::size_t steps, std::size_t count) {
  std::vector<std::size_t> out;
  if (count == 0 || steps == 0) return out;
  for (std::size_t i = 1; i <= count; ++i) out.push_back(std::max<std::size_t>(1, i * steps / count));
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

// ---- generate ---------------------------------------------------------------

struct GenerateOpts {
  std::string spec, out;
};

Report do_generate(const GenerateOpts& o) {
  auto spec = load_spec(o.spec);
  WindowSet a = generate(spec);
  Report r;
  r.json["command"] = "generate";
  r.json["variant"] = variant_name(spec.variant);
  r.line("variant " + variant_name(spec.variant));
  describe_set(r, "set", a);
  if (o.out.empty()) {
    std::string text = to_text(a);
    text.pop_back();
    r.line(text);
    r.json["text"] = to_text(a);
  } else {
    write_set_file(o.out, a);
    r.line("wrote " + o.out);
    r.json["out"] = o.out;
  }
  return r;
}

// ---- classify ---------------------------------------------------------------

struct ClassifyOpts {
  std::string set;
  std::optional<std::size_t> syndetic, thick, dyadic, ip;
  std::size_t first = 0, ip_bound = 1024;
  std::vector<std::size_t> piecewise, thickly;
};

Report do_classify(const ClassifyOpts& o) {
  if (!o.piecewise.empty() && o.piecewise.size() != 2) throw UsageError("--piecewise takes N L");
  if (!o.thickly.empty() && o.thickly.size() != 2) throw UsageError("--thickly-syndetic takes k N");
  WindowSet a = load_set(o.set);
  Report r;
  r.json["command"] = "classify";
  describe_set(r, "set", a);
  auto p = gap_profile(a, o.first);
  r.line("profile first=" + std::to_string(o.first) + " " + profile_text(p));
  r.json["profile"] = profile_json(p);
  if (o.syndetic) {
    auto v = syndetic_on_window(a, *o.syndetic, o.first);
    r.line("syndetic N=" + std::to_string(*o.syndetic) + " " + verdict_text(v, "empty"));
    r.json["syndetic"] = verdict_json(v);
  }
  if (o.thick) {
    auto v = thick_on_window(a, *o.thick);
    r.line("thick L=" + std::to_string(*o.thick) + " " + verdict_text(v, "run"));
    r.json["thick"] = verdict_json(v);
  }
  if (!o.piecewise.empty()) {
    auto v = piecewise_syndetic_on_window(a, o.piecewise[0], o.piecewise[1]);
    r.line("piecewise_syndetic N=" + std::to_string(o.piecewise[0]) + " L=" + std::to_string(o.piecewise[1]) + " " +
           verdict_text(v, "run"));
    r.json["piecewise_syndetic"] = verdict_json(v);
  }
  if (!o.thickly.empty()) {
    auto v = thickly_syndetic_on_window(a, o.thickly[0], o.thickly[1]);
    r.line("thickly_syndetic k=" + std::to_string(o.thickly[0]) + " N=" + std::to_string(o.thickly[1]) + " " +
           verdict_text(v, "empty"));
    r.json["thickly_syndetic"] = verdict_json(v);
  }
  if (o.dyadic) {
    auto v = dyadic_cover_check(a, *o.dyadic);
    r.line("dyadic_cover k=" + std::to_string(*o.dyadic) + " " + verdict_text(v, "missed"));
    r.json["dyadic_cover"] = verdict_json(v);
  }
  if (o.ip) {
    auto s = ip_n_member(a, *o.ip, o.ip_bound);
    r.line("ip n=" + std::to_string(*o.ip) + " bound=" + std::to_string(o.ip_bound) + " " + to_string(s.status) +
           (s.found() ? " x=" + braces(s.witness) : ""));
    r.json["ip"] = {{"status", to_string(s.status)}, {"witness", s.witness}};
  }
  return r;
}

// ---- cssd -------------------------------------------------------------------

struct CssdOpts {
  std::string set, within;
  std::size_t f_max = 2, f_bound = 64, gap = 64;
  std::optional<std::size_t> multiple;
};

Report do_cssd(const CssdOpts& o) {
  if (!o.within.empty() && o.multiple) throw UsageError("--within and --multiple cannot be combined");
  CssdBudget budget{o.f_max, o.f_bound, o.gap};
  WindowSet b = load_set(o.set);
  std::optional<WindowSet> a;
  if (!o.within.empty()) a = load_set(o.within);
  Report r;
  r.json["command"] = "cssd";
  describe_set(r, "set", b);
  std::string check = a ? "ds" : (o.multiple ? "cssd_upgraded" : "cssd");
  WindowVerdict v = a ? ds_check(*a, b, budget) : o.multiple ? cssd_upgraded_check(b, budget, *o.multiple)
                                                             : cssd_check(b, budget);
  std::string head = check + " budget=(" + std::to_string(o.f_max) + "," + std::to_string(o.f_bound) + "," +
                     std::to_string(o.gap) + ")";
  if (o.multiple) head += " m=" + std::to_string(*o.multiple);
  r.line(head + " " + verdict_text(v, "empty", true));
  r.json["check"] = check;
  r.json["budget"] = {{"f_max", o.f_max}, {"f_bound", o.f_bound}, {"gap_bound", o.gap}};
  if (o.multiple) r.json["m"] = *o.multiple;
  r.json["verdict"] = verdict_json(v);
  if (!v.holds()) r.json["verdict"]["F"] = v.elements;
  return r;
}

// ---- search -----------------------------------------------------------------

struct SearchOpts {
  std::string set, kind;
  std::size_t f_max = 4, length = 64, f_bound = 64, n = 2, bound = 1024, gap = 1, run = 64;
  std::vector<std::string> polys;
};

Report do_search(const SearchOpts& o) {
  std::vector<Polynomial> polys;
  if (o.kind == "brauer") {
    if (o.polys.empty()) throw UsageError("brauer search needs at least one --poly");
    for (const auto& p : o.polys) polys.push_back(parse_poly(p));
  }
  WindowSet a = load_set(o.set);
  Report r;
  r.json["command"] = "search";
  r.json["kind"] = o.kind;
  describe_set(r, "set", a);
  SearchResult s;
  std::string head = o.kind;
  std::string label = "F";
  if (o.kind == "dthick" || o.kind == "dct") {
    s = o.kind == "dthick" ? dthick_search(a, o.f_max, o.length, o.f_bound) : dct_search(a, o.f_max, o.length, o.f_bound);
    head += " f_max=" + std::to_string(o.f_max) + " L=" + std::to_string(o.length) + " f_bound=" + std::to_string(o.f_bound);
  } else if (o.kind == "ip") {
    s = ip_n_member(a, o.n, o.bound);
    head += " n=" + std::to_string(o.n) + " bound=" + std::to_string(o.bound);
    label = "x";
  } else if (o.kind == "ps-shift") {
    s = ps_shift_witness(a, o.gap, o.run);
    auto relaxed = ps_shift_parameters(o.gap, o.run);
    head += " N=" + std::to_string(o.gap) + " L=" + std::to_string(o.run) + " relaxed=(" +
            std::to_string(relaxed.gap) + "," + std::to_string(relaxed.run) + ")";
    label = "n";
  } else {
    s = brauer_search(a, polys);
    head += " polys=" + std::to_string(polys.size());
    label = "xy";
  }
  r.line(head + " " + to_string(s.status) + (s.found() ? " " + label + "=" + braces(s.witness) : ""));
  r.json["status"] = to_string(s.status);
  r.json["witness"] = s.witness;
  return r;
}

// ---- punch ------------------------------------------------------------------

struct PunchOpts {
  std::string set, trace, derived;
  std::size_t steps = 0, verify = 0, levels = 0, depth = 0;
  bool append_zero = false;
};

Report do_punch(const PunchOpts& o) {
  WindowSet a = load_set(o.set);
  if (o.append_zero) a.insert(0);
  Report r;
  r.json["command"] = "punch run";
  describe_set(r, "set", a);
  auto t = run(a, o.steps);
  r.line("steps " + std::to_string(o.steps) + " exactness_bound=" + std::to_string(t.exactness_bound));
  r.json["steps"] = o.steps;
  r.json["exactness_bound"] = t.exactness_bound;
  bool sub = is_subset(t.derived_b, a.restricted(t.derived_b.effective_horizon()));
  r.line("derived_b count=" + std::to_string(t.derived_b.count()) + " subset_of_input=" + (sub ? "true" : "false"));
  r.json["derived_b"] = {{"count", t.derived_b.count()}, {"subset_of_input", sub}};
  if (o.levels) {
    Json levels = Json::array();
    std::size_t top = std::min<std::size_t>(o.levels, o.steps ? std::bit_width(o.steps) - 1 : 0);
    for (std::size_t l = 0; l <= top; ++l) {
      auto ls = l_set(t, l);
      auto p = gap_profile(ls, 1);
      r.line("level " + std::to_string(l) + " count=" + std::to_string(ls.count()) + " covering_gap=" + opt_str(p.covering_gap));
      levels.push_back({{"level", l}, {"count", ls.count()}, {"covering_gap", opt_json(p.covering_gap)}});
    }
    r.json["levels"] = levels;
  }
  if (o.depth) {
    auto lv = uniform_recurrence_levels(t.derived_b, {o.depth});
    r.line("returns depth=" + std::to_string(o.depth) + " count=" + std::to_string(lv[0].returns.count()) +
           " covering_gap=" + opt_str(lv[0].profile.covering_gap));
    r.json["returns"] = {{"depth", o.depth}, {"count", lv[0].returns.count()}, {"covering_gap", opt_json(lv[0].profile.covering_gap)}};
  }
  if (o.verify) {
    auto rep = verify_trace(t, sample_steps(o.steps, o.verify));
    r.line("verify checks=" + std::to_string(rep.checks) + " failures=" + std::to_string(rep.failures.size()));
    Json fails = Json::array();
    for (const auto& f : rep.failures) {
      r.line("  " + f.assertion + " at " + braces(f.indices) + ": " + f.detail);
      fails.push_back({{"assertion", f.assertion}, {"indices", f.indices}, {"detail", f.detail}});
    }
    r.json["verify"] = {{"checks", rep.checks}, {"failures", fails}};
  }
  if (!o.trace.empty()) {
    write_text(o.trace, trace_csv(t));
    r.line("wrote " + o.trace);
    r.json["trace"] = o.trace;
  }
  if (!o.derived.empty()) {
    write_set_file(o.derived, t.derived_b);
    r.line("wrote " + o.derived);
    r.json["derived"] = o.derived;
  }
  return r;
}

// ---- partition --------------------------------------------------------------

struct PartitionOpts {
  std::string mode, set, out1, out2, alpha;
  std::optional<std::size_t> l_max, horizon;
};

Report do_partition(const PartitionOpts& o) {
  if (o.mode == "rotation") {
    if (!o.horizon) throw UsageError("rotation mode needs --horizon");
    if (!o.set.empty()) throw UsageError("rotation mode takes no --set");
  } else {
    if (o.set.empty()) throw UsageError(o.mode + " mode needs --set");
    if (o.mode == "thick" && !o.l_max) throw UsageError("thick mode needs --l-max");
  }
  std::optional<Rational> alpha;
  if (!o.alpha.empty()) {
    try {
      alpha = Rational::parse(o.alpha);
    } catch (const ParseError&) {
      throw UsageError("--alpha must be p/q");
    }
  }
  Report r;
  r.json["command"] = "partition";
  r.json["mode"] = o.mode;
  SetPair p;
  if (o.mode == "rotation") {
    std::size_t h = *o.horizon;
    Rational a = alpha ? *alpha : frac(golden_convergent(static_cast<std::int64_t>(h * h)));
    r.line("alpha " + a.str());
    r.json["alpha"] = a.str();
    p = rotation_partition_pair(a, h);
  } else {
    WindowSet a = load_set(o.set);
    describe_set(r, "set", a);
    p = o.mode == "syndetic" ? split_syndetic(a) : split_thick_greedy(a, *o.l_max);
  }
  for (int i = 0; i < 2; ++i) {
    const WindowSet& half = i == 0 ? p.first : p.second;
    std::string key = i == 0 ? "first" : "second";
    auto prof = gap_profile(half, o.mode == "rotation" ? 1 : 0);
    r.line(key + " count=" + std::to_string(half.count()) + " covering_gap=" + opt_str(prof.covering_gap) +
           " longest_run=" + std::to_string(prof.longest_run));
    r.json[key] = {{"count", half.count()}, {"covering_gap", opt_json(prof.covering_gap)}, {"longest_run", prof.longest_run}};
  }
  write_set_file(o.out1, p.first);
  write_set_file(o.out2, p.second);
  r.line("wrote " + o.out1 + " " + o.out2);
  r.json["out"] = {o.out1, o.out2};
  return r;
}

// ---- family-lab -------------------------------------------------------------

struct LabOpts {
  unsigned n = 4;
  std::string check = "all";
  bool sampled = false, transcript = false;
  std::size_t samples = 40, quads = 200000;
  std::uint64_t seed = 20240611;
};

Report do_family_lab(const LabOpts& o) {
  if (o.n == 0 || o.n > 6) throw UsageError("--n must be between 1 and 6");
  bool sampled = o.sampled || o.n > 4;
  auto report = sampled ? run_sampled_lab(o.n, o.samples, o.quads, o.seed) : run_exhaustive_lab(o.n);
  std::vector<std::string> wanted;
  if (o.check != "all") {
    std::stringstream ss(o.check);
    std::string name;
    while (std::getline(ss, name, ',')) {
      if (!report.find(name)) throw UsageError("unknown identity '" + name + "'");
      wanted.push_back(name);
    }
  }
  Report r;
  r.json["command"] = "family-lab";
  r.json["ground_size"] = report.ground_size;
  r.json["mode"] = report.mode;
  r.json["families"] = report.families;
  if (sampled) r.json["seed"] = report.seed;
  if (o.transcript) {
    std::string t = lab_transcript(report);
    t.pop_back();
    r.line(t);
  } else {
    r.line("ground_size " + std::to_string(report.ground_size) + " mode " + report.mode + " families " +
           std::to_string(report.families));
  }
  Json ids = Json::array();
  std::size_t failed = 0;
  for (const auto& t : report.identities) {
    if (!wanted.empty() && std::find(wanted.begin(), wanted.end(), t.name) == wanted.end()) continue;
    failed += !t.holds();
    if (!o.transcript) {
      std::string row = t.name;
      row.resize(std::max<std::size_t>(row.size() + 1, 40), ' ');
      row += (t.holds() ? "PASS" : "FAIL");
      row += " instances=" + std::to_string(t.instances) + " violations=" + std::to_string(t.violations);
      r.line(row);
      if (!t.holds()) r.line("    first " + t.first_violation);
    }
    ids.push_back({{"name", t.name},
                   {"statement", t.statement},
                   {"instances", t.instances},
                   {"violations", t.violations},
                   {"first_violation", t.first_violation}});
  }
  if (!o.transcript) r.line("identities_failing " + std::to_string(failed));
  r.json["identities"] = ids;
  r.json["identities_failing"] = failed;
  return r;
}

// ---- battery ----------------------------------------------------------------

struct BatteryOpts {
  std::size_t horizon = std::size_t{1} << 14;
  std::string out_dir, against;
};

Report do_battery(const BatteryOpts& o) {
  if (!o.out_dir.empty() && !std::filesystem::is_directory(o.out_dir)) throw MissingFile("no such directory: " + o.out_dir);
  std::optional<WindowSet> target;
  if (!o.against.empty()) target = load_set(o.against);
  Report r;
  r.json["command"] = "battery";
  r.json["horizon"] = o.horizon;
  Json members = Json::array();
  std::size_t missed = 0, idx = 0;
  for (const auto& m : rotation_battery(o.horizon)) {
    WindowSet s = generate(m.spec);
    auto prof = gap_profile(s, 1);
    std::string row = "member " + m.name + " alpha=" + std::get<RotationReturns>(m.spec.variant).alpha.str() +
                      " count=" + std::to_string(s.count()) + " covering_gap=" + opt_str(prof.covering_gap);
    Json j = {{"name", m.name}, {"count", s.count()}, {"covering_gap", opt_json(prof.covering_gap)}};
    if (target) {
      auto both = set_intersection(*target, s);
      bool meets = !both.empty();
      missed += !meets;
      row += " meets=" + std::string(meets ? "true" : "false");
      if (meets) row += " first=" + std::to_string(both.next_member(0));
      j["meets"] = meets;
    }
    if (!o.out_dir.empty()) {
      char name[32];
      std::snprintf(name, sizeof name, "battery_%02zu.txt", idx);
      auto path = (std::filesystem::path(o.out_dir) / name).string();
      write_set_file(path, s);
      j["file"] = path;
      row += " file=" + path;
    }
    r.line(row);
    members.push_back(j);
    ++idx;
  }
  if (target) r.line("missed " + std::to_string(missed));
  r.json["members"] = members;
  if (target) r.json["missed"] = missed;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite-horizon tools for large sets of integers", "setlab"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "print the report as JSON");

  std::function<Report()> action;

  GenerateOpts gen;
  auto* g = app.add_subcommand("generate", "build a set from a JSON generator spec");
  g->add_option("--spec", gen.spec, "generator spec (JSON)")->required();
  g->add_option("--out", gen.out, "set file to write (stdout if omitted)");
  g->callback([&] { action = [&] { return do_generate(gen); }; });

  ClassifyOpts cls;
  auto* c = app.add_subcommand("classify", "window-scope largeness predicates");
  c->add_option("--set", cls.set, "set file")->required();
  c->add_option("--syndetic", cls.syndetic, "every length-N interval meets the set")->check(CLI::PositiveNumber);
  c->add_option("--from", cls.first, "first index for the gap profile and the syndetic check");
  c->add_option("--thick", cls.thick, "a run of length L exists")->check(CLI::PositiveNumber);
  c->add_option("--piecewise", cls.piecewise, "N L: union of N+1 translates has a run of length L")->expected(2);
  c->add_option("--thickly-syndetic", cls.thickly, "k N: starts of [t,t+k] runs are N-syndetic")->expected(2);
  c->add_option("--dyadic", cls.dyadic, "meets every dyadic interval of size 2^k");
  c->add_option("--ip", cls.ip, "search an IP_n configuration")->check(CLI::PositiveNumber);
  c->add_option("--ip-bound", cls.ip_bound, "largest generator tried by --ip");
  c->callback([&] { action = [&] { return do_classify(cls); }; });

  CssdOpts cs;
  auto* d = app.add_subcommand("cssd", "check translate intersections for syndeticity");
  d->add_option("--set", cs.set, "set file B")->required();
  d->add_option("--f-max", cs.f_max, "largest |F|")->check(CLI::PositiveNumber);
  d->add_option("--f-bound", cs.f_bound, "F is drawn from B below this bound");
  d->add_option("--gap", cs.gap, "required covering gap")->check(CLI::PositiveNumber);
  d->add_option("--multiple", cs.multiple, "also intersect with the positive multiples of m")->check(CLI::PositiveNumber);
  d->add_option("--within", cs.within, "superset A: run the check without intersecting with B");
  d->callback([&] { action = [&] { return do_cssd(cs); }; });

  SearchOpts se;
  auto* s = app.add_subcommand("search", "bounded witness searches");
  s->add_option("--set", se.set, "set file")->required();
  s->add_option("--kind", se.kind, "dthick, dct, ip, ps-shift or brauer")
      ->required()
      ->check(CLI::IsMember({"dthick", "dct", "ip", "ps-shift", "brauer"}));
  s->add_option("--f-max", se.f_max, "largest |F| (dthick, dct)");
  s->add_option("--length", se.length, "required run length (dthick, dct)")->check(CLI::PositiveNumber);
  s->add_option("--f-bound", se.f_bound, "F is drawn below this bound (dthick, dct)");
  s->add_option("--n", se.n, "IP order (ip)")->check(CLI::PositiveNumber);
  s->add_option("--bound", se.bound, "largest generator (ip)");
  s->add_option("--gap", se.gap, "translates N (ps-shift)");
  s->add_option("--run", se.run, "run length L (ps-shift)");
  s->add_option("--poly", se.polys, "comma-separated coefficients of y, y^2, ... (brauer; repeatable)");
  s->callback([&] { action = [&] { return do_search(se); }; });

  PunchOpts pu;
  auto* p = app.add_subcommand("punch", "shift-punch simulation");
  p->require_subcommand(1);
  auto* pr = p->add_subcommand("run", "run the shift-punch system on a set");
  pr->add_option("--set", pu.set, "set file A; must contain 0 unless --append-zero")->required();
  pr->add_flag("--append-zero", pu.append_zero, "add 0 to A before running");
  pr->add_option("--steps", pu.steps, "number of steps")->required();
  pr->add_option("--trace", pu.trace, "CSV trace to write");
  pr->add_option("--derived", pu.derived, "set file for the derived set B");
  pr->add_option("--verify", pu.verify, "verify the trace at this many evenly spaced steps");
  pr->add_option("--levels", pu.levels, "report L(l) for l = 0..levels");
  pr->add_option("--depth", pu.depth, "report the return set of B at this agreement depth");
  pr->callback([&] { action = [&] { return do_punch(pu); }; });

  PartitionOpts pa;
  auto* q = app.add_subcommand("partition", "split a set into two halves");
  q->add_option("--mode", pa.mode, "syndetic, thick or rotation")
      ->required()
      ->check(CLI::IsMember({"syndetic", "thick", "rotation"}));
  q->add_option("--set", pa.set, "set file (syndetic, thick)");
  q->add_option("--l-max", pa.l_max, "run length the input must contain (thick)");
  q->add_option("--alpha", pa.alpha, "rotation number p/q (rotation; golden convergent if omitted)");
  q->add_option("--horizon", pa.horizon, "window size (rotation)");
  q->add_option("--out1", pa.out1, "first half")->required();
  q->add_option("--out2", pa.out2, "second half")->required();
  q->callback([&] { action = [&] { return do_partition(pa); }; });

  LabOpts lab;
  auto* f = app.add_subcommand("family-lab", "check family identities on a finite ground set");
  f->add_option("--n", lab.n, "ground set size");
  f->add_option("--check", lab.check, "'all' or a comma-separated list of identity names");
  f->add_flag("--sampled", lab.sampled, "random families instead of all of them (forced for n > 4)");
  f->add_option("--samples", lab.samples, "random families (sampled mode)");
  f->add_option("--quads", lab.quads, "random quadruples for four-family identities (sampled mode)");
  f->add_option("--seed", lab.seed, "seed (sampled mode)");
  f->add_flag("--transcript", lab.transcript, "print the raw transcript");
  f->callback([&] { action = [&] { return do_family_lab(lab); }; });

  BatteryOpts bat;
  auto* b = app.add_subcommand("battery", "the 20 rotation return sets used as a syndetic test battery");
  b->add_option("--horizon", bat.horizon, "window size")->check(CLI::PositiveNumber);
  b->add_option("--out-dir", bat.out_dir, "write each member as a set file");
  b->add_option("--against", bat.against, "report which members meet this set");
  b->callback([&] { action = [&] { return do_battery(bat); }; });

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    err << app.help();
    return kUsage;
  }

  try {
    Report r = action();
    if (json) {
      out << r.json.dump(2) << "\n";
    } else {
      for (const auto& l : r.lines) out << l << "\n";
    }
    return kOk;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const MissingFile& e) {
    err << "error: " << e.what() << "\n";
    return kMissingFile;
  } catch (const ParseError& e) {
    err << "malformed input: " << e.what() << "\n";
    return kMalformedInput;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kRuntime;
  }
}

}  // namespace setlab::cli
