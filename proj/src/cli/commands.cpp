#include <cstdlib>
#include <functional>
#include <map>

#include "cgw/automorphism.hpp"
#include "cgw/cli.hpp"
#include "cgw/error.hpp"
#include "cgw/spectral.hpp"
#include "cgw/tsys.hpp"
#include "cgw/words.hpp"

namespace cgw::cli {

namespace {

using Json = nlohmann::ordered_json;

class Context {
 public:
  Context(const RunConfig& cfg, Report& report) : cfg(cfg), report(report) {
    std::string dir = cfg.cache_dir;
    if (dir.empty())
      if (const char* env = std::getenv("CGW_CACHE_DIR")) dir = env;
    if (!dir.empty()) cache_.emplace(dir);
  }

  CharacterTable table(const Group& group, const ClassData& classes) {
    if (!cache_) return character_table(group, classes);
    CacheStatus s;
    CharacterTable t = cache_->get(group, classes, s, report.warnings);
    // the weakest status wins when several tables are loaded
    if (status == CacheStatus::disabled || s != CacheStatus::hit) status = s;
    return t;
  }

  const RunConfig& cfg;
  Report& report;
  CacheStatus status = CacheStatus::disabled;

 private:
  std::optional<TableCache> cache_;
};

struct Loaded {
  Group group;
  ClassData classes;
};

Loaded load(const RunConfig& cfg) {
  if (cfg.group.empty()) throw UnsupportedError("--group is required");
  Group g = Group::from_string(cfg.group);
  ClassData cd = conjugacy_classes(g);
  return {std::move(g), std::move(cd)};
}

void fail_if(Report& r, bool failed) {
  if (failed) r.exit = ExitCode::mismatch;
}

Json tuple_json(const std::vector<Elem>& t) { return Json(t); }

Json label_json(const HigmanLabel& label, const ClassData& classes) {
  Json out = Json::array();
  for (auto c : label) out.push_back(classes.classes[c].label);
  return out;
}

Json rational_json(const Rational& r) { return cgw::to_string(r); }

void put_zeta(Json& s, const CharacterTable& table) {
  const auto de = delta_epsilon(table);
  s["zeta2"] = de.zeta2;
  s["delta"] = de.delta;
  s["epsilon"] = de.epsilon;
}

void cmd_info(Context& ctx) {
  const auto [group, classes] = load(ctx.cfg);
  Json& s = ctx.report.summary;
  s["order"] = group.order();
  s["classes"] = classes.count();
  s["min_centralizer"] = min_centralizer_order(classes);
  try {
    const AutAction act = automorphism_action(group);
    s["out_order"] = act.out_order;
    s["automorphisms"] = "available";
  } catch (const UnsupportedError& e) {
    s["out_order"] = nullptr;
    s["automorphisms"] = std::string("unavailable: ") + e.what();
  }
  const CharacterTable table = ctx.table(group, classes);
  put_zeta(s, table);
  s["real_bound"] = real_character_bound(table);
  Table t{"classes", {"index", "label", "size", "element_order", "centralizer", "representative"}, {}};
  for (std::size_t c = 0; c < classes.count(); ++c) {
    const auto& cl = classes.classes[c];
    t.rows.push_back({c, cl.label, cl.size, cl.element_order, cl.centralizer_order, group.format(cl.representative)});
  }
  ctx.report.tables.push_back(std::move(t));
  Table d{"characters", {"index", "degree", "real"}, {}};
  for (std::size_t chi = 0; chi < table.count(); ++chi) d.rows.push_back({chi, table.degrees[chi], bool(table.real[chi])});
  ctx.report.tables.push_back(std::move(d));
}

void cmd_fibers(Context& ctx) {
  const auto [group, classes] = load(ctx.cfg);
  const std::string mode = ctx.cfg.mode.empty() ? "both" : ctx.cfg.mode;
  if (mode != "formula" && mode != "brute" && mode != "both") throw UnsupportedError("fibers mode must be formula, brute or both");
  const Word w = parse_word(ctx.cfg.word);
  const bool commutator = w == parse_word("[x1,x2]");
  const bool squares = w == parse_word("x1^2x2^2");
  if (mode != "brute" && !commutator && !squares)
    throw UnsupportedError("no character formula for " + w.to_string() + "; use --mode brute");

  Json& s = ctx.report.summary;
  s["word"] = w.to_string();
  s["arity"] = w.arity();
  s["mode"] = mode;

  std::optional<CharacterTable> table;
  std::optional<FiberTable> formula, brute;
  if (mode != "brute" || commutator || squares) table = ctx.table(group, classes);
  if (mode != "brute") formula = commutator ? frobenius_fibers(*table) : squares_word_fibers(*table);
  if (mode != "formula") brute = brute_force_fibers(w, group, classes);
  const FiberTable& f = formula ? *formula : *brute;

  bool match = true;
  if (formula && brute) match = formula->counts == brute->counts;
  std::vector<DeviationRow> dev;
  if (commutator && table) dev = deviation_report(f, *table);

  Table t{"fibers", {"index", "label", "size", "N", "N_brute", "delta", "delta_float", "E", "within"}, {}};
  for (std::size_t c = 0; c < f.class_count(); ++c) {
    const Rational d = f.normalized(c) - 1;
    std::vector<Json> row{c, classes.classes[c].label, f.class_sizes[c], f.counts[c]};
    row.push_back(brute ? Json(brute->counts[c]) : Json(nullptr));
    row.push_back(rational_json(d));
    row.push_back(to_double(d));
    row.push_back(dev.empty() ? Json(nullptr) : Json(dev[c].bound));
    row.push_back(dev.empty() ? Json(nullptr) : Json(dev[c].within));
    t.rows.push_back(std::move(row));
  }
  ctx.report.tables.push_back(std::move(t));

  s["total"] = f.total;
  s["conservation"] = true;  // verified when the fiber table is built
  s["match"] = match;
  const Rational l1 = l1_to_uniform_exact(f);
  s["l1"] = rational_json(l1);
  s["l1_float"] = to_double(l1);
  bool holds = true;
  if (table) {
    put_zeta(s, *table);
    if (commutator || squares) {
      const L1BoundCheck b = commutator ? commutator_l1_check(*table) : squares_l1_check(*table);
      s["l1_bound"] = b.bound;
      s["l1_within_bound"] = holds = b.holds();
    }
  }
  bool within = true;
  for (const auto& r : dev) within = within && r.within;
  fail_if(ctx.report, !match || !holds || !within);
}

void cmd_prop51(Context& ctx) {
  const auto [group, classes] = load(ctx.cfg);
  if (group.family() != Family::psl2) throw UnsupportedError("prop51 needs a PSL2(q) group");
  const CharacterTable table = ctx.table(group, classes);
  const auto rows = psl2_delta_rows(group, classes, frobenius_fibers(table));
  Table t{"deltas", {"kind", "exponent", "class", "label", "closed_form", "from_table", "match"}, {}};
  bool all = true;
  for (const auto& r : rows) {
    t.rows.push_back({to_string(r.kind), r.exponent, r.class_index, classes.classes[r.class_index].label,
                      rational_json(r.closed_form), rational_json(r.from_table), r.match()});
    all = all && r.match();
  }
  ctx.report.tables.push_back(std::move(t));
  ctx.report.summary["q"] = group.descriptor().parameter;
  ctx.report.summary["rows"] = rows.size();
  ctx.report.summary["all_match"] = all;
  fail_if(ctx.report, !all);
}

void cmd_zeta(Context& ctx) {
  Json& s = ctx.report.summary;
  s["s"] = ctx.cfg.s;
  if (ctx.cfg.group == "A" || ctx.cfg.group == "PSL2") {
    const bool alt = ctx.cfg.group == "A";
    const std::vector<std::uint32_t> params = alt ? std::vector<std::uint32_t>{5, 6, 7, 8, 9}
                                                  : std::vector<std::uint32_t>{5, 7, 8, 9, 11, 13};
    const auto rep = zeta_trend_report(alt ? Family::alternating : Family::psl2, params, ctx.cfg.s,
                                       [&](const Group& g) { return ctx.table(g, conjugacy_classes(g)); });
    Table t{"trend", {"parameter", "order", "zeta_minus_one", "scaled"}, {}};
    for (const auto& r : rep.rows) t.rows.push_back({r.parameter, r.group_order, r.zeta_minus_one, r.scaled});
    ctx.report.tables.push_back(std::move(t));
    s["family"] = ctx.cfg.group;
    s["constant"] = rep.constant;
    s["asserted"] = rep.asserted;
    s["bounded"] = rep.bounded;
    s["decreasing"] = rep.decreasing;
    fail_if(ctx.report, !rep.decreasing || (rep.asserted && !rep.bounded));
    return;
  }
  const auto [group, classes] = load(ctx.cfg);
  const CharacterTable table = ctx.table(group, classes);
  s["zeta_s"] = witten_zeta(table, ctx.cfg.s);
  put_zeta(s, table);
  s["real_bound"] = real_character_bound(table);
  s["zeta_excess"] = rational_json(zeta_excess_exact(table));
  s["real_excess"] = rational_json(real_excess_exact(table));
}

GeneratingTupleSet tuples_for(const Loaded& l, const RunConfig& cfg) {
  return generating_tuples(l.group, l.classes, cfg.k);
}

void component_rows(Table& t, const Loaded& l, const GeneratingTupleSet& v, const ComponentStructure& cs,
                    const AutClassOrbits* orbits) {
  for (std::size_t c = 0; c < cs.count(); ++c) {
    const auto rep = v.tuple(cs.components[c].representative);
    std::vector<Json> row{c, cs.components[c].size, tuple_json(rep)};
    if (v.k() == 2) {
      row.push_back(l.classes.classes[l.classes.class_of[l.group.commutator(rep[0], rep[1])]].label);
      row.push_back(orbits ? label_json(higman_invariant(l.group, rep, l.classes, *orbits), l.classes) : Json(nullptr));
    } else {
      row.push_back(nullptr);
      row.push_back(nullptr);
    }
    t.rows.push_back(std::move(row));
  }
}

void cmd_tsystems(Context& ctx) {
  const Loaded l = load(ctx.cfg);
  const AutAction act = automorphism_action(l.group);
  const auto v = tuples_for(l, ctx.cfg);
  const auto ts = t_systems(l.group, v, act);
  const auto chain = component_chain(l.group, v, act);
  Json& s = ctx.report.summary;
  s["k"] = ctx.cfg.k;
  s["tuples"] = v.size();
  s["t_systems"] = ts.count();
  s["extended_components"] = chain.extended;
  s["plain_components"] = chain.plain;
  s["chain_holds"] = chain.verdict();
  bool ok = chain.verdict();
  const AutClassOrbits orbits = aut_class_orbits(l.group, l.classes, act);
  if (ctx.cfg.k == 2) {
    const auto census = t2_invariant_census(l.group, v, l.classes, act);
    const bool constant = higman_constant_on_components(l.group, v, l.classes, orbits, ts);
    s["census"] = census.size();
    s["census_within"] = census.size() <= ts.count();
    s["labels_constant"] = constant;
    ok = ok && constant && census.size() <= ts.count();
  }
  Table t{"t_systems", {"index", "size", "representative", "commutator_class", "label"}, {}};
  component_rows(t, l, v, ts, &orbits);
  ctx.report.tables.push_back(std::move(t));
  fail_if(ctx.report, !ok);
}

void cmd_components(Context& ctx) {
  const Loaded l = load(ctx.cfg);
  const std::string mode = ctx.cfg.mode.empty() ? "plain" : ctx.cfg.mode;
  if (mode != "plain" && mode != "extended") throw UnsupportedError("components mode must be plain or extended");
  const auto v = tuples_for(l, ctx.cfg);
  const auto plain = graph_components(l.group, v, MoveSet(ctx.cfg.k, false));
  const auto extended = graph_components(l.group, v, MoveSet(ctx.cfg.k, true));
  const auto& cs = mode == "plain" ? plain : extended;
  std::optional<AutClassOrbits> orbits;
  try {
    orbits = aut_class_orbits(l.group, l.classes, automorphism_action(l.group));
  } catch (const UnsupportedError&) {
  }
  Json& s = ctx.report.summary;
  s["k"] = ctx.cfg.k;
  s["mode"] = mode;
  s["tuples"] = v.size();
  s["components"] = cs.count();
  s["plain_components"] = plain.count();
  s["extended_components"] = extended.count();
  const bool chain = extended.count() <= plain.count() && plain.count() <= 2 * extended.count();
  s["chain_holds"] = chain;
  bool ok = chain;
  if (ctx.cfg.k == 2) {
    const auto inv = pra_component_invariant_check(l.group, v, l.classes);
    s["commutator_class_constant"] = inv.verdict();
    ok = ok && inv.verdict();
  }
  Table t{"components", {"index", "size", "representative", "commutator_class", "label"}, {}};
  component_rows(t, l, v, cs, orbits ? &*orbits : nullptr);
  ctx.report.tables.push_back(std::move(t));
  fail_if(ctx.report, !ok);
}

void cmd_walk(Context& ctx) {
  const Loaded l = load(ctx.cfg);
  WalkParams p;
  p.k = ctx.cfg.k;
  p.steps = ctx.cfg.steps;
  p.burn_in = ctx.cfg.burn_in;
  p.samples = ctx.cfg.samples;
  p.seed = ctx.cfg.seed;
  const WalkReport w = pra_walk(l.group, p);
  Json& s = ctx.report.summary;
  s["k"] = p.k;
  s["steps"] = p.steps;
  s["burn_in"] = p.burn_in;
  s["samples"] = p.samples;
  s["start"] = tuple_json(w.start);
  s["l1_to_uniform"] = w.l1_to_uniform;
  Table t{"samples", {"index", "element"}, {}};
  for (std::size_t i = 0; i < w.samples.size(); ++i) t.rows.push_back({i, w.samples[i]});
  ctx.report.tables.push_back(std::move(t));
}

void cmd_census(Context& ctx) {
  const Loaded l = load(ctx.cfg);
  if (ctx.cfg.k != 2) throw UnsupportedError("the census is defined for pairs (k = 2)");
  const AutAction act = automorphism_action(l.group);
  const auto v = generating_tuples(l.group, l.classes, 2);
  const auto census = t2_invariant_census(l.group, v, l.classes, act);
  const auto ts = t_systems(l.group, v, act);
  Json& s = ctx.report.summary;
  s["census"] = census.size();
  s["t_systems"] = ts.count();
  s["min_centralizer"] = census.min_centralizer;
  s["out_order"] = census.out_order;
  s["centralizer_bound"] = census.bound;
  s["census_within"] = census.size() <= ts.count();
  Table t{"labels", {"index", "classes", "labels"}, {}};
  for (std::size_t i = 0; i < census.labels.size(); ++i)
    t.rows.push_back({i, Json(census.labels[i]), label_json(census.labels[i], l.classes)});
  ctx.report.tables.push_back(std::move(t));
  fail_if(ctx.report, census.size() > ts.count());
}

void cmd_bound_check(Context& ctx) {
  const auto [group, classes] = load(ctx.cfg);
  const CharacterTable table = ctx.table(group, classes);
  Json& s = ctx.report.summary;
  put_zeta(s, table);
  const auto comm = frobenius_fibers(table);
  const auto cb = commutator_l1_check(table);
  const auto sb = squares_l1_check(table);
  s["commutator_l1"] = rational_json(cb.l1);
  s["commutator_bound"] = cb.bound;
  s["commutator_holds"] = cb.holds();
  s["squares_l1"] = rational_json(sb.l1);
  s["squares_bound"] = sb.bound;
  s["squares_holds"] = sb.holds();
  bool ok = cb.holds() && sb.holds();

  const double eps = ctx.cfg.epsilon ? *ctx.cfg.epsilon : delta_epsilon(table).epsilon;
  const auto wit = equidistribution_witness(comm, eps);
  s["witness_epsilon"] = eps;
  s["witness_size"] = wit.size;
  s["witness_holds"] = wit.verdict();
  const auto count = commutator_count_check(comm, delta_epsilon(table).delta);
  s["commutators"] = count.count;
  s["commutator_count_bound"] = count.bound;
  s["commutator_count_holds"] = count.verdict;
  s["commutator_count_vacuous"] = count.vacuous;
  ok = ok && count.verdict;

  Table t{"deviation", {"index", "label", "delta", "delta_float", "E", "within"}, {}};
  const auto dev = deviation_report(comm, table);
  for (std::size_t c = 0; c < dev.size(); ++c) {
    t.rows.push_back({c, classes.classes[c].label, rational_json(dev[c].delta), to_double(dev[c].delta), dev[c].bound,
                      dev[c].within});
    ok = ok && dev[c].within;
  }
  ctx.report.tables.push_back(std::move(t));

  if (group.family() == Family::symmetric && group.descriptor().parameter >= 5 && group.descriptor().parameter <= 8) {
    const auto sn = sn_character_bound_check(group, classes, table);
    Table b{"symmetric_bound", {"class", "label", "fixed_points", "skipped", "delta", "worst_ratio", "violations"}, {}};
    for (const auto& r : sn.rows)
      b.rows.push_back({r.class_index, classes.classes[r.class_index].label, r.fixed_points, r.skipped, r.delta,
                        r.worst_ratio, r.violations});
    ctx.report.tables.push_back(std::move(b));
    s["symmetric_bound_violations"] = sn.violations;
    ok = ok && sn.violations == 0;
  }
  fail_if(ctx.report, !ok);
}

const std::map<std::string, std::function<void(Context&)>>& commands() {
  static const std::map<std::string, std::function<void(Context&)>> table{
      {"info", cmd_info},         {"fibers", cmd_fibers},   {"prop51", cmd_prop51},
      {"zeta", cmd_zeta},         {"tsystems", cmd_tsystems}, {"components", cmd_components},
      {"walk", cmd_walk},         {"census", cmd_census},   {"bound-check", cmd_bound_check}};
  return table;
}

}  // namespace

Report build_report(const RunConfig& config) {
  const auto it = commands().find(config.command);
  if (it == commands().end()) throw UnsupportedError("unknown command '" + config.command + "'");
  if (config.format != "json" && config.format != "csv" && config.format != "text")
    throw UnsupportedError("unknown output format '" + config.format + "'");
  Report report;
  Context ctx(config, report);
  it->second(ctx);
  Json h = Json::object();
  h["tool"] = "cgw";
  h["version"] = kVersion;
  h["command"] = config.command;
  h["group"] = config.group;
  h["convention"] = kConvention;
  h["seed"] = config.seed;
  h["cache"] = to_string(ctx.status);
  h["config"] = config.canonical();
  report.header = std::move(h);
  return report;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    const Report r = build_report(config);
    for (const auto& w : r.warnings) err << "warning: " << w << '\n';
    render(r, config.format, out);
    return static_cast<int>(r.exit);
  } catch (const CapExceededError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::cap_exceeded);
  } catch (const VerificationError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::mismatch);
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::unsupported);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::unsupported);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::unsupported);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return static_cast<int>(ExitCode::failure);
  }
}

}  // namespace cgw::cli
