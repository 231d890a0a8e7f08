// Command-line front end: exact order computations on the braid group B3,
// its central quotient acting on the boundary circle, and the small solvable
// demonstration groups. All output is deterministic; --seed only drives the
// randomized spot checks of the `circular` subcommand.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ordkit/b3.hpp"
#include "ordkit/circular.hpp"
#include "ordkit/cones.hpp"
#include "ordkit/fuchsian.hpp"
#include "ordkit/group.hpp"
#include "ordkit/io.hpp"
#include "ordkit/lifts.hpp"
#include "ordkit/oracle.hpp"
#include "ordkit/psl2z.hpp"
#include "ordkit/qstar.hpp"
#include "ordkit/realization.hpp"
#include "ordkit/reconstruct.hpp"
#include "ordkit/tararin.hpp"

using namespace ordkit;

namespace {

struct Options {
  std::string group;
  std::string order;
  std::string out;
  std::string format;
  int radius = -1;
  unsigned seed = 0;
  int k = 1;
  int depth = -1;
  std::string element = "al.be";
  std::string x, y;
  std::vector<std::string> require;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("--group", opt.group, "group name (b3, psl2z, z, z2, klein, tararin3, dyadic, zsumK)");
  cmd->add_option("--order", opt.order, "order name (dd, top, natural, reciprocal, eps:<+-...>)");
  cmd->add_option("--radius", opt.radius, "ball radius");
  cmd->add_option("--seed", opt.seed, "seed for randomized spot checks");
  cmd->add_option("--out", opt.out, "write output to this file instead of stdout");
  cmd->add_option("--format", opt.format, "output format (text, json, csv, svg)");
}

void emit(const Options& opt, const std::string& text) {
  std::string payload = text;
  if (payload.empty() || payload.back() != '\n') payload += '\n';
  if (opt.out.empty()) {
    std::cout << payload;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + opt.out);
    f << payload;
  }
}

std::string group_or(const Options& opt, const char* fallback) {
  return opt.group.empty() ? fallback : opt.group;
}

int radius_or(const Options& opt, int fallback) {
  return opt.radius >= 0 ? opt.radius : fallback;
}

SignOracle resolve_order(const std::string& group, const std::string& name) {
  std::string n = name;
  if (n.empty()) {
    if (group == "b3")
      n = "dd";
    else if (group == "dyadic")
      n = "natural";
    else if (group == "klein")
      n = "eps:++";
    else if (group == "tararin3")
      n = "eps:+++";
    else
      n = "top";
  }
  if (n == "dd") return make_dd_oracle();
  if (n == "top") return make_zsum_oracle();
  if (n == "natural") return make_rational_oracle(false);
  if (n == "reciprocal") return make_rational_oracle(true);
  if (n.rfind("eps:", 0) == 0) {
    TararinSpec spec = group == "tararin3" ? chain3_spec() : klein_bottle_spec();
    std::vector<int> eps;
    for (char c : n.substr(4)) {
      if (c == '+')
        eps.push_back(1);
      else if (c == '-')
        eps.push_back(-1);
      else
        throw std::invalid_argument("eps pattern must consist of + and - characters");
    }
    for (const auto& ord : tararin_orders(spec))
      if (ord.eps == eps) return ord.oracle;
    throw std::invalid_argument("eps pattern length must match the level count of " + group);
  }
  throw std::invalid_argument("unknown order: " + n);
}

std::vector<Element> parse_required(const GroupHandle& g, const std::vector<std::string>& words) {
  std::vector<Element> out;
  for (const std::string& w : words) out.push_back(g.parse(w));
  return out;
}

int cmd_compare(const Options& opt) {
  std::string gname = group_or(opt, "b3");
  auto g = make_group_by_name(gname);
  auto order = resolve_order(gname, opt.order);
  int c = order.compare(g, g.parse(opt.x), g.parse(opt.y));
  const char* rel = c > 0 ? " < " : (c < 0 ? " > " : " = ");
  if (opt.format == "json") {
    Json j{{"schema", "ordkit.compare/1"}, {"x", opt.x}, {"y", opt.y}, {"sign", c}};
    emit(opt, j.dump(2));
  } else {
    emit(opt, opt.x + rel + opt.y);
  }
  return 0;
}

int cmd_ball(const Options& opt) {
  std::string gname = group_or(opt, "b3");
  auto g = make_group_by_name(gname);
  auto ball = ball_enumerate(g, radius_or(opt, 3));
  if (opt.format == "json") {
    Json words = Json::array();
    for (const Element& e : ball) words.push_back(g.format(e));
    Json j{{"schema", "ordkit.ball/1"},
           {"group", gname},
           {"radius", radius_or(opt, 3)},
           {"count", ball.size()},
           {"elements", std::move(words)}};
    emit(opt, j.dump(2));
  } else {
    std::string text;
    for (const Element& e : ball) text += g.format(e) + "\n";
    emit(opt, text);
  }
  return 0;
}

int cmd_realize(const Options& opt) {
  std::string gname = group_or(opt, "b3");
  auto g = make_group_by_name(gname);
  auto order = resolve_order(gname, opt.order);
  auto R = build_realization(g, order, ball_enumerate(g, radius_or(opt, 4)));
  if (opt.format == "json")
    emit(opt, realization_json(R, g).dump(2));
  else if (opt.format == "svg")
    emit(opt, realization_svg(R, g));
  else
    emit(opt, realization_csv(R, g));
  return 0;
}

int cmd_cones(const Options& opt) {
  std::string gname = group_or(opt, "b3");
  auto g = make_group_by_name(gname);
  auto res = enumerate_partial_cones(g, radius_or(opt, 3), parse_required(g, opt.require));
  emit(opt, cones_json(res, g).dump(2));
  return 0;
}

int cmd_isolation(const Options& opt) {
  std::string gname = group_or(opt, "b3");
  auto g = make_group_by_name(gname);
  auto order = resolve_order(gname, opt.order);
  auto ev = isolation_evidence(g, order, parse_required(g, opt.require), radius_or(opt, 3));
  emit(opt, isolation_json(ev).dump(2));
  return 0;
}

int cmd_tararin(const Options& opt) {
  std::string gname = group_or(opt, "klein");
  TararinSpec spec;
  if (gname == "klein")
    spec = klein_bottle_spec();
  else if (gname == "tararin3")
    spec = chain3_spec();
  else
    throw std::invalid_argument("tararin expects --group klein or tararin3");
  auto orders = tararin_orders(spec);
  if (opt.format == "text") {
    std::string text;
    for (const auto& ord : orders) {
      for (int e : ord.eps) text += e > 0 ? '+' : '-';
      text += "\n";
    }
    emit(opt, text);
  } else {
    Json rows = Json::array();
    for (const auto& ord : orders) {
      std::string sig;
      for (int e : ord.eps) sig += e > 0 ? '+' : '-';
      rows.push_back(Json{{"eps", sig}, {"label", ord.oracle.label}});
    }
    Json j{{"schema", "ordkit.tararin-orders/1"},
           {"group", gname},
           {"count", orders.size()},
           {"orders", std::move(rows)}};
    emit(opt, j.dump(2));
  }
  return 0;
}

// exhaustive cocycle sweep on a small ball plus seeded random spot checks of
// cyclic invariance, swap antisymmetry and left invariance on a larger one
int cmd_circular(const Options& opt) {
  auto rep = deformed_rep();
  auto lift = k_fold_lift(rep, opt.k);
  auto oracle = ck_oracle(rep, lift);

  auto g = make_psl2z();
  std::vector<PSL2ZElement> small;
  for (const Element& e : ball_enumerate(g, radius_or(opt, 2)))
    small.push_back(std::get<PSL2ZElement>(e));
  auto rep_check = cocycle_check(oracle, small);

  std::vector<PSL2ZElement> pool;
  for (const Element& e : ball_enumerate(g, radius_or(opt, 2) + 2))
    pool.push_back(std::get<PSL2ZElement>(e));
  std::mt19937 rng(opt.seed);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  const int rounds = 200;
  int random_failures = 0;
  for (int i = 0; i < rounds; ++i) {
    const auto& x = pool[pick(rng)];
    const auto& y = pool[pick(rng)];
    const auto& z = pool[pick(rng)];
    const auto& t = pool[pick(rng)];
    int s = oracle.sign(x, y, z);
    if (oracle.sign(y, z, x) != s) ++random_failures;
    if (oracle.sign(x, z, y) != -s) ++random_failures;
    if (oracle.sign(psl2z_mult(t, x), psl2z_mult(t, y), psl2z_mult(t, z)) != s)
      ++random_failures;
  }

  bool ok = rep_check.ok && random_failures == 0;
  Json j{{"schema", "ordkit.circular/1"},
         {"k", opt.k},
         {"ok", ok},
         {"triples_checked", rep_check.triples_checked},
         {"quadruples_checked", rep_check.quadruples_checked},
         {"random_rounds", rounds},
         {"random_failures", random_failures},
         {"seed", opt.seed},
         {"witness", rep_check.witness}};
  emit(opt, j.dump(2));
  return ok ? 0 : 1;
}

int cmd_pingpong(const Options& opt) {
  auto rep = deformed_rep();
  auto pp = build_ping_pong(rep);
  auto cfg = first_generation(rep);
  std::vector<BPoint> sample;
  for (const auto& op : cfg.points) sample.push_back(op.pt);
  auto report = ping_pong_verify(pp, sample);
  emit(opt, pingpong_json(pp, report).dump(2));
  return report.ok ? 0 : 1;
}

int cmd_rot(const Options& opt) {
  auto rep = deformed_rep();
  auto lift = k_fold_lift(rep, opt.k);
  Rat r = rotation_number(rep, lift, psl2z_parse(opt.element));
  if (opt.format == "json") {
    Json j{{"schema", "ordkit.rot/1"}, {"k", opt.k}, {"element", opt.element}, {"rot", r.str()}};
    emit(opt, j.dump(2));
  } else {
    emit(opt, r.str());
  }
  return 0;
}

int cmd_lift(const Options& opt) {
  auto rep = deformed_rep();
  emit(opt, lift_json(k_fold_lift(rep, opt.k)).dump(2));
  return 0;
}

int cmd_reconstruct(const Options& opt) {
  int depth = opt.depth >= 0 ? opt.depth : 1;
  emit(opt, generations_json(reconstruct_by_generations(depth)).dump(2));
  return 0;
}

int cmd_svg_circle(const Options& opt) {
  int depth = opt.depth >= 0 ? opt.depth : 0;
  auto gens = reconstruct_by_generations(depth);
  auto cfg = orbit_config(deformed_rep(), gens.order);
  emit(opt, circle_svg(cfg));
  return 0;
}

} // namespace

int main(int argc, char** argv) {
  Options opt;
  CLI::App app{"exact computations with left orders, circular orders and their lifts"};
  app.require_subcommand(1);
  add_common(&app, opt);

  auto* compare = app.add_subcommand("compare", "compare two elements under an order");
  compare->add_option("x", opt.x, "left element")->required();
  compare->add_option("y", opt.y, "right element")->required();
  add_common(compare, opt);

  auto* ball = app.add_subcommand("ball", "enumerate a ball in the word metric");
  add_common(ball, opt);

  auto* realize = app.add_subcommand("realize", "embed a ball order-preservingly into dyadics");
  add_common(realize, opt);

  auto* cones = app.add_subcommand("cones", "enumerate partial positive cones on a ball");
  cones->add_option("--require", opt.require, "elements forced positive (repeatable)");
  add_common(cones, opt);

  auto* isolation = app.add_subcommand("isolation", "survivor counts after forcing a seed set");
  isolation->add_option("--require", opt.require, "elements forced positive (repeatable)");
  add_common(isolation, opt);

  auto* tararin = app.add_subcommand("tararin", "list every left order of a solvable tower");
  add_common(tararin, opt);

  auto* circular = app.add_subcommand("circular", "check circular-order axioms on a cover");
  circular->add_option("--k", opt.k, "cover degree");
  add_common(circular, opt);

  auto* pingpong = app.add_subcommand("pingpong", "certify the free pair on the boundary");
  add_common(pingpong, opt);

  auto* rot = app.add_subcommand("rot", "exact rotation number on the degree-k cover");
  rot->add_option("--k", opt.k, "cover degree");
  rot->add_option("--element", opt.element, "reduced word in al, be, be2");
  add_common(rot, opt);

  auto* lift = app.add_subcommand("lift", "parameters of the degree-k lift");
  lift->add_option("--k", opt.k, "cover degree");
  add_common(lift, opt);

  auto* reconstruct = app.add_subcommand("reconstruct", "rebuild the orbit order symbolically");
  reconstruct->add_option("--depth", opt.depth, "number of mapping rounds");
  add_common(reconstruct, opt);

  auto* svg = app.add_subcommand("svg-circle", "draw the orbit configuration as svg");
  svg->add_option("--depth", opt.depth, "number of mapping rounds");
  add_common(svg, opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(compare)) return cmd_compare(opt);
    if (app.got_subcommand(ball)) return cmd_ball(opt);
    if (app.got_subcommand(realize)) return cmd_realize(opt);
    if (app.got_subcommand(cones)) return cmd_cones(opt);
    if (app.got_subcommand(isolation)) return cmd_isolation(opt);
    if (app.got_subcommand(tararin)) return cmd_tararin(opt);
    if (app.got_subcommand(circular)) return cmd_circular(opt);
    if (app.got_subcommand(pingpong)) return cmd_pingpong(opt);
    if (app.got_subcommand(rot)) return cmd_rot(opt);
    if (app.got_subcommand(lift)) return cmd_lift(opt);
    if (app.got_subcommand(reconstruct)) return cmd_reconstruct(opt);
    if (app.got_subcommand(svg)) return cmd_svg_circle(opt);
  } catch (const NoLiftError& e) {
    std::cerr << error_json("no-lift", e.what()).dump() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << error_json("domain", e.what()).dump() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << error_json("invalid-argument", e.what()).dump() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << error_json("runtime", e.what()).dump() << "\n";
    return 1;
  }
  return 2;
}
