#include "ordkit/group.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace ordkit {

namespace {

// tuple formats print as "(c1,...,ck)"; accept that shape back on parse
std::string strip_tuple_wrapping(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace((unsigned char)s[b])) ++b;
  while (e > b && std::isspace((unsigned char)s[e - 1])) --e;
  if (e - b >= 2 && s[b] == '(' && s[e - 1] == ')') {
    ++b;
    --e;
  }
  return s.substr(b, e - b);
}

struct KeyVisitor {
  std::string operator()(const B3Element& e) const { return "b3:" + e.key(); }
  std::string operator()(const PSL2ZElement& e) const { return "psl2z:" + e.key(); }
  std::string operator()(const ZSumElement& e) const { return "zsum:" + e.key(); }
  std::string operator()(const TararinElement& e) const {
    std::ostringstream os;
    os << "tara:";
    for (long long v : e.m) os << v << ",";
    return os.str();
  }
  std::string operator()(const Rat& r) const { return "rat:" + r.str(); }
};

}  // namespace

std::string element_key(const Element& e) { return std::visit(KeyVisitor{}, e); }

std::vector<Element> ball_enumerate(const GroupHandle& g, int radius) {
  if (radius < 0) throw std::invalid_argument("ball_enumerate: negative radius");
  const std::vector<GenDef> gens = g.gens_for_radius(radius);
  std::vector<Element> out;
  std::set<std::string> emitted;
  // pending[w] holds candidates first reachable at weight w, in discovery
  // order; an element may appear in several levels, only its earliest
  // emission counts (edge weights >= 1, so all discoveries at weight w happen
  // before level w is emitted).
  std::map<int, std::vector<Element>> pending;
  pending[0].push_back(g.identity);
  for (int w = 0; w <= radius; ++w) {
    auto it = pending.find(w);
    if (it == pending.end()) continue;
    std::vector<Element> level;
    for (const Element& cand : it->second) {
      std::string k = element_key(cand);
      if (emitted.insert(std::move(k)).second) level.push_back(cand);
    }
    pending.erase(it);
    for (const Element& el : level) {
      out.push_back(el);
      for (const GenDef& gen : gens) {
        assert(gen.weight >= 1);
        int nw = w + gen.weight;
        if (nw > radius) continue;
        pending[nw].push_back(g.mult(el, gen.el));
      }
    }
  }
  return out;
}

std::vector<Element> enumerate_n(const GroupHandle& g, size_t n, int max_radius) {
  int r = 2;
  while (true) {
    std::vector<Element> ball = ball_enumerate(g, r);
    if (ball.size() >= n) {
      ball.resize(n);
      return ball;
    }
    if (r >= max_radius)
      throw std::runtime_error("enumerate_n: group too small within max_radius");
    r = std::min(max_radius, r * 2);
  }
}

namespace {

std::function<std::vector<GenDef>(int)> fixed_gens(std::vector<GenDef> gens) {
  return [gens = std::move(gens)](int) { return gens; };
}

bool b3_in_cyclic(const B3Element& x, const B3Element& gen) {
  // x in <gen> iff x equals some power gen^n; powers' tails grow
  // monotonically for the generators we care about, so walk until the tail
  // is longer than x's.
  if (x.is_identity()) return true;
  for (const B3Element& dir : {gen, b3_inverse(gen)}) {
    B3Element p = dir;
    while (p.tail.size() <= x.tail.size() + 2) {
      if (p.key() == x.key()) return true;
      B3Element np = b3_mult(p, dir);
      if (np.tail.size() <= p.tail.size() && np.tail.size() + 2 < x.tail.size()) break;
      p = np;
      if (p.tail.size() > x.tail.size()) break;
    }
    if (p.key() == x.key()) return true;
  }
  return false;
}

}  // namespace

GroupHandle make_b3(const std::vector<std::string>& gen_order) {
  GroupHandle h;
  h.id = "b3";
  h.identity = b3_identity();
  std::vector<GenDef> gens;
  for (const std::string& name : gen_order) gens.push_back({name, Element{b3_parse(name)}, 1});
  h.gens_for_radius = fixed_gens(std::move(gens));
  h.mult = [](const Element& x, const Element& y) {
    return Element{b3_mult(std::get<B3Element>(x), std::get<B3Element>(y))};
  };
  h.inv = [](const Element& x) { return Element{b3_inverse(std::get<B3Element>(x))}; };
  h.format = [](const Element& x) { return std::get<B3Element>(x).str(); };
  // accept both letter words ("Tbab") and printed normal forms ("t^-1.b.a.b")
  h.parse = [](const std::string& s) {
    try {
      return Element{b3_parse(s)};
    } catch (const std::invalid_argument&) {
      return Element{b3_parse_normal_form(s)};
    }
  };
  h.subgroups["sigma2"] = [](const Element& x) {
    return b3_in_cyclic(std::get<B3Element>(x), b3_sigma2());
  };
  h.subgroups["sigma1"] = [](const Element& x) {
    return b3_in_cyclic(std::get<B3Element>(x), b3_sigma1());
  };
  h.subgroups["center"] = [](const Element& x) { return std::get<B3Element>(x).tail.empty(); };
  return h;
}

GroupHandle make_psl2z(const std::vector<std::string>& gen_order) {
  GroupHandle h;
  h.id = "psl2z";
  h.identity = PSL2ZElement{};
  std::vector<GenDef> gens;
  for (const std::string& name : gen_order) gens.push_back({name, Element{psl2z_parse(name)}, 1});
  h.gens_for_radius = fixed_gens(std::move(gens));
  h.mult = [](const Element& x, const Element& y) {
    return Element{psl2z_mult(std::get<PSL2ZElement>(x), std::get<PSL2ZElement>(y))};
  };
  h.inv = [](const Element& x) { return Element{psl2z_inverse(std::get<PSL2ZElement>(x))}; };
  h.format = [](const Element& x) { return std::get<PSL2ZElement>(x).str(); };
  h.parse = [](const std::string& s) { return Element{psl2z_parse(s)}; };
  return h;
}

namespace {

GroupHandle make_zsum_impl(int k, const std::string& id) {
  if (k < 1) throw std::invalid_argument("zsum: need at least one coordinate");
  GroupHandle h;
  h.id = id;
  h.identity = ZSumElement{};
  std::vector<GenDef> gens;
  for (int i = 0; i < k; ++i) {
    gens.push_back({"e" + std::to_string(i + 1), Element{zsum_basis(i, 1)}, 1});
    gens.push_back({"E" + std::to_string(i + 1), Element{zsum_basis(i, -1)}, 1});
  }
  h.gens_for_radius = fixed_gens(std::move(gens));
  h.mult = [](const Element& x, const Element& y) {
    return Element{zsum_add(std::get<ZSumElement>(x), std::get<ZSumElement>(y))};
  };
  h.inv = [](const Element& x) { return Element{zsum_neg(std::get<ZSumElement>(x))}; };
  h.format = [](const Element& x) { return std::get<ZSumElement>(x).str(); };
  h.parse = [k](const std::string& raw) {
    // comma-separated coordinates, e.g. "1,0,-2" or "(1,0,-2)"
    std::string s = strip_tuple_wrapping(raw);
    ZSumElement e;
    std::istringstream is(s);
    std::string tok;
    int idx = 0;
    while (std::getline(is, tok, ',')) {
      if (idx >= k) throw std::invalid_argument("zsum parse: too many coordinates");
      if (!tok.empty()) {
        long long v = std::stoll(tok);
        if (v != 0) {
          if ((int)e.v.size() <= idx) e.v.resize(idx + 1, 0);
          e.v[idx] = v;
        }
      }
      ++idx;
    }
    return Element{e};
  };
  // level subgroup G_m: support confined to the first m coordinates
  for (int m = 0; m <= k; ++m) {
    h.subgroups["level_" + std::to_string(m)] = [m](const Element& x) {
      const auto& e = std::get<ZSumElement>(x);
      return (int)e.v.size() <= m;
    };
  }
  return h;
}

}  // namespace

GroupHandle make_z() { return make_zsum_impl(1, "z"); }
GroupHandle make_z2() { return make_zsum_impl(2, "z2"); }
GroupHandle make_zsum(int k) { return make_zsum_impl(k, "zsum" + std::to_string(k)); }

GroupHandle make_dyadic_group() {
  GroupHandle h;
  h.id = "dyadic";
  h.identity = Rat{};
  // graded alphabet: +-1/2^i enters at weight i+1, so ball(r) sees
  // denominators up to 2^(r-1)
  h.gens_for_radius = [](int radius) {
    std::vector<GenDef> gens;
    for (int i = 0; i + 1 <= std::max(radius, 1); ++i) {
      Rat g(Int(1), Int(1) << i);
      gens.push_back({"h" + std::to_string(i), Element{g}, i + 1});
      gens.push_back({"H" + std::to_string(i), Element{-g}, i + 1});
    }
    return gens;
  };
  h.mult = [](const Element& x, const Element& y) {
    return Element{std::get<Rat>(x) + std::get<Rat>(y)};
  };
  h.inv = [](const Element& x) { return Element{-std::get<Rat>(x)}; };
  h.format = [](const Element& x) { return std::get<Rat>(x).str(); };
  h.parse = [](const std::string& s) { return Element{rat_from_string(s)}; };
  return h;
}

GroupHandle make_rational_group(const std::vector<Rat>& gens) {
  if (gens.empty()) throw std::invalid_argument("rational group: no generators");
  GroupHandle h;
  h.id = "rational";
  h.identity = Rat{};
  std::vector<GenDef> defs;
  for (size_t i = 0; i < gens.size(); ++i) {
    if (gens[i].sign() == 0) throw std::invalid_argument("rational group: zero generator");
    defs.push_back({"g" + std::to_string(i + 1), Element{gens[i]}, 1});
    defs.push_back({"G" + std::to_string(i + 1), Element{-gens[i]}, 1});
  }
  h.gens_for_radius = fixed_gens(std::move(defs));
  h.mult = [](const Element& x, const Element& y) {
    return Element{std::get<Rat>(x) + std::get<Rat>(y)};
  };
  h.inv = [](const Element& x) { return Element{-std::get<Rat>(x)}; };
  h.format = [](const Element& x) { return std::get<Rat>(x).str(); };
  h.parse = [](const std::string& s) { return Element{rat_from_string(s)}; };
  return h;
}

GroupHandle make_tararin(const TararinSpec& spec) {
  validate_tararin_spec(spec);
  GroupHandle h;
  size_t depth = spec.levels.size();
  h.id = "tararin" + std::to_string(depth);
  if (depth == 2) h.id = "klein";
  TararinElement id;
  id.m.assign(depth, 0);
  h.identity = id;
  static const char* names[] = {"w", "x", "y", "z"};
  std::vector<GenDef> gens;
  for (size_t i = 0; i < depth; ++i) {
    std::string nm = i < 4 ? names[i] : "v" + std::to_string(i);
    TararinElement gp = id, gn = id;
    gp.m[i] = 1;
    gn.m[i] = -1;
    std::string up = nm;
    up[0] = (char)std::toupper((unsigned char)up[0]);
    gens.push_back({nm, Element{gp}, 1});
    gens.push_back({up, Element{gn}, 1});
  }
  h.gens_for_radius = fixed_gens(std::move(gens));
  h.mult = [spec](const Element& x, const Element& y) {
    return Element{tararin_mult(spec, std::get<TararinElement>(x), std::get<TararinElement>(y))};
  };
  h.inv = [spec](const Element& x) {
    return Element{tararin_inverse(spec, std::get<TararinElement>(x))};
  };
  h.format = [spec](const Element& x) { return tararin_str(spec, std::get<TararinElement>(x)); };
  h.parse = [depth, spec](const std::string& raw) {
    std::string s = strip_tuple_wrapping(raw);
    TararinElement e;
    e.m.assign(depth, 0);
    if (s.find(',') != std::string::npos ||
        (!s.empty() && (std::isdigit((unsigned char)s[0]) || s[0] == '-'))) {
      // comma tuple of level values, e.g. "2,-1" or "(1/2,0)"; each value
      // must be an integer multiple of its level generator
      std::istringstream is(s);
      std::string tok;
      size_t idx = 0;
      while (std::getline(is, tok, ',')) {
        if (idx >= depth) throw std::invalid_argument("tararin parse: too many levels");
        tok = strip_tuple_wrapping(tok); // trims surrounding whitespace
        if (tok.empty()) {
          ++idx;
          continue;
        }
        Rat mult = rat_from_string(tok) / cyclic_generator(spec.levels[idx].gens);
        if (!mult.is_integer())
          throw std::invalid_argument("tararin parse: value off the level lattice: " + tok);
        e.m[idx++] = mult.num.convert_to<long long>();
      }
      return Element{e};
    }
    // generator letters w x y z (uppercase = inverse), e.g. "xxY"
    static const std::string low = "wxyz", up = "WXYZ";
    for (char ch : s) {
      if (std::isspace((unsigned char)ch)) continue;
      size_t lv = low.find(ch);
      long long p = 1;
      if (lv == std::string::npos) {
        lv = up.find(ch);
        p = -1;
      }
      if (lv == std::string::npos || lv >= depth)
        throw std::invalid_argument(std::string("tararin parse: bad letter '") + ch + "'");
      e = tararin_mult(spec, e, tararin_level_gen(spec, lv, p));
    }
    return Element{e};
  };
  // the rational series: level subgroup j = elements supported on levels >= j
  for (size_t j = 0; j <= depth; ++j) {
    h.subgroups["series_" + std::to_string(j)] = [j](const Element& x) {
      const auto& e = std::get<TararinElement>(x);
      for (size_t i = 0; i < j && i < e.m.size(); ++i)
        if (e.m[i] != 0) return false;
      return true;
    };
  }
  return h;
}

GroupHandle make_group_by_name(const std::string& name) {
  if (name == "b3") return make_b3();
  if (name == "psl2z") return make_psl2z();
  if (name == "z") return make_z();
  if (name == "z2") return make_z2();
  if (name == "klein") return make_tararin(klein_bottle_spec());
  if (name == "tararin3") return make_tararin(chain3_spec());
  if (name == "dyadic") return make_dyadic_group();
  if (name.rfind("zsum", 0) == 0 && name.size() > 4)
    return make_zsum(std::stoi(name.substr(4)));
  throw std::invalid_argument("unknown group: " + name);
}

}  // namespace ordkit
