#include "ordkit/realization.hpp"

#include <algorithm>
#include <stdexcept>

namespace ordkit {

const Dyadic& Realization::value_of(const Element& e) const {
  auto it = pos.find(element_key(e));
  if (it == pos.end()) throw std::out_of_range("element not realized");
  return values[it->second];
}

Realization build_realization(const GroupHandle& g, const SignOracle& order,
                              const std::vector<Element>& enumeration, Dyadic x0) {
  if (enumeration.empty()) throw std::invalid_argument("empty enumeration");
  if (!g.is_identity(enumeration[0]))
    throw std::invalid_argument("enumeration must start with the identity");

  Realization R;
  R.x0 = x0;
  R.elements.reserve(enumeration.size());
  R.values.reserve(enumeration.size());
  R.sorted.reserve(enumeration.size());

  for (const Element& x : enumeration) {
    std::string key = element_key(x);
    if (R.pos.count(key))
      throw std::invalid_argument("duplicate element in enumeration: " + g.format(x));

    // lo = number of already-placed elements below x
    std::size_t lo = 0, hi = R.sorted.size();
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      int c = order.compare(g, R.elements[R.sorted[mid]], x); // +1 iff placed < x
      if (c == 0)
        throw std::invalid_argument("order reports equality for distinct elements: " +
                                    g.format(x));
      if (c > 0)
        lo = mid + 1;
      else
        hi = mid;
    }

    Dyadic v;
    if (R.sorted.empty())
      v = x0;
    else if (lo == 0)
      v = R.values[R.sorted.front()] - Dyadic(1);
    else if (lo == R.sorted.size())
      v = R.values[R.sorted.back()] + Dyadic(1);
    else
      v = midpoint(R.values[R.sorted[lo - 1]], R.values[R.sorted[lo]]);

    std::size_t idx = R.elements.size();
    R.elements.push_back(x);
    R.values.push_back(v);
    R.sorted.insert(R.sorted.begin() + static_cast<std::ptrdiff_t>(lo), idx);
    R.pos.emplace(std::move(key), idx);
  }
  return R;
}

PartialMap partial_action(const Realization& R, const GroupHandle& g, const Element& s) {
  PartialMap pm;
  for (std::size_t i = 0; i < R.elements.size(); ++i) {
    Element y = g.mult(s, R.elements[i]);
    auto it = R.pos.find(element_key(y));
    if (it != R.pos.end()) pm.graph.emplace_back(R.values[i], R.values[it->second]);
  }
  std::sort(pm.graph.begin(), pm.graph.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });
  for (std::size_t i = 1; i < pm.graph.size(); ++i)
    if (!(pm.graph[i - 1].second < pm.graph[i].second)) pm.monotone = false;
  return pm;
}

EmbeddingCheck order_embedding_check(const Realization& R, const GroupHandle& g,
                                     const SignOracle& order, Exec exec) {
  const std::size_t n = R.elements.size();
  struct Bad {
    std::size_t i, j;
  };
  auto bads = sweep_pairs<Bad>(n, exec, [&](std::size_t i, std::size_t j) {
    std::vector<Bad> out;
    if (i >= j) return out;
    int oc = order.compare(g, R.elements[i], R.elements[j]); // +1 iff elements[i] < elements[j]
    bool value_less = R.values[i] < R.values[j];
    if (oc == 0 || (oc > 0) != value_less) out.push_back({i, j});
    return out;
  });

  EmbeddingCheck ec;
  ec.pairs = n < 2 ? 0 : n * (n - 1) / 2;
  ec.mismatches = bads.size();
  ec.ok = bads.empty();
  if (!bads.empty())
    ec.first_witness = g.format(R.elements[bads[0].i]) + " | " + g.format(R.elements[bads[0].j]);
  return ec;
}

GapReport gap_spectrum(const Realization& R, Rat window_frac,
                       const std::function<bool(const Element&)>* member) {
  if (window_frac.sign() <= 0 || Rat(1) < window_frac)
    throw std::invalid_argument("window fraction must lie in (0, 1]");

  GapReport rep;
  const std::size_t n = R.sorted.size();
  // drop floor(n*(1-frac)/2) ranks from each side
  Rat d = (Rat(1) - window_frac) * Rat(Int(n)) / Rat(2);
  Int drop_i = d.num / d.den; // both nonnegative, so this floors
  auto drop = static_cast<std::size_t>(drop_i.convert_to<unsigned long long>());
  rep.window_begin = drop;
  rep.window_end = n - drop;

  rep.max_gap = Rat(0);
  for (std::size_t r = rep.window_begin + 1; r < rep.window_end; ++r) {
    Rat gap = (R.values[R.sorted[r]] - R.values[R.sorted[r - 1]]).to_rat();
    if (rep.max_gap < gap) rep.max_gap = gap;
    rep.gaps.push_back(std::move(gap));
  }

  if (member) {
    rep.has_members = false;
    std::size_t first_rank = 0, last_rank = 0;
    for (std::size_t r = 0; r < n; ++r) {
      if (!(*member)(R.elements[R.sorted[r]])) continue;
      if (!rep.has_members) first_rank = r;
      last_rank = r;
      rep.has_members = true;
      ++rep.member_count;
    }
    if (rep.has_members) {
      for (std::size_t r = first_rank + 1; r < last_rank; ++r) {
        ++rep.inside_count;
        if (!(*member)(R.elements[R.sorted[r]])) rep.inside_members_only = false;
      }
    }
  }
  return rep;
}

std::vector<ConvexityViolation> convexity_check(const GroupHandle& g, const SignOracle& order,
                                                const std::function<bool(const Element&)>& member,
                                                int radius, Exec exec) {
  std::vector<Element> ball = ball_enumerate(g, radius);
  std::vector<std::size_t> members;
  for (std::size_t i = 1; i < ball.size(); ++i)
    if (member(ball[i])) members.push_back(i);
  if (members.size() < 2) return {};

  // order-min and order-max of the member set; x violates convexity iff
  // it sits strictly between them
  std::size_t lo = members[0], hi = members[0];
  for (std::size_t m : members) {
    if (order.compare(g, ball[m], ball[lo]) > 0) lo = m;
    if (order.compare(g, ball[hi], ball[m]) > 0) hi = m;
  }
  const Element& below = ball[lo];
  const Element& above = ball[hi];

  return sweep_indices<ConvexityViolation>(ball.size(), exec, [&](std::size_t i) {
    std::vector<ConvexityViolation> out;
    if (i == 0 || member(ball[i])) return out;
    if (order.compare(g, below, ball[i]) > 0 && order.compare(g, ball[i], above) > 0)
      out.push_back({below, ball[i], above});
    return out;
  });
}

GapBound gap_bound_check(const Realization& R, const GroupHandle& g,
                         const std::vector<GenDef>& gens, Rat window_frac) {
  GapBound gb;
  gb.max_gap = gap_spectrum(R, window_frac).max_gap;
  gb.max_displacement = Rat(0);
  for (const GenDef& s : gens) {
    for (std::size_t i = 0; i < R.elements.size(); ++i) {
      Element y = g.mult(s.el, R.elements[i]);
      auto it = R.pos.find(element_key(y));
      if (it == R.pos.end()) continue;
      Rat disp = (R.values[it->second] - R.values[i]).to_rat();
      if (disp.sign() < 0) disp = Rat(0) - disp;
      if (gb.max_displacement < disp) gb.max_displacement = disp;
    }
  }
  gb.holds = !(gb.max_displacement < gb.max_gap);
  return gb;
}

} // namespace ordkit
