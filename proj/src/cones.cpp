#include "ordkit/cones.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ordkit {

namespace {

struct Clause {
  int i, j, p; // sign[i] = sign[j] = +1 forces sign[p] = +1
};

struct Search {
  const GroupHandle& g;
  int n = 0;
  std::vector<int> inv;
  std::vector<Clause> clauses;
  std::vector<std::vector<int>> occ; // ball index -> clauses touching it
  std::vector<signed char> sign;
  std::vector<int> trail; // representatives, in assignment order
  long long budget = 0;
  long long steps = 0;

  explicit Search(const GroupHandle& gh) : g(gh) {}

  bool assign(int i, int s, std::vector<int>& queue) {
    if (sign[i] != 0) return sign[i] == s;
    sign[i] = static_cast<signed char>(s);
    sign[inv[i]] = static_cast<signed char>(-s);
    trail.push_back(i);
    queue.push_back(i);
    queue.push_back(inv[i]);
    return true;
  }

  bool propagate(std::vector<int>& queue) {
    for (std::size_t head = 0; head < queue.size(); ++head) {
      int x = queue[head];
      for (int c : occ[x]) {
        if (++steps > budget)
          throw std::runtime_error("partial cone search exceeded budget of " +
                                   std::to_string(budget) + " steps");
        const Clause& cl = clauses[c];
        if (sign[cl.i] == 1 && sign[cl.j] == 1) {
          if (!assign(cl.p, 1, queue)) return false;
        } else if (sign[cl.p] == -1) {
          if (sign[cl.i] == 1) {
            if (!assign(cl.j, -1, queue)) return false;
          } else if (sign[cl.j] == 1) {
            if (!assign(cl.i, -1, queue)) return false;
          }
        }
      }
    }
    queue.clear();
    return true;
  }

  bool decide(int i, int s) {
    std::vector<int> queue;
    return assign(i, s, queue) && propagate(queue);
  }

  void undo(std::size_t mark) {
    while (trail.size() > mark) {
      int i = trail.back();
      trail.pop_back();
      sign[i] = 0;
      sign[inv[i]] = 0;
    }
  }
};

} // namespace

ConeSearchResult enumerate_partial_cones(const GroupHandle& g, int radius,
                                         const std::vector<Element>& required_positive,
                                         long long budget) {
  ConeSearchResult out;
  out.radius = radius;
  out.ball = ball_enumerate(g, radius);
  const int n = static_cast<int>(out.ball.size());

  std::unordered_map<std::string, int> index;
  index.reserve(out.ball.size() * 2);
  for (int i = 0; i < n; ++i) index.emplace(element_key(out.ball[i]), i);

  Search s(g);
  s.n = n;
  s.budget = budget;
  s.sign.assign(n, 0);
  s.inv.assign(n, -1);
  for (int i = 0; i < n; ++i) {
    auto it = index.find(element_key(g.inv(out.ball[i])));
    if (it == index.end()) throw std::logic_error("ball is not closed under inverses");
    s.inv[i] = it->second;
  }
  for (int i = 1; i < n; ++i)
    if (s.inv[i] == i) return out; // involution: no consistent sign exists

  s.occ.assign(n, {});
  for (int i = 1; i < n; ++i) {
    for (int j = 1; j < n; ++j) {
      auto it = index.find(element_key(g.mult(out.ball[i], out.ball[j])));
      if (it == index.end() || it->second == 0) continue;
      int c = static_cast<int>(s.clauses.size());
      s.clauses.push_back({i, j, it->second});
      s.occ[i].push_back(c);
      s.occ[j].push_back(c);
      s.occ[it->second].push_back(c);
    }
  }

  bool feasible = true;
  for (const Element& req : required_positive) {
    auto it = index.find(element_key(req));
    if (it == index.end())
      throw std::invalid_argument("required-positive element lies outside ball(" +
                                  std::to_string(radius) + "): " + g.format(req));
    if (it->second == 0)
      throw std::invalid_argument("identity cannot be required positive");
    if (!s.decide(it->second, 1)) {
      feasible = false;
      break;
    }
  }

  if (feasible) {
    std::function<void()> dfs = [&]() {
      int pick = -1;
      for (int i = 1; i < n; ++i)
        if (s.sign[i] == 0) {
          pick = i;
          break;
        }
      if (pick < 0) {
        out.survivors.push_back(s.sign);
        return;
      }
      for (int val : {+1, -1}) {
        std::size_t mark = s.trail.size();
        if (s.decide(pick, val)) dfs();
        s.undo(mark);
      }
    };
    dfs();
  }

  out.steps_used = s.steps;
  return out;
}

IsolationEvidence isolation_evidence(const GroupHandle& g, const SignOracle& lambda,
                                     const std::vector<Element>& required_positive,
                                     int radius, long long budget) {
  ConeSearchResult res = enumerate_partial_cones(g, radius, required_positive, budget);
  std::vector<signed char> lv(res.ball.size(), 0);
  for (std::size_t i = 1; i < res.ball.size(); ++i)
    lv[i] = static_cast<signed char>(lambda.sign(res.ball[i]));

  IsolationEvidence ev;
  ev.radius = radius;
  ev.survivor_count = res.survivors.size();
  for (const auto& sv : res.survivors)
    if (sv == lv) {
      ev.contains_lambda = true;
      break;
    }
  ev.all_agree = ev.contains_lambda && res.survivors.size() == 1;
  return ev;
}

} // namespace ordkit
