// Runs the four sweep kernels under both execution policies on identical
// inputs, asserts the reports match finding for finding, and prints a small
// timing table. Exit status 1 when any pair of reports disagrees.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "ordkit/group.hpp"
#include "ordkit/oracle.hpp"
#include "ordkit/realization.hpp"

using namespace ordkit;

namespace {

int g_mismatches = 0;

double timed(const std::function<void()>& body) {
  auto t0 = std::chrono::steady_clock::now();
  body();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* kernel, const std::string& size, double ts, double tp, bool match) {
  if (!match) ++g_mismatches;
  std::printf("%-12s %-14s %9.3fs %9.3fs %7.2fx  %s\n", kernel, size.c_str(), ts, tp,
              tp > 0 ? ts / tp : 0.0, match ? "identical" : "MISMATCH");
}

std::string axiom_fingerprint(const AxiomReport& r) {
  std::string s = std::to_string(r.pairs_checked) + "|";
  for (const auto& v : r.violations) s += v.kind + ":" + v.lhs + ":" + v.rhs + ";";
  return s;
}

} // namespace

int main() {
  auto g = make_b3();
  auto dd = make_dd_oracle();

  std::printf("%-12s %-14s %10s %10s %8s  %s\n", "kernel", "input", "serial", "parallel",
              "speedup", "reports");

  {
    AxiomReport rs, rp;
    double ts = timed([&] { rs = check_order_axioms(g, dd, 5, Exec::Serial); });
    double tp = timed([&] { rp = check_order_axioms(g, dd, 5, Exec::Parallel); });
    row("axioms", "ball(5)^2", ts, tp, axiom_fingerprint(rs) == axiom_fingerprint(rp));
  }

  {
    AxiomReport rs, rp;
    double ts = timed([&] { rs = check_left_invariance(g, dd, 3, Exec::Serial); });
    double tp = timed([&] { rp = check_left_invariance(g, dd, 3, Exec::Parallel); });
    row("invariance", "ball(3)^3", ts, tp, axiom_fingerprint(rs) == axiom_fingerprint(rp));
  }

  {
    auto R = build_realization(g, dd, enumerate_n(g, 800));
    EmbeddingCheck rs, rp;
    double ts = timed([&] { rs = order_embedding_check(R, g, dd, Exec::Serial); });
    double tp = timed([&] { rp = order_embedding_check(R, g, dd, Exec::Parallel); });
    bool match = rs.ok == rp.ok && rs.pairs == rp.pairs && rs.mismatches == rp.mismatches &&
                 rs.first_witness == rp.first_witness;
    row("embedding", "800 elements", ts, tp, match && rs.ok);
  }

  {
    std::vector<ConvexityViolation> rs, rp;
    const auto& member = g.subgroups.at("sigma1");
    double ts = timed([&] { rs = convexity_check(g, dd, member, 6, Exec::Serial); });
    double tp = timed([&] { rp = convexity_check(g, dd, member, 6, Exec::Parallel); });
    bool match = rs.size() == rp.size();
    if (match)
      for (size_t i = 0; i < rs.size(); ++i)
        if (element_key(rs[i].mid) != element_key(rp[i].mid) ||
            element_key(rs[i].below) != element_key(rp[i].below) ||
            element_key(rs[i].above) != element_key(rp[i].above))
          match = false;
    row("convexity", "ball(6)", ts, tp, match);
  }

  if (g_mismatches) {
    std::printf("\n%d kernel(s) disagree between policies\n", g_mismatches);
    return 1;
  }
  std::printf("\nall kernels agree between policies\n");
  return 0;
}
