#include "ordkit/reconstruct.hpp"

#include <stdexcept>
#include <string>
#include <unordered_map>

namespace ordkit {

namespace {

struct MoveSpec {
  PSL2ZElement map;
  PSL2ZElement src_lo, src_hi; // endpoints of the source arc, ccw
  PSL2ZElement dst_lo, dst_hi; // endpoints of the target arc, ccw
};

// The two pairing maps swap arc endpoints: map(src_lo) = dst_hi and
// map(src_hi) = dst_lo, so the complement of the source arc lands
// order-preservingly across the target arc.
std::vector<MoveSpec> move_specs() {
  auto p = [](const char* w) { return psl2z_parse(w); };
  PSL2ZElement g1 = p("be2.al.be.al");
  PSL2ZElement g2 = p("al.be.al.be2");
  std::vector<MoveSpec> specs;
  specs.push_back({g1, p("al.be2"), p("al.be2.al"), p("be2"), p("be2.al")});
  specs.push_back({psl2z_inverse(g1), p("be2"), p("be2.al"), p("al.be2"), p("al.be2.al")});
  specs.push_back({g2, p("be"), p("be.al"), p("al.be"), p("al.be.al")});
  specs.push_back({psl2z_inverse(g2), p("al.be"), p("al.be.al"), p("be"), p("be.al")});
  return specs;
}

std::size_t index_of(const std::vector<PSL2ZElement>& order, const PSL2ZElement& g) {
  for (std::size_t i = 0; i < order.size(); ++i)
    if (order[i] == g) return i;
  throw std::logic_error("arc endpoint " + g.str() + " missing from the configuration");
}

} // namespace

Generations reconstruct_by_generations(int depth) {
  if (depth < 0) throw std::invalid_argument("depth must be nonnegative");

  Generations gen;
  for (const char* w : {"e", "al.be", "al.be.al", "al.be2", "al.be2.al", "al", "be", "be.al",
                        "be2", "be2.al"}) {
    gen.order.push_back(psl2z_parse(w));
    gen.born.push_back(0);
  }

  std::unordered_map<std::string, int> present;
  for (const auto& g : gen.order) present.emplace(g.key(), 0);

  std::vector<MoveSpec> specs = move_specs();

  for (int round = 1; round <= depth; ++round) {
    std::vector<PSL2ZElement> snapshot = gen.order;
    for (const MoveSpec& mv : specs) {
      // source points: everything strictly outside the closed source arc,
      // walked ccw starting just past src_hi (cyclically)
      std::size_t s_lo = index_of(snapshot, mv.src_lo);
      std::size_t s_hi = index_of(snapshot, mv.src_hi);
      if (s_lo >= s_hi)
        throw std::logic_error("source arc endpoints out of order for " + mv.map.str());
      std::vector<PSL2ZElement> images;
      images.reserve(snapshot.size());
      const std::size_t n = snapshot.size();
      for (std::size_t off = s_hi + 1; off < s_hi + 1 + n; ++off) {
        std::size_t i = off % n;
        if (i == s_lo) break;
        images.push_back(psl2z_mult(mv.map, snapshot[i]));
      }

      // merge into the target arc of the current order
      std::size_t d_lo = index_of(gen.order, mv.dst_lo);
      std::size_t d_hi = index_of(gen.order, mv.dst_hi);
      if (d_lo >= d_hi)
        throw std::logic_error("target arc endpoints out of order for " + mv.map.str());

      std::vector<PSL2ZElement> merged;
      std::vector<int> merged_born;
      std::size_t q = d_lo + 1; // walks the points already inside the target arc
      for (const PSL2ZElement& im : images) {
        if (q < d_hi && gen.order[q] == im) {
          merged.push_back(im);
          merged_born.push_back(gen.born[q]);
          ++q;
          continue;
        }
        auto it = present.find(im.key());
        if (it != present.end())
          throw std::logic_error("image " + im.str() + " of " + mv.map.str() +
                                 " exists outside its expected slot");
        present.emplace(im.key(), round);
        merged.push_back(im);
        merged_born.push_back(round);
      }
      if (q != d_hi)
        throw std::logic_error("points inside the target arc of " + mv.map.str() +
                               " are not a subsequence of the mapped points");

      std::vector<PSL2ZElement> next(gen.order.begin(),
                                     gen.order.begin() + static_cast<std::ptrdiff_t>(d_lo + 1));
      std::vector<int> next_born(gen.born.begin(),
                                 gen.born.begin() + static_cast<std::ptrdiff_t>(d_lo + 1));
      next.insert(next.end(), merged.begin(), merged.end());
      next_born.insert(next_born.end(), merged_born.begin(), merged_born.end());
      next.insert(next.end(), gen.order.begin() + static_cast<std::ptrdiff_t>(d_hi),
                  gen.order.end());
      next_born.insert(next_born.end(), gen.born.begin() + static_cast<std::ptrdiff_t>(d_hi),
                       gen.born.end());
      gen.order = std::move(next);
      gen.born = std::move(next_born);
    }
  }
  return gen;
}

} // namespace ordkit
