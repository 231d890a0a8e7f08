#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "ordkit/psl2z.hpp"

using namespace ordkit;

namespace {

std::vector<PSL2ZElement> small_ball(int len) {
  std::vector<PSL2ZElement> out{psl2z_identity()};
  std::set<std::string> seen{psl2z_identity().key()};
  std::vector<PSL2ZElement> frontier = out;
  const PSL2ZElement gens[] = {psl2z_al(), psl2z_be(), psl2z_be2()};
  for (int step = 0; step < len; ++step) {
    std::vector<PSL2ZElement> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        PSL2ZElement y = psl2z_mult(x, g);
        if (seen.insert(y.key()).second) {
          next.push_back(y);
          out.push_back(y);
        }
      }
    frontier = std::move(next);
  }
  return out;
}

} // namespace

TEST_CASE("torsion relations") {
  CHECK(psl2z_mult(psl2z_al(), psl2z_al()).is_identity());
  PSL2ZElement b = psl2z_be();
  CHECK(psl2z_mult(b, psl2z_mult(b, b)).is_identity());
  CHECK(psl2z_mult(b, b) == psl2z_be2());
  CHECK(psl2z_inverse(b) == psl2z_be2());
  CHECK(psl2z_inverse(psl2z_al()) == psl2z_al());
}

TEST_CASE("reduced words alternate between classes") {
  for (const auto& g : small_ball(5))
    for (size_t i = 0; i + 1 < g.word.size(); ++i)
      CHECK(is_b_class(g.word[i]) != is_b_class(g.word[i + 1]));
}

TEST_CASE("group laws on a sample") {
  auto ball = small_ball(4);
  for (const auto& g : ball) {
    CHECK(psl2z_mult(g, psl2z_inverse(g)).is_identity());
    CHECK(psl2z_mult(psl2z_inverse(g), g).is_identity());
  }
  for (size_t i = 0; i < ball.size(); i += 3)
    for (size_t j = 1; j < ball.size(); j += 5)
      for (size_t k = 2; k < ball.size(); k += 7) {
        CHECK(psl2z_mult(psl2z_mult(ball[i], ball[j]), ball[k]) ==
              psl2z_mult(ball[i], psl2z_mult(ball[j], ball[k])));
      }
}

TEST_CASE("parsing inverts printing") {
  for (const auto& g : small_ball(5)) CHECK(psl2z_parse(g.str()) == g);
  CHECK(psl2z_parse("e").is_identity());
  CHECK(psl2z_parse("al.be2") == psl2z_mult(psl2z_al(), psl2z_be2()));
  CHECK(psl2z_parse("be be").is_identity() == false);
  CHECK(psl2z_parse("be be") == psl2z_be2());
  CHECK(psl2z_parse("al al").is_identity());
}

TEST_CASE("central quotient map") {
  CHECK(q_map(b3_a()) == psl2z_al());
  CHECK(q_map(b3_b()) == psl2z_be());
  CHECK(q_map(b3_t()).is_identity());
  CHECK(q_map(b3_t(-7)).is_identity());
  // homomorphism property, and insensitivity to central shifts
  const B3Element xs[] = {b3_parse("ab"), b3_parse("BaB"), b3_parse("abab"), b3_parse("TTaB")};
  for (const auto& x : xs)
    for (const auto& y : xs) {
      CHECK(q_map(b3_mult(x, y)) == psl2z_mult(q_map(x), q_map(y)));
      CHECK(q_map(b3_mult(x, b3_t(3))) == q_map(x));
    }
}
