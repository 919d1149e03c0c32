#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "svbr/braid.hpp"

using namespace svbr;

namespace {

Braid random_braid(std::mt19937& rng, int strands, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, strands - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  std::vector<int> w;
  int L = len(rng);
  for (int t = 0; t < L; ++t) w.push_back(gen(rng) * (sign(rng) ? 1 : -1));
  return Braid(strands, std::move(w));
}

std::vector<std::vector<int>> all_words_b3(int max_len) {
  std::vector<std::vector<int>> out = {{}};
  size_t lo = 0;
  for (int L = 1; L <= max_len; ++L) {
    size_t hi = out.size();
    for (size_t t = lo; t < hi; ++t)
      for (int g : {1, -1, 2, -2}) {
        auto w = out[t];
        w.push_back(g);
        out.push_back(std::move(w));
      }
    lo = hi;
  }
  return out;
}

}  // namespace

TEST_CASE("compose: free cancellation and concatenation") {
  CHECK(compose(Braid(2, {1}), Braid(2, {-1})).word.empty());
  CHECK(compose(Braid(3, {1}), Braid(3, {2})).word == std::vector<int>{1, 2});
  CHECK_THROWS(compose(Braid(2, {1}), Braid(3, {1})));
}

TEST_CASE("permutation convention: rho of sigma1*sigma2 in B_3 is a 3-cycle") {
  // Hand trace: strand 1 crosses to position 2, then to position 3; strand 2
  // crosses to position 1 and stays; strand 3 crosses to position 2.
  Permutation rho = permutation_of(Braid(3, {1, 2}));
  CHECK(rho(1) == 3);
  CHECK(rho(2) == 1);
  CHECK(rho(3) == 2);
  // composition rule: rho_{a*b} = apply rho_a first, then rho_b
  CHECK(rho == permutation_of(Braid(3, {1})).then(permutation_of(Braid(3, {2}))));
}

TEST_CASE("permutation basics") {
  Permutation t = permutation_of(Braid(2, {1}));
  CHECK(t(1) == 2);
  CHECK(t(2) == 1);
  CHECK(permutation_of(Braid(5, {})).is_identity());
  Permutation u = permutation_of(Braid(3, {1, -1, 2}));
  CHECK(u(1) == 1);
  CHECK(u(2) == 3);
  CHECK(u(3) == 2);
}

TEST_CASE("inverse: word reversal and group axiom") {
  CHECK(inverse(Braid(3, {1, 2})).word == std::vector<int>{-2, -1});
  CHECK(inverse(Braid(3, {})).word.empty());
  std::mt19937 rng(7001);
  for (int t = 0; t < 100; ++t) {
    Braid b = random_braid(rng, 4, 12);
    CHECK(equal(compose(b, inverse(b)), Braid::identity(4)));
  }
}

TEST_CASE("equal: Artin relation, far commutation, distinct elements") {
  CHECK(equal(Braid(3, {1, 2, 1}), Braid(3, {2, 1, 2})));
  CHECK(equal(Braid(4, {1, 3}), Braid(4, {3, 1})));
  CHECK_FALSE(equal(Braid(2, {1}), Braid(2, {-1})));
  CHECK_THROWS(equal(Braid(2, {1}), Braid(3, {1})));
}

TEST_CASE("equal agrees with the relator-closure oracle on all words of length <= 4 in B_3") {
  svbr_oracles::B3WordOracle oracle(10);
  auto words = all_words_b3(4);
  std::vector<Braid> braids;
  for (auto& w : words) braids.emplace_back(3, w);
  for (size_t a = 0; a < words.size(); ++a)
    for (size_t b = a + 1; b < words.size(); ++b) {
      bool lib = equal(braids[a], braids[b]);
      bool orc = oracle.equivalent(words[a], words[b]);
      if (lib != orc) {
        CAPTURE(print_braid(braids[a]));
        CAPTURE(print_braid(braids[b]));
        CHECK(lib == orc);
        return;
      }
    }
  CHECK(true);
}

TEST_CASE("equal is an equivalence and survives relator insertion") {
  std::mt19937 rng(7002);
  for (int t = 0; t < 40; ++t) {
    Braid a = random_braid(rng, 4, 8);
    Braid b = random_braid(rng, 4, 8);
    Braid c = random_braid(rng, 4, 8);
    CHECK(equal(a, a));
    CHECK(equal(a, b) == equal(b, a));
    if (equal(a, b) && equal(b, c)) CHECK(equal(a, c));
  }
  // splice Artin relators and cancelling pairs into random positions
  static const std::vector<std::vector<int>> relators = {
      {1, 2, 1, -2, -1, -2}, {2, 3, 2, -3, -2, -3}, {1, 3, -1, -3}, {2, -2}};
  for (int t = 0; t < 60; ++t) {
    Braid a = random_braid(rng, 4, 8);
    const auto& r = relators[t % relators.size()];
    std::uniform_int_distribution<size_t> pos(0, a.word.size());
    std::vector<int> w = a.word;
    w.insert(w.begin() + pos(rng), r.begin(), r.end());
    CHECK(equal(a, Braid(4, w)));
  }
}

TEST_CASE("permutation_of is a homomorphism") {
  std::mt19937 rng(7003);
  for (int t = 0; t < 100; ++t) {
    Braid a = random_braid(rng, 5, 8);
    Braid b = random_braid(rng, 5, 8);
    CHECK(permutation_of(compose(a, b)) == permutation_of(a).then(permutation_of(b)));
  }
}

TEST_CASE("double_strand: base cases") {
  CHECK(double_strand(Braid(1, {}), 1) == Braid(2, {}));
  CHECK_THROWS(double_strand(Braid(2, {1}), 3));
  // doubling strand 1 of sigma1 in B_2: the cable {1,2} passes over strand 3
  Braid d = double_strand(Braid(2, {1}), 1);
  CHECK(equal(d, Braid(3, {2, 1})));
  CHECK_FALSE(equal(d, Braid(3, {1, 2})));
}

TEST_CASE("double_strand matches the block-doubling permutation oracle on all b of length <= 6 in B_4 at spot-check density") {
  // exhaustive over length <= 4, sampled at length 5..6
  std::vector<std::vector<int>> words = {{}};
  size_t lo = 0;
  for (int L = 1; L <= 4; ++L) {
    size_t hi = words.size();
    for (size_t t = lo; t < hi; ++t)
      for (int g : {1, -1, 2, -2, 3, -3}) {
        auto w = words[t];
        w.push_back(g);
        words.push_back(std::move(w));
      }
    lo = hi;
  }
  std::mt19937 rng(7004);
  for (int t = 0; t < 4000; ++t) {
    std::vector<int> w;
    std::uniform_int_distribution<int> gen(1, 3), sign(0, 1), len(5, 6);
    int L = len(rng);
    for (int q = 0; q < L; ++q) w.push_back(gen(rng) * (sign(rng) ? 1 : -1));
    words.push_back(std::move(w));
  }
  for (const auto& w : words) {
    Braid b(4, w);
    for (int i = 1; i <= 4; ++i) {
      CHECK(permutation_of(double_strand(b, i)) ==
            svbr_oracles::double_permutation(permutation_of(b), i));
    }
  }
}

TEST_CASE("cabling coherence: doubling commutes with composition") {
  std::mt19937 rng(7005);
  for (int t = 0; t < 1000; ++t) {
    Braid a = random_braid(rng, 4, 6);
    Braid b = random_braid(rng, 4, 6);
    std::uniform_int_distribution<int> pick(1, 4);
    int i = pick(rng);
    Braid lhs = double_strand(compose(a, b), i);
    Braid rhs = compose(double_strand(a, i), double_strand(b, permutation_of(a)(i)));
    CHECK(equal(lhs, rhs));
  }
}

TEST_CASE("remove_strand undoes double_strand") {
  std::mt19937 rng(7006);
  for (int t = 0; t < 200; ++t) {
    Braid b = random_braid(rng, 4, 8);
    std::uniform_int_distribution<int> pick(1, 4);
    int i = pick(rng);
    CHECK(remove_strand(double_strand(b, i), i) == b);
    CHECK(remove_strand(double_strand(b, i), i + 1) == b);
  }
}

TEST_CASE("is_pure") {
  CHECK(is_pure(Braid(2, {1, 1})));
  CHECK_FALSE(is_pure(Braid(2, {1})));
  // commutator of sigma1, sigma2 in B_3 is not pure
  Braid a(3, {1}), b(3, {2});
  Braid comm = compose(compose(a, b), compose(inverse(a), inverse(b)));
  CHECK_FALSE(is_pure(comm));
  std::mt19937 rng(7007);
  int found = 0;
  for (int t = 0; t < 400 && found < 30; ++t) {
    Braid x = random_braid(rng, 4, 6), y = random_braid(rng, 4, 6);
    if (is_pure(x) && is_pure(y)) {
      ++found;
      CHECK(is_pure(compose(x, y)));
      CHECK(is_pure(inverse(x)));
    }
  }
  CHECK(found > 0);
}

TEST_CASE("block transposition permutations") {
  Braid b = block_transposition(5, 2, 2, 2, 1);
  Permutation rho = permutation_of(b);
  CHECK(rho(1) == 1);
  CHECK(rho(2) == 4);
  CHECK(rho(3) == 5);
  CHECK(rho(4) == 2);
  CHECK(rho(5) == 3);
  CHECK(equal(compose(b, block_transposition(5, 2, 2, 2, -1)), Braid::identity(5)));
  CHECK(is_trivial(compose(block_transposition(5, 2, 2, 2, 1),
                           block_transposition(5, 2, 2, 2, -1))));
  // asymmetric widths: transposing (2,3) then (3,2) with opposite sign undoes it
  Braid p = block_transposition(5, 1, 2, 3, 1);
  Permutation rp = permutation_of(p);
  CHECK(rp(1) == 4);
  CHECK(rp(2) == 5);
  CHECK(rp(3) == 1);
  CHECK(is_trivial(compose(p, block_transposition(5, 1, 3, 2, -1))));
  CHECK(permutation_of(block_transposition(5, 1, 2, 3, -1)) == rp);
}

TEST_CASE("braid text form round trip") {
  for (const char* s : {"B4: 1,-2,3", "B1: e", "B3: e", "B2: 1,1,1"}) {
    Braid b = parse_braid(s);
    CHECK(print_braid(b) == s);
    CHECK(parse_braid(print_braid(b)) == b);
  }
  CHECK_THROWS(parse_braid("B2 1"));
  CHECK_THROWS(parse_braid("B2: 5"));
  CHECK_THROWS(parse_braid("B2:"));
}
