#include <doctest.h>

#include <cmath>
#include <set>

#include "helpers.hpp"
#include "sqm/presentation.hpp"

using namespace sqm;
using testing::rel;
using testing::w;

namespace {

// Filter every length-4 code sequence over 2n letters; codes pair as (2k, 2k+1).
std::set<std::array<int, 4>> brute_cyclically_reduced(int n) {
  std::set<std::array<int, 4>> out;
  const int k = 2 * n;
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = 0; c < k; ++c)
        for (int d = 0; d < k; ++d) {
          const std::array<int, 4> s{a, b, c, d};
          bool ok = true;
          for (int i = 0; i < 4; ++i)
            if ((s[i] ^ 1) == s[(i + 1) % 4]) ok = false;
          if (ok) out.insert(s);
        }
  return out;
}

std::array<int, 4> codes(const Relator& r) {
  return {r.letters[0].code(), r.letters[1].code(), r.letters[2].code(), r.letters[3].code()};
}

}  // namespace

TEST_CASE("cyclically reduced words match a brute-force filter") {
  const int expected[] = {0, 2, 84, 630};
  for (int n = 1; n <= 3; ++n) {
    const auto oracle = brute_cyclically_reduced(n);
    const auto words = enumerate_cyclically_reduced(n);
    CHECK(static_cast<int>(words.size()) == expected[n]);
    CHECK(oracle.size() == words.size());
    std::set<std::array<int, 4>> got;
    for (const Relator& r : words) got.insert(codes(r));
    CHECK(got == oracle);
    CHECK(std::is_sorted(words.begin(), words.end()));
  }
  // inclusion-exclusion cross-check at n=2
  CHECK(108 - 24 == 84);
  for (int n = 1; n <= 6; ++n) CHECK(count_cyclically_reduced(n) == brute_cyclically_reduced(n).size());
}

TEST_CASE("n=1 words are the two powers") {
  const auto words = enumerate_cyclically_reduced(1);
  REQUIRE(words.size() == 2);
  CHECK(to_string(words[0].word()) == "a1^-1 a1^-1 a1^-1 a1^-1");
  CHECK(to_string(words[1].word()) == "a1 a1 a1 a1");
}

TEST_CASE("reduction predicates") {
  CHECK(is_cyclically_reduced(w("a1 a2 a1 a2")));
  CHECK_FALSE(is_cyclically_reduced(w("a1 a2 a2 a1^-1")));
  CHECK(is_reduced(w("a1 a2 a2 a1^-1")));
  CHECK_FALSE(is_reduced(w("a1 a1^-1 a2 a2")));
  CHECK_FALSE(is_cyclically_reduced(w("a1 a1^-1 a2 a2")));
  CHECK(free_reduce(w("a1 a2 a2^-1 a1^-1 a3")) == w("a3"));
  CHECK(inverse(w("a1 a2^-1")) == w("a2 a1^-1"));
}

TEST_CASE("tokens round-trip") {
  const Word x = w("a1 a2^-1 a10 a3^-1");
  CHECK(parse_word(to_string(x)) == x);
  CHECK(parse_word("a1a2^-1a10") == w("a1 a2^-1 a10"));
  CHECK_THROWS(parse_word("b1"));
  CHECK(rel("a1 a2 a3 a4").rotated(1).word() == w("a2 a3 a4 a1"));
  CHECK(rel("a1 a2 a3 a4").inverse().word() == w("a4^-1 a3^-1 a2^-1 a1^-1"));
}

TEST_CASE("relator counts") {
  CHECK(relator_count(3, 0.3) == 6);  // floor(5^1.2) = floor(6.898)
  CHECK(relator_count(2, 0.5) == 9);  // 3^2 exactly
  CHECK(relator_count(1, 0.4) == 1);
  CHECK(relator_count(2, 0.01) == 1);
  CHECK(relator_count(2, 0.99) == static_cast<std::uint64_t>(std::floor(std::pow(3.0, 3.96))));
  for (int n = 1; n <= 4; ++n)
    for (double d : {0.05, 0.2, 0.45, 0.999}) {
      CHECK(relator_count(n, d) >= 1);
      CHECK(relator_count(n, d) <= count_cyclically_reduced(n));
    }
}

TEST_CASE("sampling is deterministic, sorted and cyclically reduced") {
  for (SamplingMethod m : {SamplingMethod::automatic, SamplingMethod::index_shuffle, SamplingMethod::rejection}) {
    const Presentation a = sample_presentation(3, 0.3, 7, m), b = sample_presentation(3, 0.3, 7, m);
    CHECK(a.relators == b.relators);
    CHECK(a.relators.size() == 6);
    CHECK(std::is_sorted(a.relators.begin(), a.relators.end()));
    CHECK(std::adjacent_find(a.relators.begin(), a.relators.end()) == a.relators.end());
    for (const Relator& r : a.relators) CHECK(is_cyclically_reduced(r.word()));
  }
  const Presentation big = sample_presentation(40, 0.1, 3);
  for (const Relator& r : big.relators) CHECK(is_cyclically_reduced(r.word()));
  CHECK(big.relators.size() == relator_count(40, 0.1));
}

TEST_CASE("n=1 sampling is uniform") {
  int first = 0;
  const int samples = 10000;
  const Relator pos = enumerate_cyclically_reduced(1)[1];
  for (int s = 0; s < samples; ++s) first += sample_presentation(1, 0.3, s).relators.at(0) == pos;
  CHECK(std::abs(first / double(samples) - 0.5) <= 0.02);
}

TEST_CASE("shuffle and rejection agree in distribution") {
  // n=2, d=0.3: |R| = 3 of 84, so each word is included with probability 3/84.
  const auto words = enumerate_cyclically_reduced(2);
  const int samples = 4000;
  for (SamplingMethod m : {SamplingMethod::index_shuffle, SamplingMethod::rejection}) {
    std::map<Relator, int> hits;
    for (int s = 0; s < samples; ++s)
      for (const Relator& r : sample_presentation(2, 0.3, 1000 + s, m).relators) ++hits[r];
    double worst = 0;
    for (const Relator& r : words) worst = std::max(worst, std::abs(hits[r] / double(samples) - 3.0 / 84));
    CHECK(worst < 0.015);
  }
}

TEST_CASE("torus presentation") {
  const Presentation t = torus_presentation();
  CHECK(t.rank == 2);
  REQUIRE(t.relators.size() == 1);
  CHECK(t.relators[0].word() == w("a1 a2 a1^-1 a2^-1"));
}
