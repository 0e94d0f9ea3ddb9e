#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace sqm {

// A generator a_i or its inverse. Internally letters are dense codes
// 2*(i-1) + (sign > 0), so inversion is code ^ 1 and the natural integer order
// is the lexicographic order on (generator_index, sign).
struct Letter {
  int gen = 1;   // 1-based generator index
  int sign = 1;  // +1 or -1

  static Letter from_code(int code) { return {code / 2 + 1, (code & 1) ? 1 : -1}; }
  int code() const { return 2 * (gen - 1) + (sign > 0 ? 1 : 0); }
  Letter inverse() const { return {gen, -sign}; }

  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter& a, const Letter& b) { return a.code() <=> b.code(); }
};

inline int inverse_code(int code) { return code ^ 1; }

using Word = std::vector<Letter>;

struct Relator {
  std::array<Letter, 4> letters{};

  Word word() const { return Word(letters.begin(), letters.end()); }
  Relator inverse() const;
  Relator rotated(int k) const;  // cyclic shift: result[j] = letters[(j + k) % 4]

  friend bool operator==(const Relator&, const Relator&) = default;
  friend auto operator<=>(const Relator&, const Relator&) = default;
};

struct Presentation {
  int rank = 1;
  double density = 0.0;
  std::uint64_t seed = 0;
  std::vector<Relator> relators;
};

bool is_reduced(const Word& w);
bool is_cyclically_reduced(const Word& w);
Word free_reduce(const Word& w);
Word inverse(const Word& w);

// Every cyclically reduced word of length 4 over a_1..a_n and inverses, in
// lexicographic order of letter codes.
std::vector<Relator> enumerate_cyclically_reduced(int n);

// |W_n| = (2n-1)^4 + 1 + 2(n-1), the trace of the fourth power of the
// reduced-word transfer matrix. Lets the sampler size W_n without listing it.
std::uint64_t count_cyclically_reduced(int n);

// floor((2n-1)^{4d}) clamped to [1, |W_n|].
std::uint64_t relator_count(int n, double d);

enum class SamplingMethod { automatic, index_shuffle, rejection };

// Uniform |R|-subset of W_n; relators are returned in canonical (sorted) order.
Presentation sample_presentation(int n, double d, std::uint64_t seed,
                                 SamplingMethod method = SamplingMethod::automatic);

// Token form used in serialized output: "a3" or "a3^-1".
std::string to_token(Letter x);
Letter parse_token(const std::string& token);
std::string to_string(const Word& w);
Word parse_word(const std::string& text);  // whitespace or concatenated tokens

// <a1, a2 | a1 a2 a1^-1 a2^-1>, whose Cayley complex is the square tiling of Z^2.
Presentation torus_presentation();

}  // namespace sqm
