#include "sqm/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

namespace sqm {

Relator Relator::inverse() const {
  Relator r;
  for (int j = 0; j < 4; ++j) r.letters[j] = letters[3 - j].inverse();
  return r;
}

Relator Relator::rotated(int k) const {
  Relator r;
  for (int j = 0; j < 4; ++j) r.letters[j] = letters[((j + k) % 4 + 4) % 4];
  return r;
}

bool is_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

bool is_cyclically_reduced(const Word& w) {
  if (!is_reduced(w)) return false;
  return w.size() < 2 || !(w.back() == w.front().inverse());
}

Word free_reduce(const Word& w) {
  Word out;
  out.reserve(w.size());
  for (const Letter& x : w) {
    if (!out.empty() && out.back() == x.inverse())
      out.pop_back();
    else
      out.push_back(x);
  }
  return out;
}

Word inverse(const Word& w) {
  Word out(w.rbegin(), w.rend());
  for (Letter& x : out) x = x.inverse();
  return out;
}

std::vector<Relator> enumerate_cyclically_reduced(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  const int k = 2 * n;
  std::vector<Relator> out;
  out.reserve(count_cyclically_reduced(n));
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (b == inverse_code(a)) continue;
      for (int c = 0; c < k; ++c) {
        if (c == inverse_code(b)) continue;
        for (int d = 0; d < k; ++d) {
          if (d == inverse_code(c) || d == inverse_code(a)) continue;
          out.push_back(Relator{{Letter::from_code(a), Letter::from_code(b), Letter::from_code(c),
                                 Letter::from_code(d)}});
        }
      }
    }
  return out;
}

std::uint64_t count_cyclically_reduced(int n) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  const std::uint64_t q = 2 * static_cast<std::uint64_t>(n) - 1;
  return q * q * q * q + 1 + 2 * static_cast<std::uint64_t>(n - 1);
}

std::uint64_t relator_count(int n, double d) {
  const double raw = std::pow(2.0 * n - 1.0, 4.0 * d);
  // The guard keeps exact integer powers such as 3^2 from rounding down.
  auto size = static_cast<std::uint64_t>(std::floor(raw + 1e-9));
  size = std::max<std::uint64_t>(size, 1);
  return std::min(size, count_cyclically_reduced(n));
}

namespace {

constexpr std::uint64_t kShuffleLimit = 1u << 20;

Relator random_word(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> pick(0, 2 * n - 1);
  for (;;) {
    Relator r;
    for (auto& x : r.letters) x = Letter::from_code(pick(rng));
    if (is_cyclically_reduced(r.word())) return r;
  }
}

}  // namespace

Presentation sample_presentation(int n, double d, std::uint64_t seed, SamplingMethod method) {
  if (n < 1) throw std::invalid_argument("rank must be at least 1");
  if (!(d > 0.0 && d < 1.0)) throw std::invalid_argument("density must lie in (0,1)");

  Presentation p;
  p.rank = n;
  p.density = d;
  p.seed = seed;
  const std::uint64_t size = relator_count(n, d);
  const std::uint64_t total = count_cyclically_reduced(n);
  std::mt19937_64 rng(seed);

  if (method == SamplingMethod::automatic)
    method = total <= kShuffleLimit ? SamplingMethod::index_shuffle : SamplingMethod::rejection;

  if (method == SamplingMethod::index_shuffle) {
    std::vector<Relator> all = enumerate_cyclically_reduced(n);
    for (std::uint64_t i = 0; i < size; ++i) {
      std::uniform_int_distribution<std::uint64_t> pick(i, total - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    p.relators.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(size));
  } else {
    std::set<Relator> chosen;
    while (chosen.size() < size) chosen.insert(random_word(rng, n));
    p.relators.assign(chosen.begin(), chosen.end());
  }
  std::sort(p.relators.begin(), p.relators.end());
  return p;
}

std::string to_token(Letter x) {
  std::string s = "a" + std::to_string(x.gen);
  if (x.sign < 0) s += "^-1";
  return s;
}

Letter parse_token(const std::string& token) {
  if (token.size() < 2 || token[0] != 'a') throw std::invalid_argument("bad letter token: " + token);
  std::size_t pos = 1;
  int gen = 0;
  while (pos < token.size() && std::isdigit(static_cast<unsigned char>(token[pos])))
    gen = gen * 10 + (token[pos++] - '0');
  if (gen < 1) throw std::invalid_argument("bad letter token: " + token);
  if (pos == token.size()) return {gen, 1};
  if (token.substr(pos) == "^-1") return {gen, -1};
  throw std::invalid_argument("bad letter token: " + token);
}

std::string to_string(const Word& w) {
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += to_token(w[i]);
  }
  return s;
}

Word parse_word(const std::string& text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    std::size_t j = i + 1;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    if (text.compare(j, 3, "^-1") == 0) j += 3;
    w.push_back(parse_token(text.substr(i, j - i)));
    i = j;
  }
  return w;
}

Presentation torus_presentation() {
  Presentation p;
  p.rank = 2;
  p.density = 0.01;
  p.seed = 0;
  p.relators.push_back(Relator{{Letter{1, 1}, Letter{2, 1}, Letter{1, -1}, Letter{2, -1}}});
  return p;
}

}  // namespace sqm
