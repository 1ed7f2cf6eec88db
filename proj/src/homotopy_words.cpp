#include "affinefloer/homotopy_words.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace affinefloer {

FreeWord word_alpha(std::int64_t exponent) {
  if (exponent == 0) return {};
  return {{{Generator::Alpha, exponent}}};
}

FreeWord word_beta(std::int64_t exponent) {
  if (exponent == 0) return {};
  return {{{Generator::Beta, exponent}}};
}

FreeWord concat(const FreeWord& lhs, const FreeWord& rhs) {
  FreeWord out = lhs;
  out.runs.insert(out.runs.end(), rhs.runs.begin(), rhs.runs.end());
  return out;
}

FreeWord inverse(const FreeWord& word) {
  FreeWord out;
  for (auto it = word.runs.rbegin(); it != word.runs.rend(); ++it) {
    out.runs.push_back({it->generator, -it->exponent});
  }
  return out;
}

FreeWord free_reduce(const FreeWord& word) {
  // adjacent runs of `out` always carry different generators
  FreeWord out;
  for (const auto& run : word.runs) {
    if (run.exponent == 0) continue;
    if (!out.runs.empty() && out.runs.back().generator == run.generator) {
      out.runs.back().exponent += run.exponent;
      if (out.runs.back().exponent == 0) out.runs.pop_back();
    } else {
      out.runs.push_back(run);
    }
  }
  return out;
}

bool is_trivial(const FreeWord& word) { return free_reduce(word).empty(); }

std::string to_string(const FreeWord& word) {
  if (word.runs.empty()) return "1";
  std::ostringstream out;
  for (std::size_t k = 0; k < word.runs.size(); ++k) {
    if (k) out << " ";
    out << (word.runs[k].generator == Generator::Alpha ? "a" : "b");
    if (word.runs[k].exponent != 1) out << "^" << word.runs[k].exponent;
  }
  return out.str();
}

std::int64_t output_depth(std::int64_t i, std::int64_t j, std::int64_t k, const DeltaSequence& delta) {
  std::int64_t h = i + j + k;
  for (std::size_t r = 0; r < delta.size(); ++r) h += static_cast<std::int64_t>(r) * delta[r];
  return h;
}

FreeWord triangle_word(std::int64_t i, std::int64_t j, std::int64_t h, std::int64_t k,
                       const DeltaSequence& delta) {
  if (k < 0 || delta.size() != static_cast<std::size_t>(k + 1)) {
    throw std::invalid_argument("delta must have k + 1 entries");
  }
  FreeWord word = word_alpha(i + j - h + k);
  for (std::int64_t r = 0; r <= k; ++r) {
    for (std::int64_t t = 0; t < std::abs(delta[r]); ++t) {
      if (delta[r] > 0) {
        if (r) word.runs.push_back({Generator::Alpha, r});
        word.runs.push_back({Generator::Beta, 1});
      } else {
        word.runs.push_back({Generator::Beta, -1});
        if (r) word.runs.push_back({Generator::Alpha, -r});
      }
    }
  }
  return word;
}

bool is_admissible(const DeltaSequence& delta) {
  std::int64_t last = -1;  // pretend a -1 precedes the sequence
  for (const auto v : delta) {
    if (v < -1 || v > 1) return false;
    if (v == 0) continue;
    if (v == last) return false;
    last = v;
  }
  return last == -1;
}

std::vector<DeltaSequence> enumerate_admissible(std::int64_t k) {
  if (k < 0 || k > 30) throw std::invalid_argument("k must lie in [0, 30]");
  std::vector<DeltaSequence> out;
  out.reserve(std::size_t{1} << k);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    DeltaSequence delta(k + 1);
    std::int64_t prev = 0;
    for (std::int64_t r = 0; r <= k; ++r) {
      const std::int64_t s = r < k ? static_cast<std::int64_t>((mask >> r) & 1) : 0;
      delta[r] = s - prev;
      prev = s;
    }
    out.push_back(std::move(delta));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DeltaSequence> brute_force_admissible(std::int64_t k, std::int64_t bound) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (bound < 1) throw std::invalid_argument("bound must be at least 1");
  std::vector<DeltaSequence> out;
  DeltaSequence delta(k + 1, -bound);
  while (true) {
    const auto h = output_depth(0, 0, k, delta);
    if (is_trivial(triangle_word(0, 0, h, k, delta))) out.push_back(delta);
    std::size_t pos = 0;
    while (pos < delta.size() && delta[pos] == bound) delta[pos++] = -bound;
    if (pos == delta.size()) break;
    ++delta[pos];
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t homotopy_count(std::int64_t k, std::int64_t i, std::int64_t j, std::int64_t h) {
  std::uint64_t count = 0;
  for (const auto& delta : enumerate_admissible(k)) {
    std::int64_t s = 0;
    std::int64_t s_sum = 0;
    for (std::int64_t r = 0; r < k; ++r) {
      s += delta[r];
      s_sum += s;
    }
    if (h - (i + j) == k - s_sum) ++count;
  }
  return count;
}

}  // namespace affinefloer
