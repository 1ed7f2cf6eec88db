#pragma once

// Homotopy classes of triangles as words in the free group on alpha (the loop
// around the base annulus) and beta (the loop around a critical value):
//
//   alpha^{i+j-h+k} prod_{r=0}^{k} (alpha^r beta)^{delta_r}
//
// A class bounds a triangle exactly when this word is trivial.

#include <cstdint>
#include <string>
#include <vector>

namespace affinefloer {

enum class Generator { Alpha, Beta };

struct Run {
  Generator generator;
  std::int64_t exponent;  // nonzero

  friend bool operator==(const Run&, const Run&) = default;
};

/// Run-length word; not necessarily reduced.
struct FreeWord {
  std::vector<Run> runs;

  bool empty() const { return runs.empty(); }
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

FreeWord word_alpha(std::int64_t exponent);
FreeWord word_beta(std::int64_t exponent);
FreeWord concat(const FreeWord& lhs, const FreeWord& rhs);
FreeWord inverse(const FreeWord& word);

/// Merges equal neighbours and drops zero runs until adjacent runs differ.
FreeWord free_reduce(const FreeWord& word);
bool is_trivial(const FreeWord& word);

std::string to_string(const FreeWord& word);

using DeltaSequence = std::vector<std::int64_t>;

/// h forced by the alpha exponent sum vanishing: i + j + k + sum r delta_r.
std::int64_t output_depth(std::int64_t i, std::int64_t j, std::int64_t k, const DeltaSequence& delta);

/// Unreduced word. Throws std::invalid_argument unless delta has k + 1 entries.
FreeWord triangle_word(std::int64_t i, std::int64_t j, std::int64_t h, std::int64_t k,
                       const DeltaSequence& delta);

/// Entries in {-1, 0, 1}, nonzero entries alternate, first nonzero is +1 and
/// last nonzero is -1.
bool is_admissible(const DeltaSequence& delta);

/// delta_r = s_r - s_{r-1} over s in {0,1}^k with s_{-1} = s_k = 0; sorted.
/// Throws std::invalid_argument for k < 0 or k > 30.
std::vector<DeltaSequence> enumerate_admissible(std::int64_t k);

/// All delta in [-bound, bound]^{k+1} whose triangle word with h from
/// output_depth reduces to the identity; sorted.
std::vector<DeltaSequence> brute_force_admissible(std::int64_t k, std::int64_t bound);

/// Number of admissible classes with h - (i + j) = k - sum s_r.
std::uint64_t homotopy_count(std::int64_t k, std::int64_t i, std::int64_t j, std::int64_t h);

}  // namespace affinefloer
