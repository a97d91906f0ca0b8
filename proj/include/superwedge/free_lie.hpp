#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superwedge/superalgebra.hpp"

namespace superwedge {

using Word = std::vector<std::uint8_t>;

// Free Lie superalgebra on p even and q odd letters, truncated at class c.
// The basis is the standard bracketings of Lyndon words (even letters ordered
// before odd ones) together with the squares [u,u] of odd Lyndon words u.
struct FreeNilpotentSuper {
    std::size_t even_generators = 0;
    std::size_t odd_generators = 0;
    std::size_t nilpotency_class = 0;
    SuperAlgebra algebra;
    std::vector<Word> words;  // underlying word per basis element; u·u for squares
    std::vector<std::size_t> degree;
    // Left and right factor of each bracketed basis element; nullopt for letters.
    std::vector<std::optional<std::pair<std::size_t, std::size_t>>> factors;
    std::vector<std::size_t> generator_index;  // basis index of each letter
};

constexpr std::size_t kMaxFreeClass = 6;

// Throws std::invalid_argument when p + q = 0 or c is outside [1, kMaxFreeClass].
FreeNilpotentSuper free_nilpotent_super(std::size_t p, std::size_t q, std::size_t c,
                                        std::vector<std::string> letter_names = {});

// Lyndon words of length at most n over {0, ..., k-1}, in lexicographic order.
std::vector<Word> lyndon_words(std::size_t k, std::size_t n);
bool is_lyndon(const Word& w);

}  // namespace superwedge
