#pragma once

#include <map>
#include <string>
#include <vector>

#include "groundedq/series.hpp"

namespace gq {

// Binary words are plain strings over '0'/'1', position 1 leftmost.
using Word = std::string;

bool is_binary_word(const Word& w);
int count_ones(const Word& w);
int maj(const Word& w);   // sum of i with w_i = 1, w_{i+1} = 0
int mmaj(const Word& w);  // maj(w + "0")
bool is_yamanouchi(const Word& w);

// All words with n zeros and k ones in lexicographic order, optionally only
// the Yamanouchi ones.
std::vector<Word> enumerate_words(int n, int k, bool yamanouchi_only);

// Generating functions sum q^{stat(w)}; order is the largest possible value.
Series mmaj_gf(int n, int k, bool yamanouchi_only);
Series maj_gf(int n, int k, bool yamanouchi_only);

// Lattice-path surgery: 0 is an up step, 1 a right step. The right step into
// the first point of maximal excess (#1 - #0) becomes an up step.
Word fh_map(const Word& w);

struct FhReport {
    int n = 0, k = 0;
    bool injective = false;
    bool surjective = false;
    std::size_t domain = 0, codomain = 0;
    std::map<int, int> mmaj_shift;  // mmaj(fh(w)) - mmaj(w) -> count
};

// Checks the map L(n,k) \ Y(n,k) -> L(n+1,k-1) for a single (n,k).
FhReport check_fh(int n, int k);

}  // namespace gq
