#pragma once

#include "gcensus/index_codec.hpp"
#include "gcensus/permutation.hpp"

#include <cstdint>

namespace gcensus::oracle {

// Definition-literal ground truth for small n, used to validate the census
// engine. Deliberately shares nothing with the engine beyond the index
// codec: permutations act on explicit edge sets and every group is found by
// scanning all n! candidates. No pruning, no cleverness.

labelled_graph apply_permutation(const permutation& a, const labelled_graph& g);

// |{a : aG = G}| by scanning all n! permutations. Guarded to n <= 8.
std::uint64_t aut_order_bruteforce(const labelled_graph& g);

// All a with aG = complement(G); empty iff g is not self-complementary.
// Guarded to n <= 8.
std::vector<permutation> sc_witnesses_bruteforce(const labelled_graph& g);

// Checks that a^-1 * {witnesses} equals the automorphism set, for every
// witness a. Throws std::invalid_argument when g is not self-complementary.
bool verify_coset_theorem(const labelled_graph& g);

struct oracle_record {
  std::uint64_t aut_order = 0;
  std::vector<permutation> sc_witnesses;
};

// One record per index 0 .. 2^lambda - 1 (vector position = index).
// Guarded to n <= 5.
std::vector<oracle_record> full_oracle_census(order n);

}  // namespace gcensus::oracle
