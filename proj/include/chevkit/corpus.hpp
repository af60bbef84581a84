#pragma once

#include <cstdint>
#include <string>

#include "chevkit/report.hpp"

namespace chevkit {

inline constexpr uint64_t kDefaultSeed = 20240607;

CheckRecord check_magic_words();
CheckRecord check_psi_systems();
CheckRecord check_reflection_products();
CheckRecord check_lengths();
/// Bruhat-cell triggers of the E7;3 reduction, over F5.
CheckRecord check_e73_cells(uint64_t seed, int samples = 5);
/// Fixed chambers g1, g2, the two normal forms and the A1^3 residue test, over F7.
CheckRecord check_e73_chambers(uint64_t seed, int samples = 15);
/// The nine forcing conditions of the E7;4 reduction, over F5.
CheckRecord check_e74_forcing(uint64_t seed, int samples = 3);
CheckRecord check_charpoly(uint64_t seed, int n101 = 100, int n5 = 20);
CheckRecord check_classification(uint64_t seed, int per_branch = 50);
CheckRecord check_orbit_counts(int kmax = 4);
CheckRecord check_e8_arithmetic();

std::vector<std::string> corpus_suites();
/// "e7-chamber": every check above. "quick": root data only.
Report verify_paper_corpus(const std::string& suite = "e7-chamber", uint64_t seed = kDefaultSeed);

}  // namespace chevkit
