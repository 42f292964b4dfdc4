#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace vdw {

/// Terms of z_1 = 6, z_{n+1} = z_n^2 / 4 + 1 and their squares.
///
/// The squares form an infinite walk through the perfect squares: every gap
/// z_{n+1}^2 - z_n^2 equals (z_n^2 / 4 - 1)^2.
struct WalkState {
    std::vector<mpz_class> terms;
    std::vector<mpz_class> squares;
};

/// Generates `count` terms and verifies every invariant in exact arithmetic
/// (throws std::logic_error on any violation).
WalkState square_walk(int count);

/// z_{n+1}^2 - z_n^2 for consecutive terms (n = 1 .. count-1).
std::vector<mpz_class> square_gaps(const WalkState& w);

/// Returns an empty string when every invariant holds, else the first failure.
std::string check_walk(const WalkState& w);

} // namespace vdw
