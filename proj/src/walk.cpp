#include "vdw/walk.hpp"

#include <stdexcept>
#include <string>

namespace vdw {

WalkState square_walk(int count)
{
    if (count < 1) throw std::invalid_argument("square_walk: count must be >= 1");
    WalkState w;
    w.terms.reserve(static_cast<std::size_t>(count));
    mpz_class z = 6;
    for (int n = 0; n < count; ++n) {
        mpz_class sq = z * z;
        w.terms.push_back(z);
        w.squares.push_back(sq);
        if (n + 1 < count) z = sq / 4 + 1;
    }
    if (auto err = check_walk(w); !err.empty()) throw std::logic_error("square_walk: " + err);
    return w;
}

std::vector<mpz_class> square_gaps(const WalkState& w)
{
    std::vector<mpz_class> gaps;
    for (std::size_t i = 1; i < w.squares.size(); ++i) gaps.push_back(w.squares[i] - w.squares[i - 1]);
    return gaps;
}

std::string check_walk(const WalkState& w)
{
    if (w.terms.empty() || w.terms.size() != w.squares.size()) return "malformed walk";
    if (w.terms[0] != 6) return "z_1 != 6";
    for (std::size_t i = 0; i < w.terms.size(); ++i) {
        const auto n = std::to_string(i + 1);
        const mpz_class& z = w.terms[i];
        if (w.squares[i] != z * z) return "stored square of z_" + n + " is wrong";
        if (mpz_fdiv_ui(z.get_mpz_t(), 4) != 2) return "z_" + n + " is not 2 mod 4";
        if (mpz_divisible_ui_p(w.squares[i].get_mpz_t(), 4) == 0) return "z_" + n + "^2 / 4 is not exact";
        if (i + 1 < w.terms.size()) {
            const mpz_class quarter = w.squares[i] / 4;
            if (w.terms[i + 1] != quarter + 1) return "recursion fails at z_" + std::to_string(i + 2);
            const mpz_class gap = w.squares[i + 1] - w.squares[i];
            const mpz_class root = quarter - 1;
            if (gap != root * root) return "gap after z_" + n + " differs from (z^2/4 - 1)^2";
            if (mpz_perfect_square_p(gap.get_mpz_t()) == 0) return "gap after z_" + n + " is not a perfect square";
        }
    }
    return {};
}

} // namespace vdw
