#pragma once

// Exhaustive enumeration of arithmetic Y-frieze patterns.

#include "frieze/closed_form.hpp"
#include "frieze/pattern.hpp"

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace frieze {

struct Solution {
    FirstDiagonal diagonal;
    /// Glide-domain entries read column by column (a, b, c, d, ...).
    std::vector<Rational> tuple;
};

/// Solutions sorted by first diagonal, without duplicates.
struct SolutionSet {
    int width = 0;
    std::vector<Solution> solutions;

    std::size_t size() const { return solutions.size(); }
    std::vector<FirstDiagonal> diagonals() const;
    /// Expanded Y patterns, in solution order.
    std::vector<PeriodicPattern> patterns() const;
};

class BoxTooLarge : public std::runtime_error {
public:
    BoxTooLarge(std::uint64_t candidates, std::uint64_t ceiling);
    std::uint64_t candidates;
    std::uint64_t ceiling;
};

inline constexpr std::uint64_t kDefaultMaxCandidates = 1'000'000'000;

/// kDefaultMaxCandidates unless FRIEZE_MAX_CANDIDATES holds a positive integer.
std::uint64_t max_candidates_from_env();

struct EnumerateOptions {
    unsigned parallelism = 1;
    std::uint64_t max_candidates = kDefaultMaxCandidates;
};

SolutionSet enumerate_w3();
SolutionSet enumerate_w4(const EnumerateOptions& opts = {});

/// Searches first rows (period width+3) inside `box` for closed arithmetic Y-friezes.
/// A box with a single bound applies it to every position.
/// Throws BoxTooLarge when the box volume exceeds opts.max_candidates.
SolutionSet enumerate_generic(int width, const SearchBox& box, const EnumerateOptions& opts = {});

/// Unpruned brute force over [1, bound]^width first diagonals.
SolutionSet oracle_box_check(int width, std::int64_t bound);

/// Builds the Y pattern whose first diagonal is `diag` by sweeping columns
/// left to right with E = (1+N)(1+S)/W. Empty if a division by zero occurs or
/// the columns fail to repeat after one period.
std::optional<PeriodicPattern> pattern_from_diagonal(std::span<const Rational> diag);

/// The first-row box implied by the width-3 search boxes (every first-row
/// entry is the leading diagonal entry of some cyclic shift).
SearchBox w3_first_row_box();

}  // namespace frieze
