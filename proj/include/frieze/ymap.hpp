#pragma once

// The map p_n from Coxeter friezes to Y-friezes: the second interior row of a
// Coxeter frieze is the first row of its image.

#include "frieze/pattern.hpp"

#include <cstddef>
#include <stdexcept>
#include <vector>

namespace frieze {

class MapFailure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Requires a Coxeter pattern of width >= 2. Throws MapFailure when the image
/// does not close or is not arithmetic.
PeriodicPattern apply_p(const PeriodicPattern& frieze);

using Orbit = std::vector<std::size_t>;

/// Partition of `patterns` (indices) into cyclic-shift orbits. Orbits are
/// listed by descending size, ties by smallest member; members ascending.
std::vector<Orbit> orbit_decomposition(const std::vector<PeriodicPattern>& patterns);

struct FiberReport {
    int width = 0;
    std::size_t frieze_count = 0;
    std::size_t yfrieze_count = 0;
    /// Fiber size of each Y pattern, in the order given.
    std::vector<std::size_t> fiber_sizes;
    std::size_t image_size = 0;
    /// Images that are not in the supplied Y list.
    std::size_t mismatches = 0;
    bool surjective = false;
    bool injective = false;

    std::size_t max_fiber() const;
    /// "bijective", "surjective, not injective", "injective, not surjective" or
    /// "neither surjective nor injective".
    std::string verdict() const;
};

FiberReport fiber_analysis(const std::vector<PeriodicPattern>& friezes, const std::vector<PeriodicPattern>& yfriezes);

struct CorrespondenceRecord {
    std::size_t frieze_id;   // index of the orbit representative in the frieze list
    std::size_t yfrieze_id;  // index of the image in the Y list
    std::size_t frieze_orbit_size;
    std::size_t y_orbit_size;
    friend bool operator==(const CorrespondenceRecord&, const CorrespondenceRecord&) = default;
};

/// One record per frieze orbit, in orbit_decomposition order.
std::vector<CorrespondenceRecord> correspondence_table(const std::vector<PeriodicPattern>& friezes,
                                                       const std::vector<PeriodicPattern>& yfriezes);

/// Frieze(n) and YFrieze(n) for the widths with a complete enumeration
/// (1 and 2 by bounded first-row search, 3 and 4 by the closed forms).
bool has_complete_enumeration(int width);
std::vector<PeriodicPattern> yfrieze_catalog(int width, unsigned parallelism = 1);

FiberReport fiber_analysis(int width, unsigned parallelism = 1);
std::vector<CorrespondenceRecord> correspondence_table(int width, unsigned parallelism = 1);

}  // namespace frieze
