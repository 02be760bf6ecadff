#include "frieze/ymap.hpp"

#include "frieze/coxeter.hpp"
#include "frieze/enumerator.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace frieze {

namespace {

struct PatternLess {
    bool operator()(const PeriodicPattern& a, const PeriodicPattern& b) const { return pattern_less(a, b); }
};

using PatternIndex = std::map<PeriodicPattern, std::size_t, PatternLess>;

PatternIndex index_of(const std::vector<PeriodicPattern>& patterns) {
    PatternIndex idx;
    for (std::size_t i = 0; i < patterns.size(); ++i) idx.emplace(patterns[i], i);
    return idx;
}

}  // namespace

PeriodicPattern apply_p(const PeriodicPattern& frieze) {
    if (frieze.kind() != PatternKind::Coxeter) throw std::invalid_argument("apply_p expects a Coxeter frieze");
    if (frieze.width() < 2) throw std::invalid_argument("apply_p needs width >= 2 (no second interior row)");
    const Row& second = frieze.row(frieze.interior_row(2));
    auto y = try_propagate_y(second, frieze.width());
    if (!y) throw MapFailure("image of the frieze does not close");
    if (!is_arithmetic(*y)) throw MapFailure("image of the frieze is not arithmetic");
    return std::move(*y);
}

std::vector<Orbit> orbit_decomposition(const std::vector<PeriodicPattern>& patterns) {
    const PatternIndex idx = index_of(patterns);
    std::vector<bool> seen(patterns.size(), false);
    std::vector<Orbit> orbits;
    for (std::size_t i = 0; i < patterns.size(); ++i) {
        if (seen[i]) continue;
        std::set<std::size_t> members{i};
        const int period = patterns[i].period();
        for (int s = 1; s < period; ++s) {
            auto it = idx.find(cyclic_shift(patterns[i], s));
            if (it != idx.end()) members.insert(it->second);
        }
        for (auto m : members) seen[m] = true;
        orbits.emplace_back(members.begin(), members.end());
    }
    std::stable_sort(orbits.begin(), orbits.end(),
                     [](const Orbit& a, const Orbit& b) { return a.size() > b.size(); });
    return orbits;
}

std::size_t FiberReport::max_fiber() const {
    return fiber_sizes.empty() ? 0 : *std::max_element(fiber_sizes.begin(), fiber_sizes.end());
}

std::string FiberReport::verdict() const {
    if (surjective && injective) return "bijective";
    if (surjective) return "surjective, not injective";
    if (injective) return "injective, not surjective";
    return "neither surjective nor injective";
}

FiberReport fiber_analysis(const std::vector<PeriodicPattern>& friezes, const std::vector<PeriodicPattern>& yfriezes) {
    FiberReport r;
    r.width = friezes.empty() ? (yfriezes.empty() ? 0 : yfriezes.front().width()) : friezes.front().width();
    r.frieze_count = friezes.size();
    r.yfrieze_count = yfriezes.size();
    r.fiber_sizes.assign(yfriezes.size(), 0);

    const PatternIndex idx = index_of(yfriezes);
    std::set<PeriodicPattern, PatternLess> image;
    for (const auto& f : friezes) {
        PeriodicPattern y = apply_p(f);
        auto it = idx.find(y);
        if (it == idx.end())
            ++r.mismatches;
        else
            ++r.fiber_sizes[it->second];
        image.insert(std::move(y));
    }
    r.image_size = image.size();
    r.injective = image.size() == friezes.size();
    r.surjective = std::all_of(r.fiber_sizes.begin(), r.fiber_sizes.end(), [](std::size_t s) { return s > 0; });
    return r;
}

std::vector<CorrespondenceRecord> correspondence_table(const std::vector<PeriodicPattern>& friezes,
                                                       const std::vector<PeriodicPattern>& yfriezes) {
    const PatternIndex idx = index_of(yfriezes);
    std::vector<CorrespondenceRecord> out;
    for (const auto& orbit : orbit_decomposition(friezes)) {
        const std::size_t rep = orbit.front();
        const PeriodicPattern y = apply_p(friezes[rep]);
        auto it = idx.find(y);
        if (it == idx.end()) throw MapFailure("image of frieze " + std::to_string(rep) + " is not in the Y catalog");
        out.push_back({rep, it->second, orbit.size(), static_cast<std::size_t>(intrinsic_period(y))});
    }
    return out;
}

bool has_complete_enumeration(int width) { return width >= 1 && width <= 4; }

std::vector<PeriodicPattern> yfrieze_catalog(int width, unsigned parallelism) {
    EnumerateOptions opts;
    opts.parallelism = parallelism;
    switch (width) {
        case 1: return enumerate_generic(1, SearchBox{{10}}, opts).patterns();
        // Every entry of a width-2 solution is at most 3, so this box is complete.
        case 2: return enumerate_generic(2, SearchBox{{30}}, opts).patterns();
        case 3: return enumerate_w3().patterns();
        case 4: return enumerate_w4(opts).patterns();
        default:
            throw std::invalid_argument("no complete Y-frieze enumeration for width " + std::to_string(width));
    }
}

FiberReport fiber_analysis(int width, unsigned parallelism) {
    return fiber_analysis(enumerate_frieze(width), yfrieze_catalog(width, parallelism));
}

std::vector<CorrespondenceRecord> correspondence_table(int width, unsigned parallelism) {
    return correspondence_table(enumerate_frieze(width), yfrieze_catalog(width, parallelism));
}

}  // namespace frieze
