#include "frieze/enumerator.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <thread>

namespace frieze {

BoxTooLarge::BoxTooLarge(std::uint64_t n, std::uint64_t c)
    : std::runtime_error("search box has " + std::to_string(n) + " candidates, ceiling is " + std::to_string(c)),
      candidates(n), ceiling(c) {}

std::uint64_t max_candidates_from_env() {
    const char* raw = std::getenv("FRIEZE_MAX_CANDIDATES");
    if (raw == nullptr || *raw == '\0') return kDefaultMaxCandidates;
    char* end = nullptr;
    const unsigned long long v = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || v == 0) return kDefaultMaxCandidates;
    return v;
}

std::vector<FirstDiagonal> SolutionSet::diagonals() const {
    std::vector<FirstDiagonal> out;
    out.reserve(solutions.size());
    for (const auto& s : solutions) out.push_back(s.diagonal);
    return out;
}

std::vector<PeriodicPattern> SolutionSet::patterns() const {
    std::vector<PeriodicPattern> out;
    out.reserve(solutions.size());
    for (const auto& s : solutions)
        out.push_back(expand_domain(FundamentalDomain::from_column_major(width, s.tuple), PatternKind::Y));
    return out;
}

namespace {

using Point = std::vector<std::int64_t>;

bool all_positive_integers(std::span<const Rational> xs) {
    return std::all_of(xs.begin(), xs.end(), [](const Rational& x) { return x.is_positive_integer(); });
}

Solution solution_from_pattern(const PeriodicPattern& p) {
    std::vector<std::int64_t> diag;
    for (const auto& x : first_diagonal(p)) {
        auto v = x.to_int64();
        if (!v) throw std::overflow_error("diagonal entry does not fit in 64 bits: " + x.str());
        diag.push_back(*v);
    }
    return Solution{FirstDiagonal(std::move(diag)), domain_of(p).column_major()};
}

SolutionSet make_set(int width, const std::set<Point>& diagonals, FundamentalDomain (*domain)(const FirstDiagonal&)) {
    SolutionSet out;
    out.width = width;
    for (const auto& d : diagonals) {
        FirstDiagonal diag(d);
        out.solutions.push_back(Solution{diag, domain(diag).column_major()});
    }
    return out;
}

unsigned worker_count(unsigned requested) { return std::max(1u, requested); }

// Runs task(i) for i in [0, count) on `workers` threads.
template <class Task>
void parallel_for(std::size_t count, unsigned workers, Task&& task) {
    if (workers <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) task(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < std::min<std::size_t>(workers, count); ++w)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < count; i = next++) task(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace

SolutionSet enumerate_w3() {
    std::set<Point> found;
    for (const auto& box : w3_boxes()) {
        for (std::int64_t a = 1; a <= box.upper[0]; ++a)
            for (std::int64_t b = 1; b <= box.upper[1]; ++b)
                for (std::int64_t c = 1; c <= box.upper[2]; ++c) {
                    const auto x = w3_entries(FirstDiagonal({a, b, c}));
                    const Rational entries[] = {x.d, x.e, x.f, x.g, x.h, x.i};
                    if (all_positive_integers(entries)) found.insert({a, b, c});
                }
    }
    return make_set(3, found, &w3_domain);
}

namespace {

// Scans one (box, a) slice of the width-4 search, cheapest divisibility first.
void scan_w4_slice(const SearchBox& box, std::int64_t a, std::vector<Point>& out) {
    for (std::int64_t b = 1; b <= box.upper[1]; ++b) {
        if ((b + 1) % a != 0) continue;  // e
        const std::int64_t ab = a * b;
        for (std::int64_t c = 1; c <= box.upper[2]; ++c) {
            if (((c + 1) * (a + b + 1)) % ab != 0) continue;  // f
            const std::int64_t s_abc = a * b + a * c + b * c + a + b + c + 1;
            if (s_abc % (b * (b + 1)) != 0) continue;  // i
            const std::int64_t abc = ab * c;
            for (std::int64_t d = 1; d <= box.upper[3]; ++d) {
                if ((c + 1) % d != 0) continue;                  // n
                if (((d + 1) * s_abc) % abc != 0) continue;      // g
                const std::int64_t s_bcd = b * c + b * d + c * d + b + c + d + 1;
                if (s_bcd % (c * (c + 1)) != 0) continue;        // l
                if (((b + 1) * (c + d + 1)) % (c * d) != 0) continue;  // m
                if (((a + 1) * s_bcd) % (b * c * d) != 0) continue;    // k
                const std::int64_t p4 = (a + 1) * (b + 1) * (c + 1) * (d + 1) - abc * d;
                if (p4 % (abc * d) != 0) continue;               // h
                if (((b + c + 1) * p4) % (b * (b + 1) * c * (c + 1)) != 0) continue;  // j
                const auto x = w4_entries(FirstDiagonal({a, b, c, d}));
                const Rational entries[] = {x.e, x.f, x.g, x.h, x.i, x.j, x.k, x.l, x.m, x.n};
                if (all_positive_integers(entries)) out.push_back({a, b, c, d});
            }
        }
    }
}

}  // namespace

SolutionSet enumerate_w4(const EnumerateOptions& opts) {
    std::vector<std::pair<SearchBox, std::int64_t>> slices;
    for (const auto& box : w4_boxes())
        for (std::int64_t a = 1; a <= box.upper[0]; ++a) slices.emplace_back(box, a);

    std::vector<std::vector<Point>> partial(slices.size());
    parallel_for(slices.size(), worker_count(opts.parallelism),
                 [&](std::size_t i) { scan_w4_slice(slices[i].first, slices[i].second, partial[i]); });

    std::set<Point> found;
    for (const auto& part : partial) found.insert(part.begin(), part.end());
    return make_set(4, found, &w4_domain);
}

namespace {

// Depth-first search over first-row values. Each newly assigned value fixes a
// diagonal of entries below it; a prefix is abandoned as soon as one of them is
// not a positive integer (or, on the closing row, not zero).
class FirstRowSearch {
public:
    FirstRowSearch(int width, std::vector<std::int64_t> upper)
        : n_(width), p_(width + 3), upper_(std::move(upper)),
          grid_(static_cast<std::size_t>(width + 2), std::vector<std::int64_t>(static_cast<std::size_t>(width + 3))) {}

    void run_from(std::int64_t first_value) {
        grid_[1][0] = first_value;
        if (fill_column(0) == Status::Overflow)
            exact_subtree(1);
        else
            descend(1);
    }

    std::vector<PeriodicPattern> take_found() { return std::move(found_); }

private:
    enum class Status { Ok, Reject, Overflow };

    Status compute(int m, int k) {
        const auto k1 = static_cast<std::size_t>((k + 1) % p_);
        const auto kk = static_cast<std::size_t>(k);
        const __int128 prod = static_cast<__int128>(grid_[m - 1][kk]) * grid_[m - 1][k1];
        const __int128 den = static_cast<__int128>(grid_[m - 2][k1]) + 1;
        if (prod % den != 0) return Status::Reject;
        const __int128 s = prod / den - 1;
        if (m <= n_ ? s < 1 : s != 0) return Status::Reject;
        if (s > std::numeric_limits<std::int64_t>::max()) return Status::Overflow;
        grid_[m][kk] = static_cast<std::int64_t>(s);
        return Status::Ok;
    }

    // Entries made computable by assigning first-row column j (no wraparound).
    Status fill_column(int j) {
        for (int m = 2; m <= n_ + 1 && j - m + 1 >= 0; ++m) {
            const Status st = compute(m, j - m + 1);
            if (st != Status::Ok) return st;
        }
        return Status::Ok;
    }

    // Entries whose dependencies wrap past the last column.
    Status fill_wrap() {
        for (int m = 2; m <= n_ + 1; ++m)
            for (int k = std::max(0, p_ - m + 1); k < p_; ++k) {
                const Status st = compute(m, k);
                if (st != Status::Ok) return st;
            }
        return Status::Ok;
    }

    void descend(int j) {
        if (j == p_) {
            const Status st = fill_wrap();
            if (st == Status::Ok)
                confirm();
            else if (st == Status::Overflow)
                confirm();
            return;
        }
        for (std::int64_t v = 1; v <= upper_[static_cast<std::size_t>(j)]; ++v) {
            grid_[1][static_cast<std::size_t>(j)] = v;
            const Status st = fill_column(j);
            if (st == Status::Ok)
                descend(j + 1);
            else if (st == Status::Overflow)
                exact_subtree(j + 1);
        }
    }

    // Fast path could not decide; test every completion with exact arithmetic.
    void exact_subtree(int j) {
        if (j == p_) {
            confirm();
            return;
        }
        for (std::int64_t v = 1; v <= upper_[static_cast<std::size_t>(j)]; ++v) {
            grid_[1][static_cast<std::size_t>(j)] = v;
            exact_subtree(j + 1);
        }
    }

    void confirm() {
        Row first;
        first.reserve(static_cast<std::size_t>(p_));
        for (auto v : grid_[1]) first.emplace_back(v);
        auto p = try_propagate_y(first, n_);
        if (p && is_arithmetic(*p)) found_.push_back(std::move(*p));
    }

    int n_;
    int p_;
    std::vector<std::int64_t> upper_;
    std::vector<std::vector<std::int64_t>> grid_;
    std::vector<PeriodicPattern> found_;
};

SolutionSet collect(int width, std::vector<PeriodicPattern> patterns) {
    std::map<FirstDiagonal, Solution> unique;
    for (const auto& p : patterns) {
        Solution s = solution_from_pattern(p);
        unique.emplace(s.diagonal, std::move(s));
    }
    SolutionSet out;
    out.width = width;
    for (auto& [_, s] : unique) out.solutions.push_back(std::move(s));
    return out;
}

}  // namespace

SolutionSet enumerate_generic(int width, const SearchBox& box, const EnumerateOptions& opts) {
    if (width < 1) throw std::invalid_argument("width must be at least 1");
    const auto period = static_cast<std::size_t>(width + 3);
    std::vector<std::int64_t> upper = box.upper;
    if (upper.size() == 1) upper.assign(period, upper.front());
    if (upper.size() != period)
        throw std::invalid_argument("search box needs 1 or " + std::to_string(period) + " bounds for width " +
                                    std::to_string(width));
    for (auto u : upper)
        if (u < 1) throw std::invalid_argument("search bounds must be >= 1");

    const std::uint64_t volume = SearchBox{upper}.volume();
    if (volume > opts.max_candidates) throw BoxTooLarge(volume, opts.max_candidates);

    const auto first_count = static_cast<std::size_t>(upper.front());
    std::vector<std::vector<PeriodicPattern>> partial(first_count);
    parallel_for(first_count, worker_count(opts.parallelism), [&](std::size_t i) {
        FirstRowSearch search(width, upper);
        search.run_from(static_cast<std::int64_t>(i) + 1);
        partial[i] = search.take_found();
    });

    std::vector<PeriodicPattern> all;
    for (auto& part : partial)
        for (auto& p : part) all.push_back(std::move(p));
    return collect(width, std::move(all));
}

std::optional<PeriodicPattern> pattern_from_diagonal(std::span<const Rational> diag) {
    const int n = static_cast<int>(diag.size());
    if (n < 1) throw std::invalid_argument("diagonal must not be empty");
    const int p = n + 3;
    // One extra column to compare against column 0.
    std::vector<Row> grid(static_cast<std::size_t>(n + 2), Row(static_cast<std::size_t>(p + 1), Rational(0)));
    for (int m = 1; m <= n; ++m) grid[static_cast<std::size_t>(m)][0] = diag[static_cast<std::size_t>(m - 1)];
    for (int k = 0; k < p; ++k) {
        for (int m = 1; m <= n; ++m) {
            const auto mm = static_cast<std::size_t>(m);
            const auto kk = static_cast<std::size_t>(k);
            const Rational& w = grid[mm][kk];
            if (w.is_zero()) return std::nullopt;
            grid[mm][kk + 1] = y_east(w, grid[mm - 1][kk + 1], grid[mm + 1][kk]);
        }
    }
    for (auto& r : grid) {
        if (r[static_cast<std::size_t>(p)] != r[0]) return std::nullopt;
        r.pop_back();
    }
    return PeriodicPattern(PatternKind::Y, n, std::move(grid));
}

namespace {

// Column sweep of pattern_from_diagonal that stops at the first entry that is
// not a positive integer. Only survivors are rebuilt in full.
bool sweep_is_arithmetic(std::span<const Rational> diag, std::vector<Row>& grid) {
    const int n = static_cast<int>(diag.size());
    const int p = n + 3;
    for (int m = 1; m <= n; ++m) grid[static_cast<std::size_t>(m)][0] = diag[static_cast<std::size_t>(m - 1)];
    for (int k = 0; k + 1 < p; ++k) {
        for (int m = 1; m <= n; ++m) {
            const auto mm = static_cast<std::size_t>(m);
            const auto kk = static_cast<std::size_t>(k);
            Rational& e = grid[mm][kk + 1];
            e = y_east(grid[mm][kk], grid[mm - 1][kk + 1], grid[mm + 1][kk]);
            if (!e.is_positive_integer()) return false;
        }
    }
    return true;
}

}  // namespace

SolutionSet oracle_box_check(int width, std::int64_t bound) {
    if (width < 1 || bound < 1) throw std::invalid_argument("oracle needs width >= 1 and bound >= 1");
    std::vector<PeriodicPattern> hits;
    std::vector<std::int64_t> diag(static_cast<std::size_t>(width), 1);
    Row values(static_cast<std::size_t>(width));
    std::vector<Row> grid(static_cast<std::size_t>(width + 2), Row(static_cast<std::size_t>(width + 3), Rational(0)));
    while (true) {
        for (std::size_t i = 0; i < diag.size(); ++i) values[i] = Rational(diag[i]);
        if (sweep_is_arithmetic(values, grid)) {
            auto p = pattern_from_diagonal(values);
            if (p && is_arithmetic(*p)) hits.push_back(std::move(*p));
        }

        std::size_t i = diag.size();
        while (i > 0 && diag[i - 1] == bound) diag[--i] = 1;
        if (i == 0) break;
        ++diag[i - 1];
    }
    return collect(width, std::move(hits));
}

SearchBox w3_first_row_box() {
    std::int64_t bound = 1;
    for (const auto& b : w3_boxes()) bound = std::max(bound, b.upper.front());
    return SearchBox{{bound}};
}

}  // namespace frieze
