#include "slcone/hl_torus.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <map>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>

#include "slcone/checked.hpp"
#include "slcone/errors.hpp"

// Spectrum of the flat (m-1)-torus link by lattice enumeration.
//
// Writing Q(n) = m*sum(n_i^2) - (sum(n_i))^2 over n in Z^(m-1), the
// algebraic identity
//
//     Q(n) = sum_i n_i^2 + sum_{i<j} (n_i - n_j)^2
//
// shows Q is positive definite and dominates the Euclidean norm, so
// every n with Q(n) <= L satisfies sum(n_i^2) <= L. The walk below is a
// depth-first scan over coordinates inside that Euclidean ball,
// strengthened by the same identity applied to prefixes: for the first
// k coordinates,
//
//     Q_k(n) = (k+1)*sum_k(n_i^2) - (sum_k(n_i))^2
//
// collects exactly the identity terms involving placed coordinates, so
// Q(n) >= Q_k(n) for every completion and a prefix with Q_k > L can be
// cut. At full depth k = m-1 the prefix value Q_{m-1} is Q itself.

namespace slcone {

namespace {

constexpr std::uint64_t kCountFlushStride = 1 << 14;

std::int64_t isqrt_floor(std::int64_t v) {
    std::int64_t r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && checked_mul(r, r) > v)
        --r;
    while (checked_mul(r + 1, r + 1) <= v)
        ++r;
    return r;
}

// Shared between workers: a running node count against the cap and an
// abort latch. The count only ever grows, so whether the cap trips is
// independent of scheduling.
struct EnumerationBudget {
    explicit EnumerationBudget(std::uint64_t cap) : cap(cap) {}

    void charge(std::uint64_t nodes) {
        if (visited.fetch_add(nodes, std::memory_order_relaxed) + nodes > cap)
            exceeded.store(true, std::memory_order_relaxed);
    }
    bool tripped() const { return exceeded.load(std::memory_order_relaxed); }

    const std::uint64_t cap;
    std::atomic<std::uint64_t> visited{0};
    std::atomic<bool> exceeded{false};
};

struct LatticeWalk {
    int dims;             // m - 1 coordinates
    std::int64_t budget;  // lambda_max
    std::int64_t radius;  // floor(sqrt(budget)), per-coordinate range
    EnumerationBudget* accounting;

    std::uint64_t local_nodes = 0;

    // Visitor is called once per completed vector with (coords, Q).
    template <typename Visitor>
    void run(std::int64_t first, Visitor&& visit) {
        std::vector<std::int64_t> coords(static_cast<std::size_t>(dims), 0);
        coords[0] = first;
        const std::int64_t s2 = checked_mul(first, first);
        if (s2 > budget)
            return;
        if (prefix_form(1, first, s2) > budget)
            return;
        charge_node();
        descend(1, first, s2, coords, visit);
        flush_charges();
    }

private:
    // Q_k for a k-coordinate prefix with running sums s1, s2.
    std::int64_t prefix_form(int k, std::int64_t s1, std::int64_t s2) const {
        return checked_sub(checked_mul(k + 1, s2), checked_mul(s1, s1));
    }

    void charge_node() {
        if (++local_nodes >= kCountFlushStride)
            flush_charges();
    }

    void flush_charges() {
        if (local_nodes == 0)
            return;
        accounting->charge(local_nodes);
        local_nodes = 0;
        if (accounting->tripped())
            throw ResourceLimit(
                "lattice enumeration exceeded max_points = " +
                std::to_string(accounting->cap) +
                "; raise the cap or lower lambda_max");
    }

    template <typename Visitor>
    void descend(int level, std::int64_t s1, std::int64_t s2,
                 std::vector<std::int64_t>& coords, Visitor&& visit) {
        if (level == dims) {
            // prefix form at full depth equals Q, already <= budget
            visit(coords, prefix_form(dims, s1, s2));
            return;
        }
        for (std::int64_t t = -radius; t <= radius; ++t) {
            const std::int64_t s2_next = checked_add(s2, checked_mul(t, t));
            if (s2_next > budget)
                continue;
            const std::int64_t s1_next = checked_add(s1, t);
            if (prefix_form(level + 1, s1_next, s2_next) > budget)
                continue;
            charge_node();
            coords[static_cast<std::size_t>(level)] = t;
            descend(level + 1, s1_next, s2_next, coords, visit);
        }
        coords[static_cast<std::size_t>(level)] = 0;
    }
};

int resolve_threads(const EnumerationOptions& opts) {
    if (opts.threads < 0 || opts.threads > 1024)
        throw ConfigError("threads: must lie in [0, 1024]");
    if (opts.threads != 0)
        return opts.threads;
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

void validate_inputs(int m, std::int64_t lambda_max, const EnumerationOptions& opts) {
    if (m < 3)
        throw ConfigError("m: must be >= 3");
    if (lambda_max < 0)
        throw ConfigError("lambda_max: must be >= 0");
    if (opts.max_points == 0)
        throw ConfigError("max_points: must be positive");
}

// Histogram of Q over all lattice vectors with Q <= lambda_max,
// partitioned across workers by the first coordinate. Partial
// histograms merge by addition, so the result does not depend on the
// partition.
std::map<std::int64_t, std::int64_t> enumerate_histogram(
    int m, std::int64_t lambda_max, const EnumerationOptions& opts) {
    const int dims = m - 1;
    const std::int64_t radius = isqrt_floor(lambda_max);
    EnumerationBudget accounting(opts.max_points);

    const int threads =
        std::min<int>(resolve_threads(opts), static_cast<int>(2 * radius + 1));
    std::vector<std::map<std::int64_t, std::int64_t>> partial(
        static_cast<std::size_t>(std::max(threads, 1)));
    std::vector<std::exception_ptr> failures(partial.size());

    auto worker = [&](int slot) {
        try {
            LatticeWalk walk{dims, lambda_max, radius, &accounting};
            auto& hist = partial[static_cast<std::size_t>(slot)];
            for (std::int64_t first = -radius + slot; first <= radius;
                 first += std::max(threads, 1)) {
                walk.run(first, [&hist](const std::vector<std::int64_t>&,
                                        std::int64_t q) { ++hist[q]; });
            }
        } catch (...) {
            failures[static_cast<std::size_t>(slot)] = std::current_exception();
        }
    };

    if (threads <= 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int slot = 0; slot < threads; ++slot)
            pool.emplace_back(worker, slot);
        for (auto& th : pool)
            th.join();
    }
    for (const auto& failure : failures)
        if (failure)
            std::rethrow_exception(failure);

    std::map<std::int64_t, std::int64_t> merged;
    for (const auto& hist : partial)
        for (const auto& [q, count] : hist)
            merged[q] = checked_add(merged[q], count);
    return merged;
}

} // namespace

std::int64_t hl_eigenvalue(int m, std::span<const std::int64_t> n) {
    if (m < 3)
        throw ConfigError("m: must be >= 3");
    if (n.size() != static_cast<std::size_t>(m - 1))
        throw ConfigError("lattice vector: expected " + std::to_string(m - 1) +
                          " coordinates, got " + std::to_string(n.size()));
    std::int64_t s1 = 0;
    std::int64_t s2 = 0;
    for (const std::int64_t c : n) {
        s1 = checked_add(s1, c);
        s2 = checked_add(s2, checked_mul(c, c));
    }
    return checked_sub(checked_mul(m, s2), checked_mul(s1, s1));
}

LinkSpectrum hl_link_spectrum(int m, std::int64_t lambda_max,
                              const EnumerationOptions& opts) {
    validate_inputs(m, lambda_max, opts);
    const auto histogram = enumerate_histogram(m, lambda_max, opts);
    std::vector<SpectrumEntry> entries;
    entries.reserve(histogram.size());
    for (const auto& [q, count] : histogram)
        entries.push_back({Rational(q), count});
    return LinkSpectrum(m, Rational(lambda_max), std::move(entries));
}

std::vector<std::vector<std::int64_t>> hl_eigenvectors(
    int m, std::int64_t lambda, const EnumerationOptions& opts) {
    validate_inputs(m, lambda, opts);
    EnumerationBudget accounting(opts.max_points);
    LatticeWalk walk{m - 1, lambda, isqrt_floor(lambda), &accounting};

    std::vector<std::vector<std::int64_t>> hits;
    for (std::int64_t first = -walk.radius; first <= walk.radius; ++first) {
        walk.run(first, [&](const std::vector<std::int64_t>& coords, std::int64_t q) {
            if (q == lambda)
                hits.push_back(coords);
        });
    }
    std::sort(hits.begin(), hits.end());
    return hits;
}

ConeDescriptor hl_cone(int m, std::int64_t lambda_max, const EnumerationOptions& opts) {
    return ConeDescriptor(hl_link_spectrum(m, lambda_max, opts),
                          /*link_components=*/1,
                          /*sym_dim=*/m - 1, "HL^" + std::to_string(m));
}

} // namespace slcone
