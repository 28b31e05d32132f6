#pragma once

#include <cstddef>
#include <optional>
#include <type_traits>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace hlya {

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

/// Runs body(i) for every i in [0, n). Iterations must be independent and
/// each must write only its own output slot, so the parallel loop produces
/// exactly the serial result.
template <class F>
void parallel_for(std::size_t n, F&& body, [[maybe_unused]] std::size_t grain = 64) {
#ifdef _OPENMP
    if (n >= grain && omp_get_max_threads() > 1) {
        #pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
        return;
    }
#endif
    for (std::size_t i = 0; i < n; ++i) body(i);
}

template <class K>
struct ScanHit {
    std::size_t index = 0;
    std::vector<K> defect;
};

template <class K>
struct ScanResult {
    long long fail_count = 0;
    std::optional<ScanHit<K>> first; // smallest failing index

    bool passed() const { return fail_count == 0; }
};

namespace detail {
template <class V>
bool all_zero(const V& v) {
    for (const auto& x : v)
        if (!x.is_zero()) return false;
    return true;
}
} // namespace detail

/// Serial reference scan: evaluates defect_at(i) for i in [0, count) and
/// records the total number of nonzero defects plus the first one.
template <class Fn>
auto scan_defects_serial(std::size_t count, Fn&& defect_at) {
    using V = std::decay_t<decltype(defect_at(std::size_t{0}))>;
    using K = typename V::value_type;
    ScanResult<K> r;
    for (std::size_t i = 0; i < count; ++i) {
        V d = defect_at(i);
        if (detail::all_zero(d)) continue;
        ++r.fail_count;
        if (!r.first) r.first = ScanHit<K>{i, std::move(d)};
    }
    return r;
}

/// Parallel scan over the index space. Each thread keeps its own count and
/// its own smallest failing index; the merge takes the global minimum, so
/// the outcome is identical to scan_defects_serial.
template <class Fn>
auto scan_defects(std::size_t count, Fn&& defect_at, [[maybe_unused]] std::size_t grain = 64) {
    using V = std::decay_t<decltype(defect_at(std::size_t{0}))>;
    using K = typename V::value_type;
#ifdef _OPENMP
    if (count >= grain && omp_get_max_threads() > 1) {
        ScanResult<K> merged;
        #pragma omp parallel
        {
            ScanResult<K> local;
            #pragma omp for schedule(static) nowait
            for (long long i = 0; i < static_cast<long long>(count); ++i) {
                V d = defect_at(static_cast<std::size_t>(i));
                if (detail::all_zero(d)) continue;
                ++local.fail_count;
                if (!local.first) local.first = ScanHit<K>{static_cast<std::size_t>(i), std::move(d)};
            }
            #pragma omp critical
            {
                merged.fail_count += local.fail_count;
                if (local.first && (!merged.first || local.first->index < merged.first->index))
                    merged.first = std::move(local.first);
            }
        }
        return merged;
    }
#endif
    return scan_defects_serial(count, std::forward<Fn>(defect_at));
}

} // namespace hlya
