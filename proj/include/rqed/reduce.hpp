#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include <omp.h>

#include "rqed/types.hpp"

namespace rqed {

/// Execution policy of the hot kernels. Both policies produce bit-identical
/// results: parallel loops only fill per-element buffers and the combining
/// order is a fixed pairwise tree that depends on the element count alone.
enum class Exec { serial, parallel };

inline int max_threads() { return omp_get_max_threads(); }
inline void set_num_threads(int n) { omp_set_num_threads(n); }

namespace detail {

template <typename T>
T pairwise(std::span<const T> v) {
    constexpr std::size_t block = 32;
    const std::size_t n = v.size();
    if (n == 0) return T{};
    if (n <= block) {
        T s = v[0];
        for (std::size_t i = 1; i < n; ++i) s += v[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

}  // namespace detail

/// Fixed-shape pairwise sum; independent of thread count by construction.
template <typename T>
T pairwise_sum(std::span<const T> terms) {
    return detail::pairwise(terms);
}

template <typename T>
T pairwise_sum(const std::vector<T>& terms) {
    return detail::pairwise(std::span<const T>(terms));
}

/// Evaluate term(i) for i in [0, n) and return the pairwise sum of all terms.
/// The evaluation loop is the parallel part; the reduction is serial and
/// deterministic.
template <typename T, typename F>
T map_sum(std::size_t n, F&& term, Exec exec = Exec::parallel) {
    std::vector<T> buf(n);
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            buf[static_cast<std::size_t>(i)] = term(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) buf[i] = term(i);
    }
    return pairwise_sum(buf);
}

/// Plain element-wise parallel loop (disjoint writes only).
template <typename F>
void parallel_for(std::size_t n, F&& body, Exec exec = Exec::parallel) {
    if (exec == Exec::parallel) {
#pragma omp parallel for schedule(static)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

namespace ref {

/// Naive running-sum reference; different rounding path than pairwise_sum,
/// used as an oracle in tests.
template <typename T>
T running_sum(std::span<const T> terms) {
    T s{};
    for (const T& t : terms) s += t;
    return s;
}

}  // namespace ref

}  // namespace rqed
