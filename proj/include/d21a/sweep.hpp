#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "d21a/report.hpp"

namespace d21a {

/// Verification sweeps run either as a plain serial loop (the reference) or as
/// an OpenMP parallel loop. Iterations must be independent; results land in
/// per-index slots so both modes produce identical reports.
enum class ExecMode { Serial, Parallel };

template <class Fn>
void sweep_indices(std::size_t n, ExecMode mode, Fn&& fn) {
    if (mode == ExecMode::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i) fn(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) fn(i);
    }
}

/// Runs fn(i) -> failure message ("" = pass) over [0, n) and collects
/// non-empty messages in index order.
template <class Fn>
void sweep_collect(CheckReport& report, std::size_t n, ExecMode mode, Fn&& fn) {
    std::vector<std::string> slots(n);
    sweep_indices(n, mode, [&](std::size_t i) { slots[i] = fn(i); });
    for (auto& s : slots)
        if (!s.empty()) report.fail(std::move(s));
}

} // namespace d21a
