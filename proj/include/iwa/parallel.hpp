#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace iwa {

// Runs f(i) for i in [0, n); the OpenMP path fans the iterations out over a
// worker pool, the serial path is the reference implementation used to check
// it. Results are collected in index order either way, so the two modes are
// bit-for-bit interchangeable.
enum class ExecMode { Serial, Parallel };

ExecMode default_exec_mode();
void set_default_exec_mode(ExecMode mode);
int worker_count();

template <class T>
std::vector<T> parallel_map(size_t n, const std::function<T(size_t)>& f,
                            ExecMode mode = default_exec_mode());

void parallel_for(size_t n, const std::function<void(size_t)>& f,
                  ExecMode mode = default_exec_mode());

// Instantiated in parallel.cpp for the result types used by the sweeps.
struct SweepOutcome {
    bool pass = true;
    std::string detail;
};

std::vector<SweepOutcome> sweep(size_t n, const std::function<SweepOutcome(size_t)>& f,
                                ExecMode mode = default_exec_mode());

}  // namespace iwa
