#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace helm {

using cplx = std::complex<double>;

constexpr double pi = 3.14159265358979323846;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double norm(Vec2 a) { return std::hypot(a.x, a.y); }

// Chunked parallel loop. Chunk boundaries are fixed by nthreads, so callers
// that merge per-chunk results in index order stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body,
                  unsigned nthreads = 0);

// Global thread budget for internal parallelism (CLI --threads lands here).
unsigned thread_budget();
void set_thread_budget(unsigned n);

}  // namespace helm
