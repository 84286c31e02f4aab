#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qcnn {

// Invalid shapes, ranges and other configuration mistakes. Reported by the
// CLI with exit code 3.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// File I/O and file format problems. Reported by the CLI with exit code 4.
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Row-major dense matrix of doubles; used for images, patches and
// activation maps.
struct Mat {
    int rows = 0;
    int cols = 0;
    std::vector<double> v;

    Mat() = default;
    Mat(int r, int c, double fill = 0.0)
        : rows(r), cols(c), v(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

    double& at(int r, int c) { return v[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return v[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return v.size(); }

    bool operator==(const Mat&) const = default;
};

uint64_t splitmix64(uint64_t x);

// Derives an independent stream seed from a base seed, so each consumer
// (per-image generation, shuffling, dropout, init) gets its own
// reproducible stream.
uint64_t derive_seed(uint64_t base, uint64_t stream);

// Deterministic RNG. Distributions are hand-rolled on top of mt19937_64 so
// streams do not depend on the standard library's distribution internals.
class Rng {
public:
    explicit Rng(uint64_t seed) : engine_(seed) {}

    uint64_t next_u64() { return engine_(); }

    // uniform in [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // unbiased integer in [0, n)
    uint64_t below(uint64_t n);

    // standard normal (Box-Muller)
    double normal();

private:
    std::mt19937_64 engine_;
};

// Fisher-Yates. std::shuffle's algorithm is implementation-defined; this one
// is pinned so shuffles reproduce across standard libraries.
template <typename T>
void shuffle(std::vector<T>& xs, Rng& rng) {
    for (size_t i = xs.size(); i > 1; --i) {
        std::swap(xs[i - 1], xs[rng.below(i)]);
    }
}

// Worker cap shared by all parallel loops; 0 means "use all cores".
void set_max_threads(int n);
int max_threads();

namespace detail {
int threads_for(int iterations);
}

// Runs body(i) for i in [0, n). Iterations must write to disjoint slots;
// callers perform any reduction afterwards in index order, so results never
// depend on the thread count. Nested calls fall back to the plain loop.
template <typename F>
void parallel_for(int n, F&& body) {
#ifdef _OPENMP
    const int nthreads = detail::threads_for(n);
    if (!omp_in_parallel() && nthreads > 1) {
#pragma omp parallel for schedule(static) num_threads(nthreads)
        for (int i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
#endif
    for (int i = 0; i < n; ++i) {
        body(i);
    }
}

}  // namespace qcnn
