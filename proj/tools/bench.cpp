// Wall-clock comparison of the OpenMP kernels against the serial reference
// implementations. Not a correctness gate; tests/test_kernels.cpp does the
// agreement checks.

#include <omp.h>

#include <cstdio>
#include <cstring>
#include <span>
#include <vector>

#include "cantor/basis.hpp"
#include "cantor/matrix.hpp"
#include "cantor/op_fractal.hpp"
#include "cantor/sampling.hpp"
#include "cantor/serial.hpp"
#include "cantor/transform.hpp"

using namespace cantor;

namespace {

template <class F>
double time_of(F&& f) {
    const double t0 = omp_get_wtime();
    f();
    return omp_get_wtime() - t0;
}

void report(const char* name, double serial_s, double parallel_s) {
    std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %.2fx\n", name, serial_s,
                parallel_s, serial_s / parallel_s);
}

}  // namespace

int main(int argc, char** argv) {
    bool quick = false;
    for (int i = 1; i < argc; ++i)
        if (std::strcmp(argv[i], "--quick") == 0) quick = true;

    const double tol = 1e-12;
    std::printf("threads available: %d%s\n", omp_get_max_threads(), quick ? " (quick mode)" : "");

    {
        const int n = quick ? 2000 : 20000;
        std::vector<double> ts(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) ts[static_cast<std::size_t>(i)] = -1e5 + 2e5 * i / (n - 1);
        std::vector<TransformValue> a, b;
        const double s = time_of([&] { a = serial::mu_hat_batch(ts, kQuarter, tol); });
        const double p = time_of([&] { b = mu_hat_batch(ts, kQuarter, tol); });
        report("mu_hat batch", s, p);
    }
    {
        // fractional offsets defeat the exact-zero shortcut, so this measures
        // the full product evaluation per entry
        const GammaSet S = gamma_set(quick ? 7 : 9, 1);
        std::vector<double> freqs;
        freqs.reserve(S.size());
        for (std::size_t i = 0; i < S.size(); ++i)
            freqs.push_back(static_cast<double>(S.elements[i]) + 0.37 * ((i % 5) + 1));
        Matrix a, b;
        const double s = time_of([&] { a = serial::gram_matrix(freqs, tol); });
        const double p = time_of([&] { b = gram_matrix(freqs, tol); });
        report("gram matrix (dense)", s, p);
    }
    {
        const GammaSet S = gamma_set(quick ? 7 : 9, 1);
        Matrix a;
        TruncatedOperator b;
        const double s = time_of([&] { a = serial::build_U_entries(S, tol); });
        const double p = time_of([&] { b = build_U(S, tol); });
        report("operator build", s, p);

        Matrix c, d;
        const double sm = time_of([&] { c = serial::matmul(a, a); });
        const double pm = time_of([&] { d = matmul(b.entries, b.entries); });
        report("matrix product", sm, pm);
    }
    {
        const std::size_t n = quick ? 200000 : 2000000;
        SampleBatch a, b;
        const double s = time_of([&] { a = serial::sample_batch(kQuarter, 30, n, 1); });
        const double p = time_of([&] { b = sample_batch(kQuarter, 30, n, 1); });
        report("sample batch", s, p);

        std::complex<double> ca, cb;
        const double sc = time_of([&] { ca = serial::empirical_char(30.0, a); });
        const double pc = time_of([&] { cb = empirical_char(30.0, b); });
        report("empirical char", sc, pc);
    }
    return 0;
}
