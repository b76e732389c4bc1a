#include "mes/divisor.hpp"
#include "mes/eisenstein.hpp"
#include "mes/hopf.hpp"
#include "mes/runtime.hpp"

#include <chrono>
#include <cstdio>
#include <functional>

using namespace mes;

namespace {

double time_ms(const std::function<void()>& fn, int reps)
{
    double best = 1e300;
    for (int i = 0; i < reps; ++i) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        const auto t1 = std::chrono::steady_clock::now();
        best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
    }
    return best;
}

void row(const char* name, const std::function<void()>& serial,
         const std::function<void()>& parallel, int reps)
{
    const double ts = time_ms(serial, reps);
    const double tp = time_ms(parallel, reps);
    std::printf("%-34s %10.2f ms %10.2f ms %8.2fx\n", name, ts, tp, ts / tp);
}

} // namespace

int main()
{
    std::printf("threads: %d\n", thread_count());
    std::printf("%-34s %13s %13s %9s\n", "kernel", "serial", "parallel", "speedup");

    row(
        "coproduct weight 12 (4,4,4)",
        [] { coproduct_serial(Composition{4, 4, 4}); },
        [] { coproduct(Composition{4, 4, 4}); }, 3);

    row(
        "gsh (1,1,1,1,1,2) order 60",
        [] { g_tilde_sh_serial(Composition{1, 1, 1, 1, 1, 2}, 60); },
        [] { g_tilde_sh(Composition{1, 1, 1, 1, 1, 2}, 60); }, 3);

    row(
        "gsh batch: admissible weight 6, order 60",
        [] {
            for (const auto& c : admissible_compositions_of_weight(6))
                g_tilde_sh_serial(c, 60);
        },
        [] {
            for (const auto& c : admissible_compositions_of_weight(6)) g_tilde_sh(c, 60);
        },
        2);

    LatticeParams p;
    p.tau = {0.0, 1.0};
    p.L = 300;
    p.M = 300;
    row(
        "lattice (2,2,2) at L=M=300",
        [&] { lattice_eval_serial(Composition{2, 2, 2}, p); },
        [&] { lattice_eval(Composition{2, 2, 2}, p); }, 3);

    return 0;
}
