// Compares the serial reference kernels against the OpenMP versions on the
// exhaustive-sweep workloads and reports the timings.

#include <chrono>
#include <cstdio>

#include "arcalg/coeffmap.hpp"
#include "arcalg/homology.hpp"
#include "arcalg/parallel.hpp"

using namespace arcalg;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
    return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

}  // namespace

int main() {
    std::printf("workers: %d\n", thread_count());

    {
        Block b = Block::parse("******");
        auto t0 = clk::now();
        auto serial = mult_table(b, false);
        double ts = ms_since(t0);
        t0 = clk::now();
        auto par = mult_table(b, true);
        double tp = ms_since(t0);
        bool same = serial == par;
        std::printf("mult table %-8s serial %8.1f ms   omp %8.1f ms   speedup %.2fx   match %s\n",
                    b.to_string().c_str(), ts, tp, ts / tp, same ? "yes" : "NO");
        if (!same) return 1;
    }

    {
        std::vector<Block> scope{Block::parse("****"), Block::parse("**x*"), Block::parse("*x**")};
        auto t0 = clk::now();
        auto rs = check_intertwine_algebra(scope, false, false);
        double ts = ms_since(t0);
        t0 = clk::now();
        auto rp = check_intertwine_algebra(scope, false, true);
        double tp = ms_since(t0);
        bool same = rs.ok == rp.ok && rs.steps_checked == rp.steps_checked;
        std::printf("intertwine sweep    serial %8.1f ms   omp %8.1f ms   speedup %.2fx   match %s (%lld steps)\n",
                    ts, tp, ts / tp, same ? "yes" : "NO", rs.steps_checked);
        if (!same || !rs.ok) return 1;
    }

    {
        MorseWord w = MorseWord::parse("u0 u2 x+1 x+1 x-0 x+1 n2 n0");
        Specialization sp = Specialization::parse("custom:0,-1,i");
        auto t0 = clk::now();
        CubeComplex c = build_cube(w, sp);
        double tc = ms_since(t0);
        bool ok = c.d_squared_zero();
        std::printf("cube %-24s build %8.1f ms   d^2=0 %s\n", w.to_string().c_str(), tc, ok ? "yes" : "NO");
        if (!ok) return 1;
    }
    return 0;
}
