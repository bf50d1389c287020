// Times the heavy verification sweeps in the serial reference mode and the
// OpenMP mode, and checks that both produce the same report.

#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "d21a/models.hpp"
#include "d21a/pairing.hpp"
#include "d21a/sb.hpp"

using namespace d21a;

namespace {

double now() {
#ifdef _OPENMP
    return omp_get_wtime();
#else
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
#endif
}

template <class Fn>
void bench(const char* name, Fn&& fn) {
    double t0 = now();
    CheckReport serial = fn(ExecMode::Serial);
    double t1 = now();
    CheckReport parallel = fn(ExecMode::Parallel);
    double t2 = now();
    bool same = serial.pass == parallel.pass && serial.failures == parallel.failures;
    std::printf("%-28s serial %8.3fs   openmp %8.3fs   speedup %5.2fx   %s\n", name, t1 - t0, t2 - t1,
                (t2 - t1) > 0 ? (t1 - t0) / (t2 - t1) : 0.0, same ? "reports match" : "REPORTS DIFFER");
}

} // namespace

int main() {
#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; both columns run serially\n");
#endif
    StructureTable d21 = build_d21a();
    bench("super-jacobi 17^3", [&](ExecMode m) { return check_super_jacobi(d21, m); });
    bench("tkk-isomorphism 17^2", [&](ExecMode m) { return check_tkk_isomorphism(false, m); });
    Character chi = Character::lambda_alpha();
    bench("representation 2x17^2", [&](ExecMode m) { return check_representation(chi, m); });
    bench("skew-supersymmetry d<=5", [&](ExecMode m) { return check_skew_supersymmetry(chi, 5, m); });
    bench("reproducing kernel k<=6", [&](ExecMode m) { return check_reproducing(chi, 6, m); });
    bench("intertwining d<=5", [&](ExecMode m) { return check_intertwining(chi, 5, m); });
    return 0;
}
