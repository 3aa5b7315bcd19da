// Compares the OpenMP pairing-table kernel against the serial reference
// on random diagrams of growing size and checks they agree exactly.
#include <chrono>
#include <iostream>

#include "vknot/moves.hpp"
#include "vknot/surface.hpp"

int main(int argc, char** argv) {
    const int max_chords = argc > 1 ? std::atoi(argv[1]) : 96;
    const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 42;
    using clock = std::chrono::steady_clock;
    std::cout << "chords\tserial_ms\tparallel_ms\tspeedup\tequal\n";
    for (int n = 16; n <= max_chords; n *= 2) {
        const vknot::LongDiagram d = vknot::random_diagram(n, seed + n);
        const auto t0 = clock::now();
        const auto serial = vknot::pairing_tables_serial(d);
        const auto t1 = clock::now();
        const auto parallel = vknot::pairing_tables(d);
        const auto t2 = clock::now();
        const double ms_serial = std::chrono::duration<double, std::milli>(t1 - t0).count();
        const double ms_parallel = std::chrono::duration<double, std::milli>(t2 - t1).count();
        std::cout << n << '\t' << ms_serial << '\t' << ms_parallel << '\t'
                  << ms_serial / ms_parallel << '\t' << (serial == parallel ? "yes" : "NO")
                  << '\n';
        if (serial != parallel) return 1;
    }
    return 0;
}
