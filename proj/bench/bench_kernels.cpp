// Serial reference vs OpenMP kernel, same inputs. Arguments select the type.
#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "abelorb/anr.hpp"
#include "abelorb/ideals.hpp"
#include "abelorb/orbits.hpp"
#include "abelorb/root_system.hpp"
#include "abelorb/weyl.hpp"

namespace {

using namespace abelorb;

const char* const kIdealTypes[] = {"D5", "E6", "B6"};

struct AnrCase {
    const char* type;
    int node;  // internal index
};
const AnrCase kAnrCases[] = {{"C5", 4}, {"D6", 5}, {"E7", 6}};

const AnrCase& anr_case(const benchmark::State& state) {
    return kAnrCases[static_cast<std::size_t>(state.range(0))];
}

void label(benchmark::State& state, const std::string& text) { state.SetLabel(text); }

template <auto Enumerate>
void BM_Ideals(benchmark::State& state) {
    const RootSystem rs(SimpleType::parse(kIdealTypes[state.range(0)]));
    std::size_t count = 0;
    for (auto _ : state) {
        auto ideals = Enumerate(rs);
        count = ideals.size();
        benchmark::DoNotOptimize(ideals.data());
    }
    label(state, std::string(kIdealTypes[state.range(0)]) + " ideals=" + std::to_string(count));
}

template <auto Table>
void BM_OrbitTable(benchmark::State& state) {
    const auto& c = anr_case(state);
    const RootSystem rs(SimpleType::parse(c.type));
    const RootSet a = abelian_nilradical(rs, c.node);
    std::size_t count = 0;
    for (auto _ : state) {
        auto records = Table(rs, a);
        count = records.size();
        benchmark::DoNotOptimize(records.data());
    }
    label(state, std::string(c.type) + " orbits=" + std::to_string(count));
}

template <auto Matrix>
void BM_BruhatMatrix(benchmark::State& state) {
    const auto& c = anr_case(state);
    const RootSystem rs(SimpleType::parse(c.type));
    const RootSet a = abelian_nilradical(rs, c.node);
    std::vector<Involution> sigmas;
    for (const auto& r : orbit_table(rs, a)) sigmas.push_back(sigma_of_orth_set(rs, r.s));
    for (auto _ : state) {
        auto m = Matrix(rs, sigmas);
        benchmark::DoNotOptimize(m.data());
    }
    label(state, std::string(c.type) + " n=" + std::to_string(sigmas.size()));
}

template <auto Check>
void BM_ConjectureCheck(benchmark::State& state) {
    const auto& c = anr_case(state);
    const RootSystem rs(SimpleType::parse(c.type));
    for (auto _ : state) {
        auto report = Check(rs, c.node);
        benchmark::DoNotOptimize(report.rows.data());
    }
    label(state, c.type);
}

}  // namespace

BENCHMARK(BM_Ideals<enumerate_abelian_ideals>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Ideals<enumerate_abelian_ideals_parallel>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitTable<orbit_table>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_OrbitTable<orbit_table_parallel>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruhatMatrix<bruhat_matrix_serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BruhatMatrix<bruhat_matrix>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureCheck<conjecture_check_serial>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ConjectureCheck<conjecture_check>)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
