#include "cherednik/cells.hpp"
#include "cherednik/cohomology.hpp"
#include "cherednik/vogan.hpp"

#include <benchmark/benchmark.h>

#include <filesystem>

using namespace cherednik;

namespace {

const char* kGroups[] = {"cyclic:2", "cyclic:3", "dihedral:3", "dihedral:4"};

Catalog cat(int k) {
    const auto dir = std::filesystem::temp_directory_path() / "cherednik-bench";
    return load_catalog(GroupSpec::parse(kGroups[k]), 48, dir.string());
}

void BM_CyclotomicMultiply(benchmark::State& state) {
    const Cyc a = Cyc::parse("z12^5/3") + Cyc(7, 2), b = Cyc::parse("z12^7") - Cyc(1, 9);
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply);

void BM_MatrixKernel(benchmark::State& state) {
    const std::size_t n = static_cast<std::size_t>(state.range(0));
    Matrix m(n, n + 2);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n + 2; ++j) m(i, j) = Cyc(static_cast<long>((i * 7 + j * 3) % 11) - 5, 1 + j % 3);
    for (auto _ : state) benchmark::DoNotOptimize(m.kernel());
}
BENCHMARK(BM_MatrixKernel)->Arg(8)->Arg(16)->Arg(32);

void BM_DiracStandard(benchmark::State& state) {
    const Catalog c = cat(static_cast<int>(state.range(0)));
    const GradedModule m = GradedModule::standard(c, Params::uniform(c.g(), 1, Cyc(1, 5)), 0, 4);
    for (auto _ : state) benchmark::DoNotOptimize(CohomologyEngine(m).compute(ComplexKind::Dirac));
    state.SetLabel(kGroups[state.range(0)]);
}
BENCHMARK(BM_DiracStandard)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_VoganCertificate(benchmark::State& state) {
    const Catalog c = cat(0);
    for (auto _ : state) {
        TensorAlgebra ta(c, Params::uniform(c.g(), 1, Cyc(1, 5)));
        benchmark::DoNotOptimize(verify_vogan_decomposition(ta, static_cast<int>(state.range(0)), false));
    }
}
BENCHMARK(BM_VoganCertificate)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

void BM_CellsDihedral3(benchmark::State& state) {
    const Catalog c = cat(2);
    for (auto _ : state) benchmark::DoNotOptimize(cm_cells(c, Params::uniform(c.g(), 0, Cyc(1, 3))));
}
BENCHMARK(BM_CellsDihedral3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
