#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shms/objective.hpp"

namespace shms {

class UnknownBenchmark : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class DisallowedDimension : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

enum class BenchmarkKind { US, UN, MS, MN, FM };

std::string to_string(BenchmarkKind kind);

struct BenchmarkSpec {
    std::string id;
    std::string name;
    BenchmarkKind kind;
    std::size_t fixed_dim;  // 0 for the scalable F1..F13
    double lo;
    double hi;
    // Published (rounded) minimum; for F8 this is the per-coordinate value.
    double f_min_printed;
    // Full-precision minimum from local refinement. The Shekel minimizers
    // are catalogued at (4, 4, 4, 4), about 1e-4 above the refined value.
    double f_min;
    bool scales_with_dim;  // f_min is per-coordinate (F8)
    bool origin_zero;      // exact zero at a closed-form point
    // Digits after the decimal point in the published minimum.
    int table_decimals;
};

const std::vector<BenchmarkSpec>& benchmark_catalog();
const BenchmarkSpec& benchmark_spec(const std::string& id);

// Standard dimensions for the scalable set; any dim >= 2 is also accepted.
inline const std::vector<std::size_t> kScalableDims = {30, 100, 500, 1000};

BoundedProblem make_benchmark(const std::string& id, std::size_t dim);

struct KnownOptimum {
    double f_min;        // published value, scaled by dim for F8
    double f_min_exact;  // refined minimum, scaled by dim for F8
    std::optional<Vec> x_min;
};

KnownOptimum known_optimum(const std::string& id, std::size_t dim);

// Tolerance for comparing f(x_min) with the published minimum: 1e-4, or half
// a unit in the last published digit when that is coarser.
double published_tolerance(const std::string& id, std::size_t dim);

// Penalty term shared by F12 and F13.
double penalty_u(double x, double a, double k, int m);

// JSON listing of the catalog: id, name, kind, range, dims, f_min.
std::string catalog_json();

}  // namespace shms
