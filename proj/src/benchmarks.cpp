#include "shms/benchmarks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace shms {

namespace {

using std::numbers::pi;

double sphere(const Vec& x, Rng*) {
    double s = 0.0;
    for (double v : x) s += v * v;
    return s;
}

double schwefel_222(const Vec& x, Rng*) {
    double s = 0.0, p = 1.0;
    for (double v : x) {
        s += std::abs(v);
        p *= std::abs(v);
    }
    return s + p;
}

double schwefel_12(const Vec& x, Rng*) {
    double s = 0.0, run = 0.0;
    for (double v : x) {
        run += v;
        s += run * run;
    }
    return s;
}

double schwefel_221(const Vec& x, Rng*) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
}

double rosenbrock(const Vec& x, Rng*) {
    double s = 0.0;
    for (std::size_t i = 0; i + 1 < x.size(); ++i) {
        double a = x[i + 1] - x[i] * x[i];
        double b = x[i] - 1.0;
        s += 100.0 * a * a + b * b;
    }
    return s;
}

double step_fn(const Vec& x, Rng*) {
    double s = 0.0;
    for (double v : x) {
        double f = std::floor(v + 0.5);
        s += f * f;
    }
    return s;
}

double quartic(const Vec& x, Rng* noise) {
    double s = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double v2 = x[i] * x[i];
        s += static_cast<double>(i + 1) * v2 * v2;
    }
    return s + (noise ? noise->uniform() : 0.0);
}

double schwefel(const Vec& x, Rng*) {
    double s = 0.0;
    for (double v : x) s -= v * std::sin(std::sqrt(std::abs(v)));
    return s;
}

double rastrigin(const Vec& x, Rng*) {
    double s = 0.0;
    for (double v : x) s += v * v - 10.0 * std::cos(2.0 * pi * v) + 10.0;
    return s;
}

double ackley(const Vec& x, Rng*) {
    const double n = static_cast<double>(x.size());
    double sq = 0.0, cs = 0.0;
    for (double v : x) {
        sq += v * v;
        cs += std::cos(2.0 * pi * v);
    }
    // Grouped so the origin evaluates to exactly zero.
    return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(sq / n))) + (std::numbers::e - std::exp(cs / n));
}

double griewank(const Vec& x, Rng*) {
    double s = 0.0, p = 1.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        s += x[i] * x[i] / 4000.0;
        p *= std::cos(x[i] / std::sqrt(static_cast<double>(i + 1)));
    }
    return s - p + 1.0;
}

double penalized(const Vec& x, Rng*) {
    const std::size_t n = x.size();
    auto y = [&](std::size_t i) { return 1.0 + (x[i] + 1.0) / 4.0; };
    double s1 = std::sin(pi * y(0));
    double s = 10.0 * s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double a = y(i) - 1.0;
        double b = std::sin(pi * y(i + 1));
        s += a * a * (1.0 + 10.0 * b * b);
    }
    double last = y(n - 1) - 1.0;
    s += last * last;
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 10.0, 100.0, 4);
    return pi / static_cast<double>(n) * s + pen;
}

double penalized2(const Vec& x, Rng*) {
    const std::size_t n = x.size();
    double s1 = std::sin(3.0 * pi * x[0]);
    double s = s1 * s1;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        double a = x[i] - 1.0;
        double b = std::sin(3.0 * pi * x[i + 1]);
        s += a * a * (1.0 + b * b);
    }
    double a = x[n - 1] - 1.0;
    double b = std::sin(2.0 * pi * x[n - 1]);
    s += a * a * (1.0 + b * b);
    double pen = 0.0;
    for (double v : x) pen += penalty_u(v, 5.0, 100.0, 4);
    return 0.1 * s + pen;
}

double foxholes(const Vec& x, Rng*) {
    static const std::array<double, 5> grid = {-32.0, -16.0, 0.0, 16.0, 32.0};
    double s = 1.0 / 500.0;
    for (int j = 0; j < 25; ++j) {
        double d0 = x[0] - grid[j % 5];
        double d1 = x[1] - grid[j / 5];
        s += 1.0 / (j + 1 + std::pow(d0, 6) + std::pow(d1, 6));
    }
    return 1.0 / s;
}

double kowalik(const Vec& x, Rng*) {
    static const std::array<double, 11> a = {0.1957, 0.1947, 0.1735, 0.16,   0.0844, 0.0627,
                                             0.0456, 0.0342, 0.0323, 0.0235, 0.0246};
    static const std::array<double, 11> inv_b = {0.25, 0.5, 1, 2, 4, 6, 8, 10, 12, 14, 16};
    double s = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        double b = 1.0 / inv_b[i];
        double r = a[i] - x[0] * (b * b + b * x[1]) / (b * b + b * x[2] + x[3]);
        s += r * r;
    }
    return s;
}

double six_hump(const Vec& x, Rng*) {
    double a = x[0], b = x[1];
    return 4 * a * a - 2.1 * std::pow(a, 4) + std::pow(a, 6) / 3 + a * b - 4 * b * b + 4 * std::pow(b, 4);
}

double branin(const Vec& x, Rng*) {
    double t = x[1] - 5.1 / (4 * pi * pi) * x[0] * x[0] + 5 / pi * x[0] - 6;
    return t * t + 10 * (1 - 1 / (8 * pi)) * std::cos(x[0]) + 10;
}

double goldstein_price(const Vec& x, Rng*) {
    double a = x[0], b = x[1];
    double p = a + b + 1;
    double q = 2 * a - 3 * b;
    return (1 + p * p * (19 - 14 * a + 3 * a * a - 14 * b + 6 * a * b + 3 * b * b)) *
           (30 + q * q * (18 - 32 * a + 12 * a * a + 48 * b - 36 * a * b + 27 * b * b));
}

constexpr std::array<double, 4> kHartmanC = {1.0, 1.2, 3.0, 3.2};

double hartman3(const Vec& x, Rng*) {
    static const double a[4][3] = {{3, 10, 30}, {0.1, 10, 35}, {3, 10, 30}, {0.1, 10, 35}};
    static const double p[4][3] = {{0.3689, 0.117, 0.2673},
                                   {0.4699, 0.4387, 0.747},
                                   {0.1091, 0.8732, 0.5547},
                                   {0.03815, 0.5743, 0.8828}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 3; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
        s -= kHartmanC[i] * std::exp(-e);
    }
    return s;
}

double hartman6(const Vec& x, Rng*) {
    static const double a[4][6] = {{10, 3, 17, 3.5, 1.7, 8},
                                   {0.05, 10, 17, 0.1, 8, 14},
                                   {3, 3.5, 1.7, 10, 17, 8},
                                   {17, 8, 0.05, 10, 0.1, 14}};
    static const double p[4][6] = {{0.1312, 0.1696, 0.5569, 0.0124, 0.8283, 0.5886},
                                   {0.2329, 0.4135, 0.8307, 0.3736, 0.1004, 0.9991},
                                   {0.2348, 0.1451, 0.3522, 0.2883, 0.3047, 0.6650},
                                   {0.4047, 0.8828, 0.8732, 0.5743, 0.1091, 0.0381}};
    double s = 0.0;
    for (int i = 0; i < 4; ++i) {
        double e = 0.0;
        for (int j = 0; j < 6; ++j) e += a[i][j] * (x[j] - p[i][j]) * (x[j] - p[i][j]);
        s -= kHartmanC[i] * std::exp(-e);
    }
    return s;
}

double shekel(const Vec& x, int m) {
    static const double a[10][4] = {{4, 4, 4, 4}, {1, 1, 1, 1}, {8, 8, 8, 8}, {6, 6, 6, 6}, {3, 7, 3, 7},
                                    {2, 9, 2, 9}, {5, 5, 3, 3}, {8, 1, 8, 1}, {6, 2, 6, 2}, {7, 3.6, 7, 3.6}};
    static const double c[10] = {0.1, 0.2, 0.2, 0.4, 0.4, 0.6, 0.3, 0.7, 0.5, 0.5};
    double s = 0.0;
    for (int i = 0; i < m; ++i) {
        double d = c[i];
        for (int j = 0; j < 4; ++j) d += (x[j] - a[i][j]) * (x[j] - a[i][j]);
        s -= 1.0 / d;
    }
    return s;
}

double shekel5(const Vec& x, Rng*) { return shekel(x, 5); }
double shekel7(const Vec& x, Rng*) { return shekel(x, 7); }
double shekel10(const Vec& x, Rng*) { return shekel(x, 10); }

using RawFn = double (*)(const Vec&, Rng*);

struct Entry {
    BenchmarkSpec spec;
    RawFn fn;
    Vec x_min;  // empty: scalable minimizer built from x_fill
    double x_fill;
};

constexpr double kSchwefelX = 420.96874635998202;
constexpr double kSchwefelF = -418.98288727243380;

const std::vector<Entry>& entries() {
    using K = BenchmarkKind;
    static const std::vector<Entry> table = {
        {{"F1", "Sphere", K::US, 0, -100, 100, 0, 0, false, true, 0}, sphere, {}, 0.0},
        {{"F2", "Schwefel 2.22", K::UN, 0, -10, 10, 0, 0, false, true, 0}, schwefel_222, {}, 0.0},
        {{"F3", "Schwefel 1.2", K::UN, 0, -100, 100, 0, 0, false, true, 0}, schwefel_12, {}, 0.0},
        {{"F4", "Schwefel 2.21", K::US, 0, -100, 100, 0, 0, false, true, 0}, schwefel_221, {}, 0.0},
        {{"F5", "Rosenbrock", K::UN, 0, -30, 30, 0, 0, false, true, 0}, rosenbrock, {}, 1.0},
        {{"F6", "Step", K::US, 0, -100, 100, 0, 0, false, true, 0}, step_fn, {}, 0.0},
        {{"F7", "Quartic", K::US, 0, -1.28, 1.28, 0, 0, false, true, 0}, quartic, {}, 0.0},
        {{"F8", "Schwefel", K::MS, 0, -500, 500, -418.9829, kSchwefelF, true, false, 4}, schwefel, {}, kSchwefelX},
        {{"F9", "Rastrigin", K::MS, 0, -5.12, 5.12, 0, 0, false, true, 0}, rastrigin, {}, 0.0},
        {{"F10", "Ackley", K::MN, 0, -32, 32, 0, 0, false, true, 0}, ackley, {}, 0.0},
        {{"F11", "Griewank", K::MN, 0, -600, 600, 0, 0, false, true, 0}, griewank, {}, 0.0},
        {{"F12", "Penalized", K::MN, 0, -50, 50, 0, 0, false, true, 0}, penalized, {}, -1.0},
        {{"F13", "Penalized2", K::MN, 0, -50, 50, 0, 0, false, true, 0}, penalized2, {}, 1.0},
        {{"F14", "Foxholes", K::FM, 2, -65, 65, 1, 0.9980038377944502, false, false, 0}, foxholes,
         {-31.978332112713616, -31.9783411398899}, 0.0},
        {{"F15", "Kowalik", K::FM, 4, -5, 5, 0.0003, 0.0003074859878056054, false, false, 4}, kowalik,
         {0.19283345309447808, 0.19083623976686623, 0.12311729917484215, 0.13576599009019955}, 0.0},
        {{"F16", "Six Hump Camel", K::FM, 2, -5, 5, -1.0316, -1.0316284534898776, false, false, 4}, six_hump,
         {0.08984201903356825, -0.7126564042352547}, 0.0},
        {{"F17", "Branin", K::FM, 2, -5, 5, 0.398, 0.39788735772973816, false, false, 3}, branin,
         {3.141592653589793, 2.275}, 0.0},
        {{"F18", "Goldstein-Price", K::FM, 2, -2, 2, 3, 3.0, false, false, 0}, goldstein_price, {0.0, -1.0}, 0.0},
        {{"F19", "Hartman 3", K::FM, 3, 0, 1, -3.86, -3.8627821478207554, false, false, 2}, hartman3,
         {0.11461433649980202, 0.5556488506511186, 0.8525469530874457}, 0.0},
        {{"F20", "Hartman 6", K::FM, 6, 0, 1, -3.32, -3.322368011415515, false, false, 2}, hartman6,
         {0.2016895108588408, 0.15001069134152556, 0.4768739702689273, 0.2753324313216807, 0.3116516161424128,
          0.6573005340668374},
         0.0},
        {{"F21", "Shekel 5", K::FM, 4, 0, 10, -10.1532, -10.153199679058229, false, false, 4}, shekel5,
         {4, 4, 4, 4}, 0.0},
        {{"F22", "Shekel 7", K::FM, 4, 0, 10, -10.4028, -10.402940566818662, false, false, 4}, shekel7,
         {4, 4, 4, 4}, 0.0},
        {{"F23", "Shekel 10", K::FM, 4, 0, 10, -10.5363, -10.536409816692046, false, false, 4}, shekel10,
         {4, 4, 4, 4}, 0.0},
    };
    return table;
}

const Entry& entry(const std::string& id) {
    for (const auto& e : entries())
        if (e.spec.id == id) return e;
    throw UnknownBenchmark("unknown benchmark id: " + id);
}

std::size_t checked_dim(const BenchmarkSpec& spec, std::size_t dim) {
    if (spec.fixed_dim != 0) {
        if (dim != 0 && dim != spec.fixed_dim)
            throw DisallowedDimension(spec.id + " is defined only for dimension " + std::to_string(spec.fixed_dim));
        return spec.fixed_dim;
    }
    if (dim < 2) throw DisallowedDimension(spec.id + " requires dimension >= 2");
    return dim;
}

}  // namespace

std::string to_string(BenchmarkKind kind) {
    switch (kind) {
        case BenchmarkKind::US: return "US";
        case BenchmarkKind::UN: return "UN";
        case BenchmarkKind::MS: return "MS";
        case BenchmarkKind::MN: return "MN";
        case BenchmarkKind::FM: return "FM";
    }
    return "?";
}

const std::vector<BenchmarkSpec>& benchmark_catalog() {
    static const std::vector<BenchmarkSpec> specs = [] {
        std::vector<BenchmarkSpec> out;
        for (const auto& e : entries()) out.push_back(e.spec);
        return out;
    }();
    return specs;
}

const BenchmarkSpec& benchmark_spec(const std::string& id) { return entry(id).spec; }

double penalty_u(double x, double a, double k, int m) {
    if (x > a) return k * std::pow(x - a, m);
    if (x < -a) return k * std::pow(-x - a, m);
    return 0.0;
}

BoundedProblem make_benchmark(const std::string& id, std::size_t dim) {
    const Entry& e = entry(id);
    std::size_t n = checked_dim(e.spec, dim);
    BoundedProblem p;
    p.name = e.spec.id;
    p.dim = n;
    p.lower.assign(n, e.spec.lo);
    p.upper.assign(n, e.spec.hi);
    p.eval = e.fn;
    return p;
}

KnownOptimum known_optimum(const std::string& id, std::size_t dim) {
    const Entry& e = entry(id);
    std::size_t n = e.spec.fixed_dim != 0 ? e.spec.fixed_dim : std::max<std::size_t>(dim, 2);
    double scale = e.spec.scales_with_dim ? static_cast<double>(n) : 1.0;
    KnownOptimum k{e.spec.f_min_printed * scale, e.spec.f_min * scale, std::nullopt};
    k.x_min = e.x_min.empty() ? Vec(n, e.x_fill) : e.x_min;
    return k;
}

double published_tolerance(const std::string& id, std::size_t dim) {
    const auto& spec = entry(id).spec;
    if (spec.origin_zero) return 1e-8;
    std::size_t n = spec.fixed_dim != 0 ? spec.fixed_dim : std::max<std::size_t>(dim, 2);
    double half_unit = 0.5 * std::pow(10.0, -spec.table_decimals) * (spec.scales_with_dim ? double(n) : 1.0);
    return std::max(1e-4, half_unit);
}

std::string catalog_json() {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& s : benchmark_catalog()) {
        nlohmann::json dims = s.fixed_dim ? nlohmann::json(s.fixed_dim) : nlohmann::json(kScalableDims);
        arr.push_back({{"id", s.id},
                       {"name", s.name},
                       {"kind", to_string(s.kind)},
                       {"range", {s.lo, s.hi}},
                       {"dims", dims},
                       {"f_min", s.f_min_printed},
                       {"f_min_exact", s.f_min},
                       {"f_min_per_dimension", s.scales_with_dim}});
    }
    return nlohmann::json({{"schema_version", 1}, {"benchmarks", arr}}).dump(2);
}

}  // namespace shms
