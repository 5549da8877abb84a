#include "shms/objective.hpp"

#include <algorithm>
#include <cmath>

namespace shms {

NonFiniteObjective::NonFiniteObjective(const std::string& problem, Vec x)
    : std::runtime_error("non-finite objective value in " + problem), x_(std::move(x)) {}

void BoundedProblem::validate() const {
    if (dim == 0) throw std::invalid_argument(name + ": dimension must be positive");
    if (lower.size() != dim || upper.size() != dim)
        throw std::invalid_argument(name + ": bound vectors must have length dim");
    for (std::size_t d = 0; d < dim; ++d) {
        if (!(lower[d] < upper[d]))
            throw std::invalid_argument(name + ": lower bound not below upper bound");
    }
    if (!eval) throw std::invalid_argument(name + ": missing objective");
}

Vec clamp(const Vec& x, const BoundedProblem& problem) {
    if (x.size() != problem.dim)
        throw DimensionMismatch("clamp: expected " + std::to_string(problem.dim) +
                                " coordinates, got " + std::to_string(x.size()));
    Vec y(x.size());
    for (std::size_t d = 0; d < x.size(); ++d)
        y[d] = std::clamp(x[d], problem.lower[d], problem.upper[d]);
    return y;
}

bool in_bounds(const Vec& x, const BoundedProblem& problem) {
    if (x.size() != problem.dim) return false;
    for (std::size_t d = 0; d < x.size(); ++d)
        if (x[d] < problem.lower[d] || x[d] > problem.upper[d]) return false;
    return true;
}

double evaluate(const BoundedProblem& problem, const Vec& x, EvalCounter& counter, Rng* noise) {
    if (x.size() != problem.dim)
        throw DimensionMismatch("evaluate: dimension mismatch for " + problem.name);
    ++counter.count;
    double f = problem.eval(x, noise);
    if (!std::isfinite(f)) throw NonFiniteObjective(problem.name, x);
    return f;
}

}  // namespace shms
