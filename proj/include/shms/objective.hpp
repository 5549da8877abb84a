#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "shms/rng.hpp"

namespace shms {

using Vec = std::vector<double>;

class NonFiniteObjective : public std::runtime_error {
public:
    NonFiniteObjective(const std::string& problem, Vec x);
    const Vec& point() const { return x_; }

private:
    Vec x_;
};

class DimensionMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Objective signature. The Rng pointer is the noise stream for stochastic
// objectives; nullptr means a zeroed stream. Deterministic objectives ignore it.
using ObjectiveFn = std::function<double(const Vec&, Rng*)>;

struct BoundedProblem {
    std::string name;
    std::size_t dim = 0;
    Vec lower;
    Vec upper;
    ObjectiveFn eval;

    // Throws std::invalid_argument when sizes disagree or a bound is inverted.
    void validate() const;
    double width(std::size_t d) const { return upper[d] - lower[d]; }
};

// Not thread safe; each run owns its own counter.
struct EvalCounter {
    std::uint64_t count = 0;
};

Vec clamp(const Vec& x, const BoundedProblem& problem);
bool in_bounds(const Vec& x, const BoundedProblem& problem);

double evaluate(const BoundedProblem& problem, const Vec& x, EvalCounter& counter,
                Rng* noise = nullptr);

}  // namespace shms
