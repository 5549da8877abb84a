#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "shms/objective.hpp"
#include "shms/rng.hpp"

namespace shms {

inline constexpr double kDenominatorEps = 1e-30;
inline constexpr double kLoveDartSentinel = 1e30;

struct ShmsConfig {
    int homes = 3;
    int snails_per_home = 10;
    double c_frac = 0.1;
    double p_home = 0.1;
    std::uint64_t max_evals = 30000;
    int stagnation_window = 200;
    double stagnation_tol = 1e-12;
    std::uint64_t seed = 1;

    std::uint64_t population() const {
        return static_cast<std::uint64_t>(homes) * static_cast<std::uint64_t>(snails_per_home);
    }
    // Throws std::invalid_argument on any violated constraint.
    void validate() const;
};

struct SnailState {
    Vec x;
    // f_hist[0] is the value at x, then the two previous iterations.
    std::array<double, 3> f_hist{};
    double fecundity = 0.0;
    double ld_raw = 0.0;
    double ld_norm = 0.0;
    int home_id = 0;

    bool operator==(const SnailState&) const = default;
};

struct HomeAnchor {
    Vec x;
    double f = 0.0;

    bool operator==(const HomeAnchor&) const = default;
};

struct ColonyState {
    std::vector<SnailState> snails;
    std::vector<HomeAnchor> homes;
    Vec c;  // per-dimension neighbourhood half-width, fixed at init
    Vec best_x;
    double best_f = 0.0;
    std::uint64_t iteration = 0;
    EvalCounter counter;
    Rng noise;  // stream handed to stochastic objectives

    std::vector<std::size_t> members(int home) const;
    bool same_state(const ColonyState& o) const;
};

struct RunRecord {
    std::uint64_t seed = 0;
    std::vector<double> best_trace;  // entry 0 is the post-initialisation best
    Vec final_x;
    double final_f = 0.0;
    std::uint64_t evals = 0;
    double wall_time = 0.0;
    bool stagnated = false;
};

ColonyState init_colony(const BoundedProblem& problem, const ShmsConfig& cfg, Rng& rng);

double fecundity_index(double f0, double f1, double f2, Rng& rng);

// Inverse-gap weights on min-shifted values; defined for any finite input.
Vec selection_probabilities(const Vec& values);

std::size_t roulette_select(const Vec& p, Rng& rng);

double love_dart_raw(double fecundity, double f_s, double f_fecund);

// Min-max map to [0, 1]; a degenerate range maps every entry to 0.5.
Vec normalize_ld(const Vec& raw);

struct TrailMove {
    Vec y;
    int home_id = 0;
    bool switched = false;
};

TrailMove trail_following_update(const SnailState& snail, const SnailState& fecund,
                                 const ColonyState& colony, const BoundedProblem& problem,
                                 const ShmsConfig& cfg, Rng& rng);

// One iteration over every home. Returns the number of evaluations spent.
std::uint64_t step(ColonyState& colony, const BoundedProblem& problem, const ShmsConfig& cfg,
                   Rng& rng);

using IterationObserver = std::function<void(const ColonyState&)>;

RunRecord run(const BoundedProblem& problem, const ShmsConfig& cfg,
              const IterationObserver& observer = {});

}  // namespace shms
