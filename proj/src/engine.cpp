#include "shms/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace shms {

namespace {

// Noise stream seeds are decorrelated from the search stream.
constexpr std::uint64_t kNoiseSalt = 0x9e3779b97f4a7c15ULL;

void refresh_anchors(ColonyState& colony) {
    for (std::size_t h = 0; h < colony.homes.size(); ++h) {
        const SnailState* best = nullptr;
        for (const auto& s : colony.snails)
            if (s.home_id == static_cast<int>(h) && (!best || s.f_hist[0] < best->f_hist[0]))
                best = &s;
        // An empty home keeps its last anchor so it can still receive snails.
        if (best) colony.homes[h] = {best->x, best->f_hist[0]};
    }
}

void refresh_best(ColonyState& colony) {
    for (const auto& s : colony.snails) {
        if (s.f_hist[0] < colony.best_f) {
            colony.best_f = s.f_hist[0];
            colony.best_x = s.x;
        }
    }
}

Vec sample_near(const Vec& centre, const Vec& c, Rng& rng) {
    Vec y(centre.size());
    for (std::size_t d = 0; d < centre.size(); ++d) y[d] = rng.uniform(centre[d] - c[d], centre[d] + c[d]);
    return y;
}

}  // namespace

void ShmsConfig::validate() const {
    if (homes < 1) throw std::invalid_argument("homes must be >= 1");
    if (snails_per_home < 2) throw std::invalid_argument("snails_per_home must be >= 2");
    if (!(c_frac > 0.0 && c_frac <= 1.0)) throw std::invalid_argument("c_frac must lie in (0, 1]");
    if (!(p_home >= 0.0 && p_home <= 1.0)) throw std::invalid_argument("p_home must lie in [0, 1]");
    if (max_evals < population()) throw std::invalid_argument("max_evals must be >= homes * snails_per_home");
    if (stagnation_window < 1) throw std::invalid_argument("stagnation_window must be >= 1");
    if (!(stagnation_tol >= 0.0)) throw std::invalid_argument("stagnation_tol must be >= 0");
}

std::vector<std::size_t> ColonyState::members(int home) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < snails.size(); ++i)
        if (snails[i].home_id == home) out.push_back(i);
    return out;
}

bool ColonyState::same_state(const ColonyState& o) const {
    return snails == o.snails && homes == o.homes && c == o.c && best_x == o.best_x &&
           best_f == o.best_f && iteration == o.iteration && counter.count == o.counter.count;
}

ColonyState init_colony(const BoundedProblem& problem, const ShmsConfig& cfg, Rng& rng) {
    cfg.validate();
    problem.validate();
    ColonyState colony;
    colony.noise = Rng(cfg.seed ^ kNoiseSalt);
    colony.c.resize(problem.dim);
    for (std::size_t d = 0; d < problem.dim; ++d) colony.c[d] = cfg.c_frac * problem.width(d);

    colony.homes.resize(static_cast<std::size_t>(cfg.homes));
    for (auto& home : colony.homes) {
        home.x.resize(problem.dim);
        for (std::size_t d = 0; d < problem.dim; ++d)
            home.x[d] = rng.uniform(problem.lower[d], problem.upper[d]);
        home.f = std::numeric_limits<double>::infinity();
    }

    colony.best_f = std::numeric_limits<double>::infinity();
    colony.snails.reserve(cfg.population());
    for (int h = 0; h < cfg.homes; ++h) {
        for (int s = 0; s < cfg.snails_per_home; ++s) {
            SnailState snail;
            snail.home_id = h;
            snail.x = clamp(sample_near(colony.homes[h].x, colony.c, rng), problem);
            double f = evaluate(problem, snail.x, colony.counter, &colony.noise);
            snail.f_hist = {f, f, f};
            colony.snails.push_back(std::move(snail));
        }
    }
    refresh_anchors(colony);
    refresh_best(colony);
    return colony;
}

double fecundity_index(double f0, double f1, double f2, Rng& rng) {
    double den = std::abs(f0 - f2);
    if (den > kDenominatorEps) {
        double q = std::abs(f0 - f1) / den;
        if (q != 0.0 && std::isfinite(q)) return q;
    }
    return rng.uniform_open();
}

Vec selection_probabilities(const Vec& values) {
    if (values.empty()) throw std::invalid_argument("selection_probabilities: empty input");
    double lo = *std::min_element(values.begin(), values.end());
    // Strictly positive values use 1/f directly; otherwise shift so the
    // minimum sits just above zero.
    double offset = lo > 0.0 ? 0.0 : lo - 1e-12 * (1.0 + std::abs(lo));
    Vec p(values.size());
    double total = 0.0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        p[i] = 1.0 / (values[i] - offset);
        total += p[i];
    }
    for (double& v : p) v /= total;
    return p;
}

std::size_t roulette_select(const Vec& p, Rng& rng) {
    double u = rng.uniform();
    double acc = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        acc += p[i];
        if (u < acc) return i;
    }
    // Rounding left u above the final partial sum; take the last nonzero slot.
    for (std::size_t i = p.size(); i-- > 0;)
        if (p[i] > 0.0) return i;
    return p.size() - 1;
}

double love_dart_raw(double fecundity, double f_s, double f_fecund) {
    double gap = f_s - f_fecund;
    if (std::abs(gap) <= kDenominatorEps) return kLoveDartSentinel;
    return 1.0 / (fecundity * gap);
}

Vec normalize_ld(const Vec& raw) {
    auto [lo_it, hi_it] = std::minmax_element(raw.begin(), raw.end());
    double lo = *lo_it, hi = *hi_it;
    Vec out(raw.size(), 0.5);
    if (hi - lo <= kDenominatorEps) return out;
    for (std::size_t i = 0; i < raw.size(); ++i) out[i] = std::clamp((raw[i] - lo) / (hi - lo), 0.0, 1.0);
    return out;
}

TrailMove trail_following_update(const SnailState& snail, const SnailState& fecund,
                                 const ColonyState& colony, const BoundedProblem& problem,
                                 const ShmsConfig& cfg, Rng& rng) {
    TrailMove move;
    move.home_id = snail.home_id;
    const int homes = static_cast<int>(colony.homes.size());
    if (homes > 1 && cfg.p_home > 0.0 && rng.uniform() < cfg.p_home) {
        int other = static_cast<int>(rng.index(static_cast<std::size_t>(homes - 1)));
        if (other >= snail.home_id) ++other;
        move.home_id = other;
        move.switched = true;
        move.y = clamp(sample_near(colony.homes[other].x, colony.c, rng), problem);
        return move;
    }
    move.y.resize(snail.x.size());
    for (std::size_t d = 0; d < snail.x.size(); ++d) {
        double r = snail.ld_norm * std::abs(snail.x[d] - fecund.x[d]);
        move.y[d] = r > 0.0 ? rng.uniform(fecund.x[d] - r, fecund.x[d] + r) : fecund.x[d];
    }
    move.y = clamp(move.y, problem);
    return move;
}

std::uint64_t step(ColonyState& colony, const BoundedProblem& problem, const ShmsConfig& cfg,
                   Rng& rng) {
    const std::uint64_t start = colony.counter.count;
    std::vector<std::vector<std::size_t>> groups;
    for (int h = 0; h < static_cast<int>(colony.homes.size()); ++h) groups.push_back(colony.members(h));
    std::vector<int> size(groups.size());
    for (std::size_t h = 0; h < groups.size(); ++h) size[h] = static_cast<int>(groups[h].size());

    bool exhausted = false;
    for (std::size_t h = 0; h < groups.size() && !exhausted; ++h) {
        const auto& idx = groups[h];
        if (idx.empty()) continue;

        Vec f(idx.size());
        for (std::size_t k = 0; k < idx.size(); ++k) {
            SnailState& s = colony.snails[idx[k]];
            s.fecundity = fecundity_index(s.f_hist[0], s.f_hist[1], s.f_hist[2], rng);
            f[k] = s.f_hist[0];
        }
        const std::size_t fk = roulette_select(selection_probabilities(f), rng);
        const SnailState fecund = colony.snails[idx[fk]];

        // The fecund snail's own dart, and exact ties, carry the sentinel. They
        // are kept out of the min-max range and get the full effect instead.
        Vec finite;
        for (std::size_t k = 0; k < idx.size(); ++k) {
            SnailState& s = colony.snails[idx[k]];
            s.ld_raw = k == fk ? kLoveDartSentinel : love_dart_raw(s.fecundity, s.f_hist[0], fecund.f_hist[0]);
            if (s.ld_raw != kLoveDartSentinel) finite.push_back(s.ld_raw);
        }
        Vec norm = finite.empty() ? Vec{} : normalize_ld(finite);
        for (std::size_t k = 0, j = 0; k < idx.size(); ++k) {
            SnailState& s = colony.snails[idx[k]];
            s.ld_norm = s.ld_raw == kLoveDartSentinel ? 1.0 : norm[j++];
        }

        for (std::size_t k = 0; k < idx.size(); ++k) {
            SnailState& s = colony.snails[idx[k]];
            if (k == fk) {
                s.f_hist = {s.f_hist[0], s.f_hist[0], s.f_hist[1]};
                continue;
            }
            if (colony.counter.count >= cfg.max_evals) {
                exhausted = true;
                break;
            }
            TrailMove move = trail_following_update(s, fecund, colony, problem, cfg, rng);
            // A home never drops below two snails, so roulette always has a choice.
            if (move.switched && size[static_cast<std::size_t>(s.home_id)] <= 2) {
                s.f_hist = {s.f_hist[0], s.f_hist[0], s.f_hist[1]};
                continue;
            }
            double fy = evaluate(problem, move.y, colony.counter, &colony.noise);
            double current = s.f_hist[0];
            if (fy <= current) {
                s.x = std::move(move.y);
                current = fy;
                if (move.switched) {
                    --size[static_cast<std::size_t>(s.home_id)];
                    ++size[static_cast<std::size_t>(move.home_id)];
                    s.home_id = move.home_id;
                }
            }
            s.f_hist = {current, s.f_hist[0], s.f_hist[1]};
        }
    }
    refresh_anchors(colony);
    refresh_best(colony);
    ++colony.iteration;
    return colony.counter.count - start;
}

RunRecord run(const BoundedProblem& problem, const ShmsConfig& cfg, const IterationObserver& observer) {
    auto t0 = std::chrono::steady_clock::now();
    Rng rng(cfg.seed);
    ColonyState colony = init_colony(problem, cfg, rng);
    RunRecord rec;
    rec.seed = cfg.seed;
    rec.best_trace.push_back(colony.best_f);
    if (observer) observer(colony);

    const auto window = static_cast<std::size_t>(cfg.stagnation_window);
    while (colony.counter.count < cfg.max_evals) {
        step(colony, problem, cfg, rng);
        rec.best_trace.push_back(colony.best_f);
        if (observer) observer(colony);
        const std::size_t n = rec.best_trace.size();
        if (n > window && rec.best_trace[n - 1 - window] - rec.best_trace[n - 1] < cfg.stagnation_tol) {
            rec.stagnated = true;
            break;
        }
    }
    rec.final_x = colony.best_x;
    rec.final_f = colony.best_f;
    rec.evals = colony.counter.count;
    rec.wall_time = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return rec;
}

}  // namespace shms
