#pragma once

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "shms/objective.hpp"

namespace shms::sthe {

class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

class UnknownCase : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr double kInfeasiblePenalty = 1e12;

struct Stream {
    std::string fluid;
    double mass_flow;    // kg/s
    double t_in;         // degC
    double t_out;        // degC
    double density;      // kg/m3
    double cp;           // J/kg K
    double viscosity;    // Pa s, bulk
    double viscosity_w;  // Pa s, at wall
    double conductivity; // W/m K
    double fouling;      // m2 K/W
    double pump_efficiency;
};

struct Economics {
    double a1 = 8000.0;  // EUR
    double a2 = 259.2;   // EUR/m2^a3
    double a3 = 0.91;
    double energy_price = 0.12;  // EUR/kWh
    double hours = 7000.0;       // h/yr
    double discount = 0.1;
    int years = 10;
};

struct Interval {
    double lo;
    double hi;
};

struct StheCase {
    int id;
    double duty_mw;
    Stream shell;
    Stream tube;
    int tube_passes = 2;
    double pass_loss = 4.0;  // return-loss constant in the tube pressure drop
    Economics econ;
    Interval d_o;
    Interval d_s;
    Interval baffle;
    Interval length_ratio;  // L / D_s

    double duty_w() const { return duty_mw * 1e6; }
};

struct Decision {
    double d_o;  // m
    double d_s;  // m
    double b;    // m
    double L;    // m
};

struct Design {
    Decision x;
    double d_i, P_t, C_1;
    int n_t;
    double N_t;
    double v_t, Re_t, Pr_t, h_t, f_t, dP_t;
    double a_s, D_e, v_s, Re_s, Pr_s, h_s, f_s, dP_s;
    double U, lmtd, F, S;
    double pumping_power;  // W
};

struct CostReport {
    double C_inv;
    double C_annual;
    double C_total_disc;
    double C_total;
};

StheCase make_case(int id);

std::pair<Design, CostReport> evaluate_design(const StheCase& c, const Decision& d);

// DomainError becomes kInfeasiblePenalty.
double total_cost(const StheCase& c, const Decision& d);

double lmtd_counterflow(const Stream& hot, const Stream& cold);
double f_correction(const Stream& hot, const Stream& cold);

// Optimiser view: coordinates (d_o, D_s, b, L/D_s).
Decision decode(const Vec& x);
BoundedProblem make_problem(const StheCase& c);

enum class Direction { Up, Down, Equal };

struct Closeness {
    double percent;
    Direction direction;
};

// Gap between a reference cost and ours as a percentage of the reference.
// Up means ours is cheaper.
Closeness closeness_percent(double reference, double candidate);
std::string arrow(Direction d);

// Row-per-parameter listing in the published design-table order.
std::vector<std::pair<std::string, double>> design_rows(const Design& d, const CostReport& c);

std::string case_json(const StheCase& c);

}  // namespace shms::sthe
