#include "shms/sthe.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace shms::sthe {

namespace {

using std::numbers::pi;

struct LayoutConstants {
    int passes;
    double K1;
    double n1;
};

// Triangular pitch tube-count correlation.
constexpr std::array<LayoutConstants, 5> kLayout = {{
    {1, 0.319, 2.142},
    {2, 0.249, 2.207},
    {4, 0.175, 2.285},
    {6, 0.0743, 2.499},
    {8, 0.0365, 2.675},
}};

LayoutConstants layout(int passes) {
    for (const auto& l : kLayout)
        if (l.passes == passes) return l;
    throw DomainError("unsupported tube pass count " + std::to_string(passes));
}

double prandtl(const Stream& s) { return s.viscosity * s.cp / s.conductivity; }

nlohmann::json stream_json(const Stream& s) {
    return {{"fluid", s.fluid},          {"mass_flow_kg_s", s.mass_flow},   {"t_in_c", s.t_in},
            {"t_out_c", s.t_out},        {"density_kg_m3", s.density},     {"cp_j_kgk", s.cp},
            {"viscosity_pa_s", s.viscosity}, {"viscosity_wall_pa_s", s.viscosity_w},
            {"conductivity_w_mk", s.conductivity}, {"fouling_m2k_w", s.fouling},
            {"pump_efficiency", s.pump_efficiency}};
}

nlohmann::json interval_json(const Interval& i) { return {i.lo, i.hi}; }

}  // namespace

StheCase make_case(int id) {
    StheCase c{};
    c.id = id;
    switch (id) {
        case 1:
            c.duty_mw = 4.34;
            c.shell = {"methanol", 27.8, 95.0, 40.0, 750.0, 2840.0, 0.00034, 0.00038, 0.19, 0.00033, 1.0};
            c.tube = {"sea water", 68.9, 25.0, 40.0, 995.0, 4200.0, 0.0008, 0.00052, 0.59, 0.00002, 0.8};
            c.pass_loss = 4.0;
            break;
        case 2:
            c.duty_mw = 1.44;
            c.shell = {"kerosene", 5.52, 199.0, 93.3, 850.0, 2470.0, 0.0004, 0.000212, 0.13, 0.00061, 1.0};
            c.tube = {"crude oil", 18.8, 37.8, 76.7, 995.0, 2050.0, 0.00358, 0.00358, 0.13, 0.00061, 0.8};
            c.pass_loss = 2.5;
            break;
        case 3:
            c.duty_mw = 0.46;
            c.shell = {"distilled water", 22.07, 33.9, 29.4, 995.0, 4180.0, 0.0008, 0.0008, 0.62, 0.00017, 1.0};
            c.tube = {"raw water", 35.31, 23.9, 26.7, 999.0, 4180.0, 0.00092, 0.00092, 0.62, 0.00017, 0.8};
            c.pass_loss = 2.5;
            break;
        default:
            throw UnknownCase("unknown heat exchanger case " + std::to_string(id));
    }
    c.tube_passes = 2;
    c.d_o = {0.01, 0.051};
    c.d_s = {0.1, 1.5};
    c.baffle = {0.05, 0.5};
    c.length_ratio = {1.5, 2.0};
    return c;
}

double lmtd_counterflow(const Stream& hot, const Stream& cold) {
    double d1 = hot.t_in - cold.t_out;
    double d2 = hot.t_out - cold.t_in;
    if (d1 <= 0.0 || d2 <= 0.0) throw DomainError("temperature cross: LMTD undefined");
    if (std::abs(d1 - d2) < 1e-12) return d1;
    return (d1 - d2) / std::log(d1 / d2);
}

double f_correction(const Stream& hot, const Stream& cold) {
    double R = (hot.t_in - hot.t_out) / (cold.t_out - cold.t_in);
    double P = (cold.t_out - cold.t_in) / (hot.t_in - cold.t_in);
    double r = std::sqrt(R * R + 1.0);
    double F;
    if (std::abs(R - 1.0) < 1e-9) {
        F = r * P / (1.0 - P) / std::log((2.0 - P * (2.0 - r)) / (2.0 - P * (2.0 + r)));
    } else {
        F = r / (R - 1.0) * std::log((1.0 - P) / (1.0 - P * R)) /
            std::log((2.0 - P * (R + 1.0 - r)) / (2.0 - P * (R + 1.0 + r)));
    }
    if (!std::isfinite(F) || F <= 0.0) throw DomainError("LMTD correction factor undefined");
    return F;
}

std::pair<Design, CostReport> evaluate_design(const StheCase& c, const Decision& x) {
    if (!(x.d_o > 0 && x.d_s > 0 && x.b > 0 && x.L > 0)) throw DomainError("non-positive geometry");
    const Stream& s = c.shell;
    const Stream& t = c.tube;
    Design d{};
    d.x = x;
    d.n_t = c.tube_passes;
    d.d_i = 0.8 * x.d_o;
    d.P_t = 1.25 * x.d_o;
    d.C_1 = d.P_t - x.d_o;

    auto lay = layout(d.n_t);
    d.N_t = lay.K1 * std::pow(x.d_s / x.d_o, lay.n1);
    if (d.N_t < 1.0) throw DomainError("shell too small for a single tube");

    // Tube side.
    d.v_t = t.mass_flow / (pi / 4.0 * d.d_i * d.d_i * t.density) * d.n_t / d.N_t;
    d.Re_t = t.density * d.v_t * d.d_i / t.viscosity;
    d.Pr_t = prandtl(t);
    double base = 1.82 * std::log10(d.Re_t) - 1.64;
    if (base <= 0.0) throw DomainError("tube Reynolds number below friction correlation range");
    d.f_t = 1.0 / (base * base);
    const double kt = t.conductivity / d.d_i;
    if (d.Re_t < 2300.0) {
        double gz = d.Re_t * d.Pr_t * d.d_i / x.L;
        d.h_t = kt * (3.657 + 0.0677 * std::pow(gz, 1.33) / (1.0 + 0.1 * d.Pr_t * std::pow(d.Re_t * d.d_i / x.L, 0.3)));
    } else if (d.Re_t < 10000.0) {
        double f8 = d.f_t / 8.0;
        d.h_t = kt * (f8 * (d.Re_t - 1000.0) * d.Pr_t /
                      (1.0 + 12.7 * std::sqrt(f8) * (std::pow(d.Pr_t, 2.0 / 3.0) - 1.0))) *
                (1.0 + std::pow(d.d_i / x.L, 0.67));
    } else {
        d.h_t = 0.027 * kt * std::pow(d.Re_t, 0.8) * std::cbrt(d.Pr_t) * std::pow(t.viscosity / t.viscosity_w, 0.14);
    }
    d.dP_t = t.density * d.v_t * d.v_t / 2.0 * (x.L * d.f_t / d.d_i + c.pass_loss) * d.n_t;

    // Shell side, Kern method.
    d.a_s = x.d_s * x.b * d.C_1 / d.P_t;
    d.D_e = 4.0 * (0.43 * d.P_t * d.P_t - 0.5 * pi * x.d_o * x.d_o / 4.0) / (0.5 * pi * x.d_o);
    d.v_s = s.mass_flow / (s.density * d.a_s);
    d.Re_s = s.density * d.v_s * d.D_e / s.viscosity;
    d.Pr_s = prandtl(s);
    d.h_s = 0.36 * s.conductivity / d.D_e * std::pow(d.Re_s, 0.55) * std::cbrt(d.Pr_s) *
            std::pow(s.viscosity / s.viscosity_w, 0.14);
    d.f_s = 2.0 * 0.72 * std::pow(d.Re_s, -0.15);
    d.dP_s = d.f_s * s.density * d.v_s * d.v_s / 2.0 * (x.L / x.b) * (x.d_s / d.D_e);

    d.U = 1.0 / (1.0 / d.h_s + s.fouling + x.d_o / d.d_i * (t.fouling + 1.0 / d.h_t));
    d.lmtd = lmtd_counterflow(s, t);
    d.F = f_correction(s, t);
    d.S = c.duty_w() / (d.U * d.F * d.lmtd);
    d.pumping_power = t.mass_flow / t.density * d.dP_t / t.pump_efficiency +
                      s.mass_flow / s.density * d.dP_s / s.pump_efficiency;

    CostReport r{};
    const Economics& e = c.econ;
    r.C_inv = e.a1 + e.a2 * std::pow(d.S, e.a3);
    r.C_annual = d.pumping_power * e.energy_price * e.hours / 1000.0;
    for (int k = 1; k <= e.years; ++k) r.C_total_disc += r.C_annual / std::pow(1.0 + e.discount, k);
    r.C_total = r.C_inv + r.C_total_disc;
    if (!std::isfinite(r.C_total)) throw DomainError("non-finite cost");
    return {d, r};
}

double total_cost(const StheCase& c, const Decision& d) {
    try {
        return evaluate_design(c, d).second.C_total;
    } catch (const DomainError&) {
        return kInfeasiblePenalty;
    }
}

Decision decode(const Vec& x) {
    if (x.size() != 4) throw DimensionMismatch("heat exchanger decision vector has 4 coordinates");
    return {x[0], x[1], x[2], x[3] * x[1]};
}

BoundedProblem make_problem(const StheCase& c) {
    BoundedProblem p;
    p.name = "sthe" + std::to_string(c.id);
    p.dim = 4;
    p.lower = {c.d_o.lo, c.d_s.lo, c.baffle.lo, c.length_ratio.lo};
    p.upper = {c.d_o.hi, c.d_s.hi, c.baffle.hi, c.length_ratio.hi};
    p.eval = [c](const Vec& x, Rng*) { return total_cost(c, decode(x)); };
    return p;
}

Closeness closeness_percent(double reference, double candidate) {
    if (!(reference > 0.0) || !(candidate > 0.0)) throw std::invalid_argument("closeness needs positive costs");
    if (reference == candidate) return {0.0, Direction::Equal};
    double pct = 100.0 * std::abs(reference - candidate) / reference;
    return {pct, reference > candidate ? Direction::Up : Direction::Down};
}

std::string arrow(Direction d) {
    switch (d) {
        case Direction::Up: return "↑";
        case Direction::Down: return "↓";
        case Direction::Equal: return "=";
    }
    return "";
}

std::vector<std::pair<std::string, double>> design_rows(const Design& d, const CostReport& c) {
    return {{"D_s (m)", d.x.d_s},       {"L (m)", d.x.L},           {"b (m)", d.x.b},
            {"d_o (m)", d.x.d_o},       {"P_t (m)", d.P_t},         {"C_1", d.C_1},    
            {"n_t", double(d.n_t)},     {"N_t", d.N_t},             {"v_t (m/s)", d.v_t},
            {"Re_t", d.Re_t},           {"Pr_t", d.Pr_t},           {"h_t (W/m2K)", d.h_t},
            {"f_t", d.f_t},             {"dP_t (Pa)", d.dP_t},      {"a_s (m2)", d.a_s},
            {"D_e (m)", d.D_e},         {"v_s (m/s)", d.v_s},       {"Re_s", d.Re_s},
            {"Pr_s", d.Pr_s},           {"h_s (W/m2K)", d.h_s},     {"f_s", d.f_s},
            {"dP_s (Pa)", d.dP_s},      {"U (W/m2K)", d.U},         {"S (m2)", d.S},
            {"C_inv (EUR)", c.C_inv},   {"C_E (EUR/yr)", c.C_annual}, {"C_total_disc (EUR)", c.C_total_disc},
            {"C_total (EUR)", c.C_total}};
}

std::string case_json(const StheCase& c) {
    nlohmann::json j = {
        {"schema_version", 1},
        {"case_id", c.id},
        {"duty_mw", c.duty_mw},
        {"shell", stream_json(c.shell)},
        {"tube", stream_json(c.tube)},
        {"tube_passes", c.tube_passes},
        {"pass_loss", c.pass_loss},
        {"economics",
         {{"a1", c.econ.a1},
          {"a2", c.econ.a2},
          {"a3", c.econ.a3},
          {"energy_price_eur_kwh", c.econ.energy_price},
          {"hours_per_year", c.econ.hours},
          {"discount_rate", c.econ.discount},
          {"horizon_years", c.econ.years}}},
        {"bounds",
         {{"d_o_m", interval_json(c.d_o)},
          {"D_s_m", interval_json(c.d_s)},
          {"b_m", interval_json(c.baffle)},
          {"L_over_D_s", interval_json(c.length_ratio)}}},
    };
    return j.dump(2);
}

}  // namespace shms::sthe
