#pragma once

#include <string>
#include <vector>

// Published reference values shipped with the library: per-problem mean
// results of thirteen algorithms, their rank summaries, heat exchanger design
// columns and campaign summaries.
namespace shms::reference {

const std::vector<std::string>& algorithms();

struct MeanTable {
    int dim;  // 0 for the fixed-dimension set F14..F23
    std::vector<std::string> problems;
    std::vector<std::vector<double>> means;  // [problem][algorithm]
    std::vector<double> published_mean_ranks;
    std::vector<int> published_ranking;
};

const std::vector<MeanTable>& mean_tables();
const MeanTable& mean_table(int dim);

// One published design column. NaN marks a cell that was not reported;
// n_t == 0 means the pass count was not reported.
struct DesignColumn {
    int case_id;
    std::string algorithm;
    double D_s, L, b, d_o;
    int n_t;
    double N_t, v_t, Re_t, h_t, dP_t, Re_s, h_s, dP_s, U, S, C_inv, C_annual, C_total_disc, C_total;
};

const std::vector<DesignColumn>& design_columns();
const DesignColumn& design_column(int case_id, const std::string& algorithm);

struct ClosenessEntry {
    int case_id;
    std::string algorithm;
    double cost;
    double percent;
    bool up;
};

const std::vector<ClosenessEntry>& closeness_entries();

struct CampaignRow {
    int case_id;
    double best, mean, worst, std_dev;
    double avg_evals;
    double avg_seconds;
};

const std::vector<CampaignRow>& campaign_rows();

}  // namespace shms::reference
