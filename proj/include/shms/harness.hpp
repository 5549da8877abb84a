#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "shms/engine.hpp"
#include "shms/objective.hpp"

namespace shms::harness {

inline constexpr int kSchemaVersion = 1;

struct ExportFlags {
    bool trace = true;
    bool scatter = false;
    bool summary = true;
    bool stats_tables = true;
};

struct CampaignConfig {
    std::string problem = "F1";  // F1..F23 or sthe1..sthe3
    std::size_t dim = 30;        // ignored by fixed-dimension problems
    std::string label = "SHMS";
    // shms.seed is the base seed; max_evals 0 selects default_budget().
    ShmsConfig shms{.max_evals = 0};
    int trials = 30;
    std::filesystem::path out_dir = "results";
    ExportFlags exports;
    int scatter_every = 10;  // iterations between scatter snapshots
    int threads = 1;         // 0 uses every hardware thread

    void validate() const;
};

// Budget used when the config does not set one.
std::uint64_t default_budget(const std::string& problem, std::size_t dim);

// Overlays fields present in the JSON object; absent fields keep their value.
void apply_json(CampaignConfig& cfg, const std::string& json_text);
std::string to_json(const CampaignConfig& cfg);
CampaignConfig config_from_json(const std::string& json_text);

bool is_sthe(const std::string& problem);
BoundedProblem make_problem(const std::string& problem, std::size_t dim);

struct TrialRecord {
    int trial = 0;
    RunRecord run;
    bool failed = false;
    std::string error;
};

struct CampaignSummary {
    std::string problem;
    std::string label;
    std::size_t dim = 0;
    int trials = 0;
    int failed = 0;
    double best = 0.0;
    double worst = 0.0;
    double mean = 0.0;
    double median = 0.0;
    double std_dev = 0.0;
    double avg_evals = 0.0;
    double avg_wall_time = 0.0;
    Vec best_x;
    std::uint64_t base_seed = 0;
};

// Statistics over successful trials; throws when none succeeded.
CampaignSummary summarize(const CampaignConfig& cfg, const std::vector<TrialRecord>& records);

CampaignSummary run_campaign(const CampaignConfig& cfg);

std::string record_json(const TrialRecord& r);
TrialRecord parse_record(const std::string& text);
std::string summary_json(const CampaignSummary& s);
CampaignSummary parse_summary(const std::string& text);

std::vector<TrialRecord> load_records(const std::filesystem::path& campaign_dir);
CampaignConfig load_config(const std::filesystem::path& campaign_dir);
CampaignSummary load_summary(const std::filesystem::path& campaign_dir);

// Summary of the persisted records, recomputed from scratch.
CampaignSummary resummarize(const std::filesystem::path& campaign_dir);

// True when the two summaries agree in every field except wall time.
bool same_outcome(const CampaignSummary& a, const CampaignSummary& b);

struct ReportResult {
    std::vector<std::filesystem::path> written;
    std::vector<std::string> missing;
    int campaigns = 0;
};

// Writes rank, pairwise, closeness and campaign tables under <dir>/report.
ReportResult generate_reports(const std::filesystem::path& results_dir);

std::string read_file(const std::filesystem::path& p);
void write_file(const std::filesystem::path& p, const std::string& content);

}  // namespace shms::harness
