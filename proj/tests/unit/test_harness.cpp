#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

#include "shms/harness.hpp"
#include "shms/reference_data.hpp"
#include "shms/stats.hpp"

using namespace shms;
using namespace shms::harness;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("shms_test_" + std::to_string(rd()) + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

CampaignConfig quick(const fs::path& out, const std::string& problem = "F1", std::size_t dim = 5) {
    CampaignConfig c;
    c.problem = problem;
    c.dim = dim;
    c.trials = 4;
    c.shms.max_evals = 900;
    c.shms.seed = 100;
    c.out_dir = out;
    c.threads = 2;
    return c;
}

}  // namespace

TEST_CASE("default budgets") {
    CHECK(default_budget("F1", 30) == 30000);
    CHECK(default_budget("F1", 100) == 30000);
    CHECK(default_budget("F1", 500) == 100000);
    CHECK(default_budget("F1", 1000) == 100000);
    CHECK(default_budget("F16", 0) == 30000);
    CHECK(default_budget("sthe1", 0) == 20510);
    CHECK(default_budget("sthe2", 0) == 17235);
    CHECK(default_budget("sthe3", 0) == 44721);
}

TEST_CASE("config json round trip and overlay") {
    CampaignConfig c;
    c.problem = "F9";
    c.dim = 100;
    c.trials = 7;
    c.shms.homes = 4;
    c.shms.p_home = 0.25;
    c.shms.seed = 99;
    c.exports.scatter = true;
    auto back = config_from_json(to_json(c));
    CHECK(back.problem == "F9");
    CHECK(back.dim == 100);
    CHECK(back.trials == 7);
    CHECK(back.shms.homes == 4);
    CHECK(back.shms.p_home == 0.25);
    CHECK(back.shms.seed == 99);
    CHECK(back.shms.max_evals == 30000);
    CHECK(back.exports.scatter);

    CampaignConfig o = back;
    apply_json(o, R"({"trials": 3, "shms": {"c_frac": 0.2}})");
    CHECK(o.trials == 3);
    CHECK(o.shms.c_frac == 0.2);
    CHECK(o.shms.homes == 4);
    CHECK_THROWS(apply_json(o, R"({"schema_version": 9})"));
}

TEST_CASE("config validation") {
    CampaignConfig c;
    CHECK_NOTHROW(c.validate());
    c.trials = 0;
    CHECK_THROWS(c.validate());
    c = CampaignConfig{};
    c.problem = "F99";
    CHECK_THROWS(c.validate());
    c = CampaignConfig{};
    c.problem = "sthe4";
    CHECK_THROWS(c.validate());
    c = CampaignConfig{};
    c.shms.max_evals = 10;
    CHECK_THROWS(c.validate());
    CHECK(is_sthe("sthe2"));
    CHECK_FALSE(is_sthe("sthe"));
    CHECK(make_problem("sthe1", 999).dim == 4);
}

TEST_CASE("campaign writes one record and trace per trial and re-summarises exactly") {
    TempDir tmp;
    auto cfg = quick(tmp.path / "c1");
    cfg.exports.scatter = true;
    auto s = run_campaign(cfg);
    CHECK(s.trials == 4);
    CHECK(s.failed == 0);
    CHECK(s.best <= s.median);
    CHECK(s.best <= s.mean);
    CHECK(s.mean <= s.worst);
    CHECK(s.std_dev >= 0.0);
    for (int i = 0; i < 4; ++i) {
        char stem[8];
        std::snprintf(stem, sizeof stem, "%03d", i);
        CHECK(fs::exists(cfg.out_dir / "trials" / ("trial_" + std::string(stem) + ".json")));
        CHECK(fs::exists(cfg.out_dir / "trials" / ("trace_" + std::string(stem) + ".csv")));
        CHECK(fs::exists(cfg.out_dir / "trials" / ("scatter_" + std::string(stem) + ".csv")));
    }
    CHECK(fs::exists(cfg.out_dir / "summary.json"));
    CHECK(fs::exists(cfg.out_dir / "summary.csv"));

    CHECK(same_outcome(resummarize(cfg.out_dir), s));
    CHECK(same_outcome(load_summary(cfg.out_dir), s));
    auto again = resummarize(cfg.out_dir);
    CHECK(again.avg_wall_time == s.avg_wall_time);

    auto records = load_records(cfg.out_dir);
    REQUIRE(records.size() == 4);
    for (int i = 0; i < 4; ++i) {
        CHECK(records[i].trial == i);
        CHECK(records[i].run.seed == 100u + static_cast<unsigned>(i));
    }
}

TEST_CASE("same base seed reproduces the campaign regardless of thread count") {
    TempDir tmp;
    auto a = quick(tmp.path / "a");
    auto b = quick(tmp.path / "b");
    b.threads = 1;
    CHECK(same_outcome(run_campaign(a), run_campaign(b)));
    for (int i = 0; i < 4; ++i) {
        char name[32];
        std::snprintf(name, sizeof name, "trials/trace_%03d.csv", i);
        CHECK(read_file(a.out_dir / name) == read_file(b.out_dir / name));
    }
    auto c = quick(tmp.path / "c");
    c.shms.seed = 500;
    CHECK_FALSE(same_outcome(run_campaign(a), run_campaign(c)));
}

TEST_CASE("records and summaries round trip through their parsers") {
    TrialRecord r;
    r.trial = 3;
    r.run.seed = 12;
    r.run.best_trace = {5.0, 1.0 / 3.0, 1e-300};
    r.run.final_x = {0.1, -2.5};
    r.run.final_f = 1e-300;
    r.run.evals = 1234;
    r.run.wall_time = 0.25;
    r.run.stagnated = true;
    auto back = parse_record(record_json(r));
    CHECK(back.trial == 3);
    CHECK(back.run.best_trace == r.run.best_trace);
    CHECK(back.run.final_x == r.run.final_x);
    CHECK(back.run.final_f == r.run.final_f);
    CHECK(back.run.evals == 1234);
    CHECK(back.run.stagnated);

    CampaignSummary s;
    s.problem = "F3";
    s.label = "X";
    s.dim = 30;
    s.trials = 2;
    s.best = 0.1;
    s.mean = 0.7;
    s.median = 0.5;
    s.worst = 1.3;
    s.std_dev = std::sqrt(2.0);
    s.best_x = {1, 2};
    s.avg_wall_time = 3.0;
    auto sb = parse_summary(summary_json(s));
    CHECK(same_outcome(s, sb));
    CHECK(sb.avg_wall_time == 3.0);

    CHECK_THROWS(parse_summary(record_json(r)));
    CHECK_THROWS(parse_record(R"({"schema_version": 2, "kind": "trial_record"})"));
}

TEST_CASE("failed trials are counted but excluded from the statistics") {
    std::vector<TrialRecord> recs(3);
    recs[1].failed = true;
    recs[1].error = "boom";
    recs[0].run.final_f = 2.0;
    recs[2].run.final_f = 4.0;
    CampaignConfig cfg;
    cfg.problem = "F1";
    cfg.dim = 2;
    auto s = summarize(cfg, recs);
    CHECK(s.failed == 1);
    CHECK(s.trials == 3);
    CHECK(s.mean == 3.0);
    CHECK(s.median == 3.0);
    recs[0].failed = recs[2].failed = true;
    CHECK_THROWS(summarize(cfg, recs));
}

TEST_CASE("sthe campaign exports a design report") {
    TempDir tmp;
    auto cfg = quick(tmp.path / "s", "sthe2");
    cfg.trials = 2;
    auto s = run_campaign(cfg);
    CHECK(s.dim == 4);
    auto design = read_file(cfg.out_dir / "design_best.csv");
    CHECK(design.find("C_total (EUR)") != std::string::npos);
    auto summary = nlohmann::json::parse(read_file(cfg.out_dir / "summary.json"));
    for (const char* key : {"best", "mean", "worst", "std_dev", "avg_evals", "avg_wall_time_s"})
        CHECK(summary.contains(key));
}

TEST_CASE("report on an empty directory says so") {
    TempDir tmp;
    auto r = generate_reports(tmp.path);
    CHECK(r.campaigns == 0);
    auto text = read_file(tmp.path / "report" / "report.txt");
    CHECK(text.find("no campaigns") != std::string::npos);
    // Published-means tables are still produced.
    auto fr = stats::read_matrix_csv(read_file(tmp.path / "report" / "friedman_d30_published.csv"));
    CHECK(fr.problems.size() == reference::algorithms().size());
}

TEST_CASE("report from published means gives the expected order and closeness") {
    TempDir tmp;
    generate_reports(tmp.path);
    for (const auto& t : reference::mean_tables()) {
        std::string tag = t.dim ? "d" + std::to_string(t.dim) : "fixed";
        auto m = stats::read_matrix_csv(read_file(tmp.path / "report" / ("friedman_" + tag + "_published.csv")));
        auto r = stats::friedman_ranks(t.means);
        REQUIRE(m.problems == reference::algorithms());
        for (std::size_t j = 0; j < m.problems.size(); ++j) {
            CHECK(m.values[j][0] == r.mean_ranks[j]);
            CHECK(m.values[j][1] == r.ordering[j]);
            CHECK(m.values[j][2] == t.published_mean_ranks[j]);
        }
    }
    auto close = read_file(tmp.path / "report" / "closeness_published.csv");
    CHECK(close.find("1,ARGA,41913.54,41718.6558,0.4649") != std::string::npos);
    CHECK(close.find("3,PSO,20310,20744.3639,2.1386") != std::string::npos);
}

TEST_CASE("report over campaigns") {
    TempDir tmp;
    for (const char* id : {"F1", "F2", "F3", "F4", "F5", "F6"}) {
        auto cfg = quick(tmp.path / id, id, 30);
        cfg.trials = 2;
        cfg.shms.max_evals = 300;
        run_campaign(cfg);
    }
    auto sc = quick(tmp.path / "sthe1", "sthe1");
    sc.trials = 2;
    run_campaign(sc);
    fs::create_directories(tmp.path / "broken");
    write_file(tmp.path / "broken" / "config.json", "{}");

    auto r = generate_reports(tmp.path);
    CHECK(r.campaigns == 7);
    CHECK_FALSE(r.missing.empty());
    CHECK(fs::exists(tmp.path / "report" / "campaigns.csv"));
    CHECK(fs::exists(tmp.path / "report" / "closeness_case1_SHMS.csv"));
    CHECK(fs::exists(tmp.path / "report" / "friedman_d30_SHMS.csv"));
    auto pairs = stats::parse_pairwise_csv(read_file(tmp.path / "report" / "pairwise_d30_SHMS.csv"));
    CHECK(pairs.size() == 12);
    auto m = stats::read_matrix_csv(read_file(tmp.path / "report" / "matrix_d30_SHMS.csv"));
    CHECK(m.problems.size() == 6);
}
