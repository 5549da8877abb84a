#include "shms/harness.hpp"

#include <algorithm>
#include <charconv>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "shms/benchmarks.hpp"
#include "shms/reference_data.hpp"
#include "shms/stats.hpp"
#include "shms/sthe.hpp"

namespace shms::harness {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Shortest text that parses back to the same double.
std::string g17(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string trial_stem(int i) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%03d", i);
    return buf;
}

int sthe_case(const std::string& problem) { return problem[4] - '0'; }

void check_schema(const json& j, const std::string& kind) {
    if (j.value("schema_version", 0) != kSchemaVersion)
        throw std::runtime_error(kind + ": unsupported schema_version");
    if (j.value("kind", std::string{}) != kind) throw std::runtime_error("expected a " + kind + " document");
}

ShmsConfig resolved(const CampaignConfig& cfg) {
    ShmsConfig s = cfg.shms;
    if (s.max_evals == 0) s.max_evals = default_budget(cfg.problem, cfg.dim);
    return s;
}

struct ScatterRow {
    std::uint64_t iteration;
    int home;
    bool anchor;
    std::size_t index;
    Vec x;
};

std::string scatter_csv(const std::vector<ScatterRow>& rows, std::size_t dim) {
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << "\niteration,home_id,role,index";
    for (std::size_t d = 0; d < dim; ++d) out << ",x" << d;
    out << '\n';
    for (const auto& r : rows) {
        out << r.iteration << ',' << r.home << ',' << (r.anchor ? "home" : "snail") << ',' << r.index;
        for (double v : r.x) out << ',' << g17(v);
        out << '\n';
    }
    return out.str();
}

std::string trace_csv(const RunRecord& r) {
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << "\niteration,best_f\n";
    for (std::size_t i = 0; i < r.best_trace.size(); ++i) out << i << ',' << g17(r.best_trace[i]) << '\n';
    return out.str();
}

std::string design_csv(int case_id, const Vec& x) {
    auto c = sthe::make_case(case_id);
    auto [d, cost] = sthe::evaluate_design(c, sthe::decode(x));
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << "\nparameter,value\n";
    for (const auto& [k, v] : sthe::design_rows(d, cost)) out << k << ',' << g17(v) << '\n';
    return out.str();
}

std::string summary_csv_header() { return "problem,label,best,mean,worst,std_dev,avg_evals,avg_wall_time_s\n"; }

std::string summary_csv_row(const CampaignSummary& s) {
    std::ostringstream out;
    out << s.problem << ',' << s.label << ',' << g17(s.best) << ',' << g17(s.mean) << ',' << g17(s.worst) << ','
        << g17(s.std_dev) << ',' << g17(s.avg_evals) << ',' << g17(s.avg_wall_time) << '\n';
    return out.str();
}

}  // namespace

bool is_sthe(const std::string& problem) {
    return problem.size() == 5 && problem.rfind("sthe", 0) == 0 && problem[4] >= '1' && problem[4] <= '3';
}

BoundedProblem make_problem(const std::string& problem, std::size_t dim) {
    if (is_sthe(problem)) return sthe::make_problem(sthe::make_case(sthe_case(problem)));
    const auto& spec = benchmark_spec(problem);
    return make_benchmark(problem, spec.fixed_dim ? 0 : dim);
}

std::uint64_t default_budget(const std::string& problem, std::size_t dim) {
    if (is_sthe(problem)) {
        for (const auto& row : reference::campaign_rows())
            if (row.case_id == sthe_case(problem)) return static_cast<std::uint64_t>(std::ceil(row.avg_evals));
    }
    if (benchmark_spec(problem).fixed_dim != 0) return 30000;
    return dim >= 500 ? 100000 : 30000;
}

void CampaignConfig::validate() const {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    if (scatter_every < 1) throw std::invalid_argument("scatter_every must be >= 1");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
    make_problem(problem, dim).validate();
    resolved(*this).validate();
}

void apply_json(CampaignConfig& cfg, const std::string& text) {
    json j = json::parse(text);
    if (j.contains("schema_version") && j["schema_version"] != kSchemaVersion)
        throw std::runtime_error("config: unsupported schema_version");
    cfg.problem = j.value("problem", cfg.problem);
    cfg.dim = j.value("dim", cfg.dim);
    cfg.label = j.value("label", cfg.label);
    cfg.trials = j.value("trials", cfg.trials);
    if (j.contains("out_dir")) cfg.out_dir = j["out_dir"].get<std::string>();
    cfg.scatter_every = j.value("scatter_every", cfg.scatter_every);
    cfg.threads = j.value("threads", cfg.threads);
    if (j.contains("exports")) {
        const auto& e = j["exports"];
        cfg.exports.trace = e.value("trace", cfg.exports.trace);
        cfg.exports.scatter = e.value("scatter", cfg.exports.scatter);
        cfg.exports.summary = e.value("summary", cfg.exports.summary);
        cfg.exports.stats_tables = e.value("stats_tables", cfg.exports.stats_tables);
    }
    if (j.contains("shms")) {
        const auto& s = j["shms"];
        cfg.shms.homes = s.value("homes", cfg.shms.homes);
        cfg.shms.snails_per_home = s.value("snails_per_home", cfg.shms.snails_per_home);
        cfg.shms.c_frac = s.value("c_frac", cfg.shms.c_frac);
        cfg.shms.p_home = s.value("p_home", cfg.shms.p_home);
        cfg.shms.max_evals = s.value("max_evals", cfg.shms.max_evals);
        cfg.shms.stagnation_window = s.value("stagnation_window", cfg.shms.stagnation_window);
        cfg.shms.stagnation_tol = s.value("stagnation_tol", cfg.shms.stagnation_tol);
        cfg.shms.seed = s.value("seed", cfg.shms.seed);
    }
}

std::string to_json(const CampaignConfig& cfg) {
    ShmsConfig s = resolved(cfg);
    json j = {{"schema_version", kSchemaVersion},
              {"kind", "campaign_config"},
              {"problem", cfg.problem},
              {"dim", make_problem(cfg.problem, cfg.dim).dim},
              {"label", cfg.label},
              {"trials", cfg.trials},
              {"out_dir", cfg.out_dir.string()},
              {"scatter_every", cfg.scatter_every},
              {"threads", cfg.threads},
              {"exports",
               {{"trace", cfg.exports.trace},
                {"scatter", cfg.exports.scatter},
                {"summary", cfg.exports.summary},
                {"stats_tables", cfg.exports.stats_tables}}},
              {"shms",
               {{"homes", s.homes},
                {"snails_per_home", s.snails_per_home},
                {"c_frac", s.c_frac},
                {"p_home", s.p_home},
                {"max_evals", s.max_evals},
                {"stagnation_window", s.stagnation_window},
                {"stagnation_tol", s.stagnation_tol},
                {"seed", s.seed}}}};
    return j.dump(2);
}

CampaignConfig config_from_json(const std::string& text) {
    CampaignConfig cfg;
    apply_json(cfg, text);
    return cfg;
}

CampaignSummary summarize(const CampaignConfig& cfg, const std::vector<TrialRecord>& records) {
    CampaignSummary s;
    s.problem = cfg.problem;
    s.label = cfg.label;
    s.dim = make_problem(cfg.problem, cfg.dim).dim;
    s.trials = static_cast<int>(records.size());
    s.base_seed = cfg.shms.seed;
    std::vector<const TrialRecord*> ok;
    for (const auto& r : records) {
        if (r.failed) ++s.failed;
        else ok.push_back(&r);
    }
    if (ok.empty()) throw std::runtime_error("campaign has no successful trials");
    const double n = static_cast<double>(ok.size());
    const TrialRecord* best = ok.front();
    s.worst = ok.front()->run.final_f;
    double sum = 0.0, evals = 0.0, wall = 0.0;
    std::vector<double> finals;
    for (const auto* r : ok) {
        if (r->run.final_f < best->run.final_f) best = r;
        s.worst = std::max(s.worst, r->run.final_f);
        sum += r->run.final_f;
        evals += static_cast<double>(r->run.evals);
        wall += r->run.wall_time;
        finals.push_back(r->run.final_f);
    }
    s.best = best->run.final_f;
    s.best_x = best->run.final_x;
    s.mean = sum / n;
    double ss = 0.0;
    for (double f : finals) ss += (f - s.mean) * (f - s.mean);
    s.std_dev = ok.size() > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    std::sort(finals.begin(), finals.end());
    std::size_t m = finals.size() / 2;
    s.median = finals.size() % 2 ? finals[m] : 0.5 * (finals[m - 1] + finals[m]);
    s.avg_evals = evals / n;
    s.avg_wall_time = wall / n;
    return s;
}

std::string record_json(const TrialRecord& r) {
    json j = {{"schema_version", kSchemaVersion},
              {"kind", "trial_record"},
              {"trial", r.trial},
              {"seed", r.run.seed},
              {"failed", r.failed},
              {"error", r.error},
              {"final_f", r.run.final_f},
              {"final_x", r.run.final_x},
              {"evals", r.run.evals},
              {"wall_time_s", r.run.wall_time},
              {"stagnated", r.run.stagnated},
              {"best_trace", r.run.best_trace}};
    return j.dump();
}

TrialRecord parse_record(const std::string& text) {
    json j = json::parse(text);
    check_schema(j, "trial_record");
    TrialRecord r;
    r.trial = j.at("trial").get<int>();
    r.failed = j.at("failed").get<bool>();
    r.error = j.at("error").get<std::string>();
    r.run.seed = j.at("seed").get<std::uint64_t>();
    r.run.final_f = j.at("final_f").is_null() ? 0.0 : j.at("final_f").get<double>();
    r.run.final_x = j.at("final_x").get<Vec>();
    r.run.evals = j.at("evals").get<std::uint64_t>();
    r.run.wall_time = j.at("wall_time_s").get<double>();
    r.run.stagnated = j.at("stagnated").get<bool>();
    r.run.best_trace = j.at("best_trace").get<std::vector<double>>();
    return r;
}

std::string summary_json(const CampaignSummary& s) {
    json j = {{"schema_version", kSchemaVersion},
              {"kind", "campaign_summary"},
              {"problem", s.problem},
              {"label", s.label},
              {"dim", s.dim},
              {"trials", s.trials},
              {"failed", s.failed},
              {"best", s.best},
              {"worst", s.worst},
              {"mean", s.mean},
              {"median", s.median},
              {"std_dev", s.std_dev},
              {"avg_evals", s.avg_evals},
              {"avg_wall_time_s", s.avg_wall_time},
              {"best_x", s.best_x},
              {"base_seed", s.base_seed}};
    return j.dump(2);
}

CampaignSummary parse_summary(const std::string& text) {
    json j = json::parse(text);
    check_schema(j, "campaign_summary");
    CampaignSummary s;
    s.problem = j.at("problem").get<std::string>();
    s.label = j.at("label").get<std::string>();
    s.dim = j.at("dim").get<std::size_t>();
    s.trials = j.at("trials").get<int>();
    s.failed = j.at("failed").get<int>();
    s.best = j.at("best").get<double>();
    s.worst = j.at("worst").get<double>();
    s.mean = j.at("mean").get<double>();
    s.median = j.at("median").get<double>();
    s.std_dev = j.at("std_dev").get<double>();
    s.avg_evals = j.at("avg_evals").get<double>();
    s.avg_wall_time = j.at("avg_wall_time_s").get<double>();
    s.best_x = j.at("best_x").get<Vec>();
    s.base_seed = j.at("base_seed").get<std::uint64_t>();
    return s;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + p.string());
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& p, const std::string& content) {
    if (p.has_parent_path()) fs::create_directories(p.parent_path());
    std::ofstream out(p, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + p.string());
    out << content;
}

CampaignSummary run_campaign(const CampaignConfig& cfg) {
    cfg.validate();
    const BoundedProblem problem = make_problem(cfg.problem, cfg.dim);
    const ShmsConfig base = resolved(cfg);
    const auto n = static_cast<std::size_t>(cfg.trials);

    std::vector<TrialRecord> records(n);
    std::vector<std::vector<ScatterRow>> scatter(n);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            ShmsConfig sc = base;
            sc.seed = base.seed + i;
            TrialRecord& rec = records[i];
            rec.trial = static_cast<int>(i);
            rec.run.seed = sc.seed;
            IterationObserver obs;
            if (cfg.exports.scatter) {
                obs = [&, i](const ColonyState& c) {
                    if (c.iteration % static_cast<std::uint64_t>(cfg.scatter_every) != 0) return;
                    for (std::size_t h = 0; h < c.homes.size(); ++h)
                        scatter[i].push_back({c.iteration, static_cast<int>(h), true, h, c.homes[h].x});
                    for (std::size_t k = 0; k < c.snails.size(); ++k)
                        scatter[i].push_back({c.iteration, c.snails[k].home_id, false, k, c.snails[k].x});
                };
            }
            try {
                rec.run = run(problem, sc, obs);
            } catch (const std::exception& e) {
                rec.failed = true;
                rec.error = e.what();
            }
        }
    };
    std::size_t threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                           : static_cast<std::size_t>(cfg.threads);
    threads = std::min(threads, n);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Single collector writes every file.
    const fs::path dir = cfg.out_dir;
    fs::create_directories(dir / "trials");
    write_file(dir / "config.json", to_json(cfg));
    std::string log;
    for (std::size_t i = 0; i < n; ++i) {
        const auto stem = trial_stem(static_cast<int>(i));
        write_file(dir / "trials" / ("trial_" + stem + ".json"), record_json(records[i]));
        if (records[i].failed) {
            log += "trial " + stem + " failed: " + records[i].error + "\n";
            continue;
        }
        if (cfg.exports.trace) write_file(dir / "trials" / ("trace_" + stem + ".csv"), trace_csv(records[i].run));
        if (cfg.exports.scatter)
            write_file(dir / "trials" / ("scatter_" + stem + ".csv"), scatter_csv(scatter[i], problem.dim));
    }
    write_file(dir / "campaign.log", log);
    CampaignSummary s = summarize(cfg, records);
    write_file(dir / "summary.json", summary_json(s));
    if (cfg.exports.summary) write_file(dir / "summary.csv", summary_csv_header() + summary_csv_row(s));
    if (is_sthe(cfg.problem)) write_file(dir / "design_best.csv", design_csv(sthe_case(cfg.problem), s.best_x));
    return s;
}

std::vector<TrialRecord> load_records(const fs::path& dir) {
    std::vector<fs::path> files;
    for (const auto& e : fs::directory_iterator(dir / "trials")) {
        auto name = e.path().filename().string();
        if (name.rfind("trial_", 0) == 0 && e.path().extension() == ".json") files.push_back(e.path());
    }
    std::sort(files.begin(), files.end());
    std::vector<TrialRecord> out;
    for (const auto& f : files) out.push_back(parse_record(read_file(f)));
    return out;
}

CampaignConfig load_config(const fs::path& dir) { return config_from_json(read_file(dir / "config.json")); }

CampaignSummary load_summary(const fs::path& dir) { return parse_summary(read_file(dir / "summary.json")); }

CampaignSummary resummarize(const fs::path& dir) { return summarize(load_config(dir), load_records(dir)); }

bool same_outcome(const CampaignSummary& a, const CampaignSummary& b) {
    return a.problem == b.problem && a.label == b.label && a.dim == b.dim && a.trials == b.trials &&
           a.failed == b.failed && a.best == b.best && a.worst == b.worst && a.mean == b.mean &&
           a.median == b.median && a.std_dev == b.std_dev && a.avg_evals == b.avg_evals && a.best_x == b.best_x &&
           a.base_seed == b.base_seed;
}

namespace {

std::string table_tag(int dim) { return dim == 0 ? "fixed" : "d" + std::to_string(dim); }

std::string published_friedman_csv(const reference::MeanTable& t, const stats::FriedmanResult& r) {
    const auto& algs = reference::algorithms();
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << "\nalgorithm,mean_rank,ranking,published_mean_rank,published_ranking\n";
    for (std::size_t j = 0; j < algs.size(); ++j)
        out << algs[j] << ',' << g17(r.mean_ranks[j]) << ',' << r.ordering[j] << ',' << g17(t.published_mean_ranks[j])
            << ',' << t.published_ranking[j] << '\n';
    return out.str();
}

std::string closeness_csv(int case_id, double ours) {
    std::ostringstream out;
    out << "# schema_version=" << kSchemaVersion << "\ncase,algorithm,reference_cost,candidate_cost,closeness_percent,direction\n";
    for (const auto& e : reference::closeness_entries()) {
        if (e.case_id != case_id) continue;
        auto c = sthe::closeness_percent(e.cost, ours);
        out << case_id << ',' << e.algorithm << ',' << g17(e.cost) << ',' << g17(ours) << ',' << g17(c.percent) << ','
            << sthe::arrow(c.direction) << '\n';
    }
    return out.str();
}

}  // namespace

ReportResult generate_reports(const fs::path& dir) {
    ReportResult res;
    const fs::path out = dir / "report";
    std::ostringstream text;
    auto emit = [&](const std::string& name, const std::string& body) {
        write_file(out / name, body);
        res.written.push_back(out / name);
    };

    std::vector<CampaignSummary> campaigns;
    if (fs::exists(dir)) {
        for (auto it = fs::recursive_directory_iterator(dir); it != fs::recursive_directory_iterator(); ++it) {
            if (it->is_directory() && it->path() == out) {
                it.disable_recursion_pending();
                continue;
            }
            if (it->path().filename() == "config.json") {
                const auto cdir = it->path().parent_path();
                if (!fs::exists(cdir / "summary.json")) {
                    res.missing.push_back(cdir.string() + ": summary.json");
                    continue;
                }
                try {
                    campaigns.push_back(load_summary(cdir));
                } catch (const std::exception& e) {
                    res.missing.push_back(cdir.string() + ": " + e.what());
                }
            }
        }
    }
    std::sort(campaigns.begin(), campaigns.end(), [](const auto& a, const auto& b) {
        return std::tie(a.problem, a.dim, a.label) < std::tie(b.problem, b.dim, b.label);
    });
    res.campaigns = static_cast<int>(campaigns.size());

    // Rank tables from the bundled published means.
    const auto& algs = reference::algorithms();
    for (const auto& t : reference::mean_tables()) {
        auto r = stats::friedman_ranks(t.means);
        const auto tag = table_tag(t.dim);
        emit("friedman_" + tag + "_published.csv", published_friedman_csv(t, r));
        text << "Friedman ranks, published means, " << (t.dim ? std::to_string(t.dim) + " dimensions" : "fixed dimension")
             << "\n" << stats::friedman_text(algs, r) << '\n';
    }

    // Closeness of every published cost to the published best.
    {
        std::ostringstream all;
        all << "# schema_version=" << kSchemaVersion
            << "\ncase,algorithm,reference_cost,candidate_cost,closeness_percent,direction,published_percent\n";
        for (const auto& e : reference::closeness_entries()) {
            double best = reference::campaign_rows()[static_cast<std::size_t>(e.case_id - 1)].best;
            auto c = sthe::closeness_percent(e.cost, best);
            all << e.case_id << ',' << e.algorithm << ',' << g17(e.cost) << ',' << g17(best) << ','
                << g17(c.percent) << ',' << sthe::arrow(c.direction) << ',' << g17(e.percent) << '\n';
        }
        emit("closeness_published.csv", all.str());
    }

    if (campaigns.empty()) {
        text << "no campaigns found under " << dir.string() << "\n";
    } else {
        std::string rows = "# schema_version=" + std::to_string(kSchemaVersion) + "\n" + summary_csv_header();
        for (const auto& c : campaigns) rows += summary_csv_row(c);
        emit("campaigns.csv", rows);
        text << "Campaigns\n" << summary_csv_header() << rows.substr(rows.find('\n', rows.find('\n') + 1) + 1) << '\n';

        for (const auto& c : campaigns) {
            if (!is_sthe(c.problem)) continue;
            const int id = sthe_case(c.problem);
            emit("closeness_case" + std::to_string(id) + "_" + c.label + ".csv", closeness_csv(id, c.best));
            text << "Closeness to " << c.label << " best for case " << id << ": " << g17(c.best) << "\n";
        }

        // Our means substituted for the published column, over covered problems.
        std::set<std::string> labels;
        for (const auto& c : campaigns) labels.insert(c.label);
        for (const auto& t : reference::mean_tables()) {
            for (const auto& label : labels) {
                stats::ResultMatrix m;
                m.algorithms.assign(algs.begin(), algs.end() - 1);
                m.algorithms.push_back(label + "(ours)");
                for (std::size_t p = 0; p < t.problems.size(); ++p) {
                    for (const auto& c : campaigns) {
                        if (c.label != label || c.problem != t.problems[p]) continue;
                        if (t.dim != 0 && c.dim != static_cast<std::size_t>(t.dim)) continue;
                        std::vector<double> row(t.means[p].begin(), t.means[p].end() - 1);
                        row.push_back(c.mean);
                        m.problems.push_back(t.problems[p]);
                        m.values.push_back(row);
                        break;
                    }
                }
                if (m.problems.size() < 2) continue;
                const auto tag = table_tag(t.dim) + "_" + label;
                auto r = stats::friedman_ranks(m.values);
                emit("friedman_" + tag + ".csv", stats::friedman_csv(m.algorithms, r));
                emit("matrix_" + tag + ".csv", stats::write_matrix_csv(m));
                text << "Friedman ranks with " << label << " means over " << m.problems.size() << " problems ("
                     << table_tag(t.dim) << ")\n" << stats::friedman_text(m.algorithms, r) << '\n';
                if (m.problems.size() < 5) {
                    res.missing.push_back("pairwise " + tag + ": fewer than 5 problems covered");
                    continue;
                }
                stats::PairwiseTable pt;
                const auto base = m.column_values(m.algorithms.size() - 1);
                for (std::size_t j = 0; j + 1 < m.algorithms.size(); ++j) {
                    try {
                        pt.push_back({m.algorithms[j], m.algorithms.back(),
                                      stats::wilcoxon_signed_rank(m.column_values(j), base, 0.05, m.algorithms[j],
                                                                  m.algorithms.back())});
                    } catch (const stats::NoInformation&) {
                        res.missing.push_back("pairwise " + tag + ": " + m.algorithms[j] + " identical to baseline");
                    }
                }
                emit("pairwise_" + tag + ".csv", stats::pairwise_csv(pt));
                text << "Wilcoxon signed-rank over problem means (" << tag << ")\n" << stats::pairwise_text(pt) << '\n';
            }
        }
    }
    if (!res.missing.empty()) {
        text << "Missing or partial inputs\n";
        for (const auto& m : res.missing) text << "  " << m << '\n';
    }
    emit("report.txt", text.str());
    return res;
}

}  // namespace shms::harness
