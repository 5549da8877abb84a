#include "shms/stats.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <iomanip>
#include <numeric>
#include <sstream>

namespace shms::stats {

namespace {

// Shortest text that parses back to the same double.
std::string fmt17(double v) {
    char buf[40];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, sep)) out.push_back(cell);
    if (!line.empty() && line.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::string> lines(const std::string& text) {
    std::vector<std::string> out;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (!line.empty() && line[0] != '#') out.push_back(line);
    }
    return out;
}

// Ranks are multiples of 1/2, so doubling makes every sum an exact integer.
std::vector<std::int64_t> doubled(const std::vector<double>& ranks) {
    std::vector<std::int64_t> out;
    for (double r : ranks) out.push_back(std::llround(2.0 * r));
    return out;
}

}  // namespace

std::vector<double> midranks(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
    std::vector<double> ranks(values.size());
    for (std::size_t i = 0; i < order.size();) {
        std::size_t j = i;
        while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
        double r = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
        for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
        i = j + 1;
    }
    return ranks;
}

double wilcoxon_exact_p(const std::vector<double>& ranks, double t_plus) {
    auto r2 = doubled(ranks);
    std::int64_t total = std::accumulate(r2.begin(), r2.end(), std::int64_t{0});
    // counts[s] = number of sign patterns whose doubled T+ equals s.
    std::vector<double> counts(static_cast<std::size_t>(total) + 1, 0.0);
    counts[0] = 1.0;
    std::int64_t reach = 0;
    for (std::int64_t r : r2) {
        for (std::int64_t s = reach; s >= 0; --s)
            if (counts[s] != 0.0) counts[s + r] += counts[s];
        reach += r;
    }
    std::int64_t t2 = std::llround(2.0 * t_plus);
    std::int64_t dev = std::llabs(2 * t2 - total);
    double hit = 0.0;
    for (std::int64_t s = 0; s <= total; ++s)
        if (std::llabs(2 * s - total) >= dev) hit += counts[s];
    return std::min(1.0, std::ldexp(hit, -static_cast<int>(ranks.size())));
}

double wilcoxon_normal_p(const std::vector<double>& ranks, double t_plus) {
    const double n = static_cast<double>(ranks.size());
    double mu = n * (n + 1.0) / 4.0;
    double var = n * (n + 1.0) * (2.0 * n + 1.0) / 24.0;
    std::vector<double> sorted = ranks;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size();) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j] == sorted[i]) ++j;
        double t = static_cast<double>(j - i);
        var -= (t * t * t - t) / 48.0;
        i = j;
    }
    if (var <= 0.0) return 1.0;
    double z = std::max(0.0, std::abs(t_plus - mu) - 0.5) / std::sqrt(var);
    return std::min(1.0, std::erfc(z / std::sqrt(2.0)));
}

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b, double alpha,
                                    const std::string& label_a, const std::string& label_b) {
    if (a.size() != b.size()) throw ShapeMismatch("wilcoxon: samples differ in length");
    if (a.size() < 5) throw ShapeMismatch("wilcoxon: at least 5 pairs required");
    std::vector<double> d;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] - b[i] != 0.0) d.push_back(a[i] - b[i]);
    if (d.empty()) throw NoInformation("wilcoxon: every difference is zero");

    std::vector<double> mag(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) mag[i] = std::abs(d[i]);
    std::vector<double> r = midranks(mag);

    WilcoxonResult res;
    res.n_nonzero = d.size();
    for (std::size_t i = 0; i < d.size(); ++i) (d[i] > 0 ? res.t_plus : res.t_minus) += r[i];
    res.exact = d.size() <= kExactLimit;
    res.p_value = res.exact ? wilcoxon_exact_p(r, res.t_plus) : wilcoxon_normal_p(r, res.t_plus);
    res.significant = res.p_value < alpha;
    if (res.t_plus < res.t_minus) res.winner = label_a;
    else if (res.t_minus < res.t_plus) res.winner = label_b;
    else res.winner = "tie";
    return res;
}

FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& matrix) {
    if (matrix.size() < 2) throw ShapeMismatch("friedman: at least 2 problems required");
    const std::size_t k = matrix.front().size();
    if (k < 2) throw ShapeMismatch("friedman: at least 2 algorithms required");
    FriedmanResult res;
    res.mean_ranks.assign(k, 0.0);
    for (const auto& row : matrix) {
        if (row.size() != k) throw ShapeMismatch("friedman: ragged matrix");
        auto r = midranks(row);
        for (std::size_t j = 0; j < k; ++j) res.mean_ranks[j] += r[j];
    }
    for (double& m : res.mean_ranks) m /= static_cast<double>(matrix.size());
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return res.mean_ranks[i] < res.mean_ranks[j]; });
    res.ordering.assign(k, 0);
    for (std::size_t pos = 0; pos < k; ++pos) res.ordering[order[pos]] = static_cast<int>(pos + 1);
    return res;
}

std::size_t ResultMatrix::column(const std::string& algorithm) const {
    auto it = std::find(algorithms.begin(), algorithms.end(), algorithm);
    if (it == algorithms.end()) throw std::invalid_argument("no results for algorithm " + algorithm);
    return static_cast<std::size_t>(it - algorithms.begin());
}

std::vector<double> ResultMatrix::column_values(std::size_t j) const {
    std::vector<double> out;
    for (const auto& row : values) out.push_back(row.at(j));
    return out;
}

ResultMatrix read_matrix_csv(const std::string& text) {
    auto ls = lines(text);
    if (ls.empty()) throw ShapeMismatch("matrix csv: empty input");
    ResultMatrix m;
    auto head = split(ls[0], ',');
    if (head.size() < 2) throw ShapeMismatch("matrix csv: need a problem column and at least one algorithm");
    m.algorithms.assign(head.begin() + 1, head.end());
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto cells = split(ls[i], ',');
        if (cells.size() != head.size()) throw ShapeMismatch("matrix csv: row " + std::to_string(i) + " has wrong width");
        m.problems.push_back(cells[0]);
        std::vector<double> row;
        for (std::size_t j = 1; j < cells.size(); ++j) row.push_back(std::stod(cells[j]));
        m.values.push_back(std::move(row));
    }
    return m;
}

std::string write_matrix_csv(const ResultMatrix& m) {
    std::ostringstream out;
    out << "# schema_version=1\nproblem";
    for (const auto& a : m.algorithms) out << ',' << a;
    out << '\n';
    for (std::size_t i = 0; i < m.problems.size(); ++i) {
        out << m.problems[i];
        for (double v : m.values[i]) out << ',' << fmt17(v);
        out << '\n';
    }
    return out.str();
}

PairwiseTable pairwise_table(const ResultMatrix& results, const std::string& baseline, double alpha) {
    const std::size_t jb = results.column(baseline);
    const auto base = results.column_values(jb);
    PairwiseTable table;
    for (std::size_t j = 0; j < results.algorithms.size(); ++j) {
        if (j == jb) continue;
        const auto& rival = results.algorithms[j];
        table.push_back({rival, baseline, wilcoxon_signed_rank(results.column_values(j), base, alpha, rival, baseline)});
    }
    return table;
}

std::string pairwise_csv(const PairwiseTable& table) {
    std::ostringstream out;
    out << "# schema_version=1\n";
    out << "rival,baseline,p_value,t_plus,t_minus,n_nonzero,exact,significant,winner\n";
    for (const auto& row : table) {
        const auto& r = row.result;
        out << row.rival << ',' << row.baseline << ',' << fmt17(r.p_value) << ',' << fmt17(r.t_plus) << ','
            << fmt17(r.t_minus) << ',' << r.n_nonzero << ',' << (r.exact ? 1 : 0) << ',' << (r.significant ? 1 : 0)
            << ',' << r.winner << '\n';
    }
    return out.str();
}

PairwiseTable parse_pairwise_csv(const std::string& text) {
    auto ls = lines(text);
    PairwiseTable table;
    for (std::size_t i = 1; i < ls.size(); ++i) {
        auto c = split(ls[i], ',');
        if (c.size() != 9) throw ShapeMismatch("pairwise csv: expected 9 columns");
        PairwiseRow row;
        row.rival = c[0];
        row.baseline = c[1];
        row.result.p_value = std::stod(c[2]);
        row.result.t_plus = std::stod(c[3]);
        row.result.t_minus = std::stod(c[4]);
        row.result.n_nonzero = std::stoul(c[5]);
        row.result.exact = c[6] == "1";
        row.result.significant = c[7] == "1";
        row.result.winner = c[8];
        table.push_back(std::move(row));
    }
    return table;
}

std::string pairwise_text(const PairwiseTable& table) {
    std::ostringstream out;
    out << std::left << std::setw(14) << "Algorithm" << std::setw(12) << "p-value" << std::setw(8) << "T+"
        << std::setw(8) << "T-" << std::setw(5) << "n'" << "Winner\n";
    for (const auto& row : table) {
        const auto& r = row.result;
        std::ostringstream p;
        p << std::scientific << std::setprecision(2) << r.p_value;
        out << std::left << std::setw(14) << (row.rival + " vs " + row.baseline).substr(0, 13) << std::setw(12) << p.str()
            << std::setw(8) << r.t_plus << std::setw(8) << r.t_minus << std::setw(5) << r.n_nonzero << r.winner
            << (r.significant ? "" : " (n.s.)") << '\n';
    }
    return out.str();
}

std::string friedman_csv(const std::vector<std::string>& algorithms, const FriedmanResult& r) {
    std::ostringstream out;
    out << "# schema_version=1\nalgorithm,mean_rank,ranking\n";
    for (std::size_t j = 0; j < algorithms.size(); ++j)
        out << algorithms[j] << ',' << fmt17(r.mean_ranks[j]) << ',' << r.ordering[j] << '\n';
    return out.str();
}

std::string friedman_text(const std::vector<std::string>& algorithms, const FriedmanResult& r) {
    std::ostringstream out;
    out << std::left << std::setw(12) << "Algorithm";
    for (const auto& a : algorithms) out << std::setw(9) << a;
    out << '\n' << std::setw(12) << "Mean rank";
    for (double m : r.mean_ranks) {
        std::ostringstream c;
        c << std::fixed << std::setprecision(4) << m;
        out << std::setw(9) << c.str();
    }
    out << '\n' << std::setw(12) << "Ranking";
    for (int o : r.ordering) out << std::setw(9) << o;
    out << '\n';
    return out.str();
}

}  // namespace shms::stats
