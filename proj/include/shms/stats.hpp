#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace shms::stats {

class NoInformation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ShapeMismatch : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kExactLimit = 20;

struct WilcoxonResult {
    double p_value = 1.0;
    double t_plus = 0.0;   // rank sum where a > b, i.e. losses of a under minimisation
    double t_minus = 0.0;  // rank sum where a < b
    std::size_t n_nonzero = 0;
    bool exact = true;
    bool significant = false;
    std::string winner;  // label of a, label of b, or "tie"
};

// Ascending midranks (1-based).
std::vector<double> midranks(const std::vector<double>& values);

WilcoxonResult wilcoxon_signed_rank(const std::vector<double>& a, const std::vector<double>& b,
                                    double alpha = 0.05, const std::string& label_a = "a",
                                    const std::string& label_b = "b");

// Two-sided p for T+ given the ranks of the nonzero differences.
double wilcoxon_exact_p(const std::vector<double>& ranks, double t_plus);
double wilcoxon_normal_p(const std::vector<double>& ranks, double t_plus);

struct FriedmanResult {
    std::vector<double> mean_ranks;
    std::vector<int> ordering;  // ordering[j] = position of algorithm j, 1 = best
};

FriedmanResult friedman_ranks(const std::vector<std::vector<double>>& matrix);

// Labelled problems x algorithms matrix.
struct ResultMatrix {
    std::vector<std::string> problems;
    std::vector<std::string> algorithms;
    std::vector<std::vector<double>> values;  // [problem][algorithm]

    std::size_t column(const std::string& algorithm) const;
    std::vector<double> column_values(std::size_t j) const;
};

ResultMatrix read_matrix_csv(const std::string& text);
std::string write_matrix_csv(const ResultMatrix& m);

struct PairwiseRow {
    std::string rival;
    std::string baseline;
    WilcoxonResult result;
};

using PairwiseTable = std::vector<PairwiseRow>;

PairwiseTable pairwise_table(const ResultMatrix& results, const std::string& baseline, double alpha = 0.05);

std::string pairwise_csv(const PairwiseTable& table);
PairwiseTable parse_pairwise_csv(const std::string& text);
std::string pairwise_text(const PairwiseTable& table);

std::string friedman_csv(const std::vector<std::string>& algorithms, const FriedmanResult& r);
std::string friedman_text(const std::vector<std::string>& algorithms, const FriedmanResult& r);

}  // namespace shms::stats
