#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclic_rips/circle.hpp"
#include "cyclic_rips/evolution.hpp"

namespace cyclic_rips {

/// Points file: UTF-8 text, one point per line, "p/q" or an exact decimal
/// literal, values in [0, 1). Lines starting with '#' and blank lines are
/// ignored. Throws std::invalid_argument on malformed input or duplicates.
PointConfiguration parse_points_text(std::istream& in);
PointConfiguration read_points_file(const std::string& path);

/// One row of the evolution time-series CSV. All fields exact integers;
/// the winding fraction travels as numerator/denominator columns.
struct EvolutionCsvRow {
    std::uint64_t trial = 0;
    int n = 0;
    Int wf_num;
    Int wf_den;
    int core_n = 1;
    int core_k = 0;
    int intrinsic_dim = 0;
    int betti_dim = 0;
    std::uint64_t betti_rank = 0;

    friend bool operator==(const EvolutionCsvRow&, const EvolutionCsvRow&) = default;
};

inline constexpr const char* kEvolutionCsvHeader =
    "trial,n,wf_num,wf_den,core_n,core_k,intrinsic_dim,betti_dim,betti_rank";

std::string evolution_series_csv(const std::vector<std::pair<std::uint64_t, EvolutionRecord>>& runs);
std::vector<EvolutionCsvRow> parse_evolution_series_csv(std::istream& in);

/// Summary row: r and delta as exact "p/q", waiting-time means as exact
/// rationals (unreached times are right-censored at max_n before averaging).
struct EvolutionSummary {
    Rational r;
    Rational delta;
    int l = 0;
    int trials = 0;
    Rational mean_m;
    Rational mean_n;
    Rational mean_c_delta;
    Rational mean_r;

    friend bool operator==(const EvolutionSummary&, const EvolutionSummary&) = default;
};

inline constexpr const char* kSummaryCsvHeader =
    "r,delta,l,trials,mean_M,mean_N,mean_C_delta,mean_R";

std::string summary_csv(const EvolutionSummary& summary);
EvolutionSummary parse_summary_csv(std::istream& in);

/// Builds the summary from per-trial records: means of M, N, C(delta) and
/// R_{2l+1}(delta/2), each censored at max_n when unreached.
EvolutionSummary summarize_runs(const std::vector<std::pair<std::uint64_t, EvolutionRecord>>& runs,
                                const Rational& r, int max_n);

/// Writes through a temporary file and renames, so failures leave no
/// partial output behind.
void atomic_write_file(const std::string& path, const std::string& content);

} // namespace cyclic_rips
