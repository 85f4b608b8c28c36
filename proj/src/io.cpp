#include "cyclic_rips/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace cyclic_rips {

PointConfiguration parse_points_text(std::istream& in) {
    std::vector<CirclePoint> points;
    std::string line;
    std::size_t line_number = 0;
    while (std::getline(in, line)) {
        ++line_number;
        std::string_view view = line;
        while (!view.empty() && (view.front() == ' ' || view.front() == '\t' || view.front() == '\r')) {
            view.remove_prefix(1);
        }
        while (!view.empty() && (view.back() == ' ' || view.back() == '\t' || view.back() == '\r')) {
            view.remove_suffix(1);
        }
        if (view.empty() || view.front() == '#') continue;
        auto value = parse_rational(view);
        if (!value) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": not a rational: " + std::string(view));
        }
        if (*value < 0 || *value >= 1) {
            throw std::invalid_argument("line " + std::to_string(line_number) +
                                        ": point outside [0, 1): " + std::string(view));
        }
        points.emplace_back(*value);
    }
    return PointConfiguration::from_points(std::move(points));
}

PointConfiguration read_points_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open points file: " + path);
    return parse_points_text(in);
}

std::string evolution_series_csv(const std::vector<std::pair<std::uint64_t, EvolutionRecord>>& runs) {
    std::ostringstream out;
    out << kEvolutionCsvHeader << '\n';
    for (const auto& [trial, record] : runs) {
        for (const auto& step : record.steps) {
            out << trial << ',' << step.n << ',' << numerator(step.wf) << ','
                << denominator(step.wf) << ',' << step.core_n << ',' << step.core_k << ','
                << step.intrinsic_dim << ',' << step.betti_dim << ',' << step.betti_rank << '\n';
        }
    }
    return out.str();
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    std::istringstream in(line);
    while (std::getline(in, field, ',')) fields.push_back(field);
    return fields;
}

Rational parse_field_rational(const std::string& field, const char* what) {
    auto value = parse_rational(field);
    if (!value) throw std::invalid_argument(std::string("bad ") + what + ": " + field);
    return *value;
}

} // namespace

std::vector<EvolutionCsvRow> parse_evolution_series_csv(std::istream& in) {
    std::vector<EvolutionCsvRow> rows;
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kEvolutionCsvHeader) throw std::invalid_argument("unexpected CSV header: " + line);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (fields.size() != 9) throw std::invalid_argument("bad CSV row: " + line);
        EvolutionCsvRow row;
        row.trial = std::stoull(fields[0]);
        row.n = std::stoi(fields[1]);
        row.wf_num = Int(fields[2]);
        row.wf_den = Int(fields[3]);
        row.core_n = std::stoi(fields[4]);
        row.core_k = std::stoi(fields[5]);
        row.intrinsic_dim = std::stoi(fields[6]);
        row.betti_dim = std::stoi(fields[7]);
        row.betti_rank = std::stoull(fields[8]);
        rows.push_back(std::move(row));
    }
    return rows;
}

std::string summary_csv(const EvolutionSummary& summary) {
    std::ostringstream out;
    out << kSummaryCsvHeader << '\n'
        << format_rational(summary.r) << ',' << format_rational(summary.delta) << ',' << summary.l
        << ',' << summary.trials << ',' << format_rational(summary.mean_m) << ','
        << format_rational(summary.mean_n) << ',' << format_rational(summary.mean_c_delta) << ','
        << format_rational(summary.mean_r) << '\n';
    return out.str();
}

EvolutionSummary parse_summary_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("missing CSV header");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line != kSummaryCsvHeader) throw std::invalid_argument("unexpected CSV header: " + line);
    if (!std::getline(in, line)) throw std::invalid_argument("missing summary row");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto fields = split_csv_line(line);
    if (fields.size() != 8) throw std::invalid_argument("bad summary row: " + line);
    EvolutionSummary summary;
    summary.r = parse_field_rational(fields[0], "r");
    summary.delta = parse_field_rational(fields[1], "delta");
    summary.l = std::stoi(fields[2]);
    summary.trials = std::stoi(fields[3]);
    summary.mean_m = parse_field_rational(fields[4], "mean_M");
    summary.mean_n = parse_field_rational(fields[5], "mean_N");
    summary.mean_c_delta = parse_field_rational(fields[6], "mean_C_delta");
    summary.mean_r = parse_field_rational(fields[7], "mean_R");
    return summary;
}

EvolutionSummary summarize_runs(const std::vector<std::pair<std::uint64_t, EvolutionRecord>>& runs,
                                const Rational& r, int max_n) {
    if (runs.empty()) throw std::invalid_argument("need >= 1 trial");
    EvolutionSummary summary;
    summary.r = r;
    summary.l = runs.front().second.l;
    summary.delta = runs.front().second.delta;
    summary.trials = static_cast<int>(runs.size());

    const Rational delta = summary.delta;
    const Rational half_delta = delta / 2;
    Int m_total = 0, n_total = 0, c_total = 0, r_total = 0;
    for (const auto& [trial, record] : runs) {
        m_total += record.m_time.value_or(max_n);
        n_total += record.n_time.value_or(max_n);
        int c_value = max_n;
        for (const auto& [eps, hit] : record.coverage_times) {
            if (eps == delta) c_value = hit.value_or(max_n);
        }
        int r_value = max_n;
        for (const auto& [eps, hit] : record.regular_times) {
            if (eps == half_delta) r_value = hit.value_or(max_n);
        }
        c_total += c_value;
        r_total += r_value;
    }
    summary.mean_m = Rational(m_total, summary.trials);
    summary.mean_n = Rational(n_total, summary.trials);
    summary.mean_c_delta = Rational(c_total, summary.trials);
    summary.mean_r = Rational(r_total, summary.trials);
    return summary;
}

void atomic_write_file(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    fs::path target(path);
    fs::path temp = target;
    temp += ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot open for writing: " + temp.string());
        out << content;
        if (!out) throw std::runtime_error("write failed: " + temp.string());
    }
    fs::rename(temp, target);
}

} // namespace cyclic_rips
