#include "flcn/dataset.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <random>
#include <sstream>
#include <unordered_map>

namespace flcn {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    if (s.size() >= 2 && s.front() == '"' && s.back() == '"')
        s = s.substr(1, s.size() - 2);
    return s;
}

std::vector<std::string> split(std::string_view line, char delim) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(delim, start);
        const auto cell = trim(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
        cells.emplace_back(cell);
        if (pos == std::string_view::npos)
            break;
        start = pos + 1;
    }
    return cells;
}

std::optional<double> parse_number(std::string_view s) {
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        return std::nullopt;
    return value;
}

bool is_blank(std::string_view line) { return trim(line).empty(); }

std::size_t resolve_label_index(const ColumnSelector& sel, const std::vector<std::string>& first,
                                bool header) {
    const std::size_t cols = first.size();
    if (std::holds_alternative<LastColumn>(sel))
        return cols - 1;
    if (const auto* idx = std::get_if<std::size_t>(&sel)) {
        if (*idx >= cols)
            throw ParseError(0, "label column index " + std::to_string(*idx) + " out of range (" +
                                    std::to_string(cols) + " columns)");
        return *idx;
    }
    const auto& name = std::get<std::string>(sel);
    if (!header)
        throw std::invalid_argument("label column '" + name + "' selected by name but file has no header");
    const auto it = std::find(first.begin(), first.end(), name);
    if (it == first.end())
        throw ParseError(0, "no column named '" + name + "'");
    return static_cast<std::size_t>(it - first.begin());
}

}  // namespace

ColumnSelector parse_column_selector(const std::string& text) {
    if (text == "last")
        return LastColumn{};
    std::size_t idx = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), idx);
    if (ec == std::errc() && ptr == text.data() + text.size() && !text.empty())
        return idx;
    return text;
}

Dataset parse_csv(const std::string& text, const CsvOptions& options, std::string name) {
    std::vector<std::pair<std::size_t, std::string>> lines;  // (line index, content)
    {
        std::istringstream in(text);
        std::string line;
        for (std::size_t idx = 0; std::getline(in, line); ++idx)
            if (!is_blank(line))
                lines.emplace_back(idx, line);
    }
    if (lines.empty())
        throw ParseError(0, "no data rows");

    const auto first = split(lines.front().second, options.delimiter);
    const bool by_name = options.label_column &&
                         std::holds_alternative<std::string>(*options.label_column);

    bool header = options.header == HeaderMode::Present || by_name;
    std::optional<std::size_t> label_idx;
    if (options.header == HeaderMode::Auto && !by_name) {
        const std::size_t provisional =
            options.label_column ? resolve_label_index(*options.label_column, first, false)
                                 : first.size();
        for (std::size_t c = 0; c < first.size(); ++c) {
            if (c == provisional || first[c] == options.missing_token)
                continue;
            if (!parse_number(first[c])) {
                header = true;
                break;
            }
        }
    }
    if (options.label_column)
        label_idx = resolve_label_index(*options.label_column, first, header);

    const std::size_t cols = first.size();
    const std::size_t features = cols - (label_idx ? 1 : 0);
    if (features == 0)
        throw ParseError(lines.front().first, "no feature columns");

    Dataset d;
    d.name = std::move(name);
    if (header) {
        for (std::size_t c = 0; c < cols; ++c)
            if (!label_idx || c != *label_idx)
                d.feature_names.push_back(first[c]);
    } else {
        for (std::size_t c = 0; c < features; ++c)
            d.feature_names.push_back("f" + std::to_string(c));
    }

    std::vector<double> values;
    std::vector<std::size_t> labels;
    std::unordered_map<std::string, std::size_t> class_ids;
    std::size_t row = 0;
    for (std::size_t li = header ? 1 : 0; li < lines.size(); ++li) {
        const auto& [line_no, content] = lines[li];
        const auto cells = split(content, options.delimiter);
        if (cells.size() != cols)
            throw ParseError(line_no, "expected " + std::to_string(cols) + " columns, found " +
                                          std::to_string(cells.size()));
        std::size_t f = 0;
        for (std::size_t c = 0; c < cols; ++c) {
            if (label_idx && c == *label_idx) {
                const auto [it, inserted] = class_ids.try_emplace(cells[c], class_ids.size());
                if (inserted)
                    d.class_names.push_back(cells[c]);
                labels.push_back(it->second);
                continue;
            }
            if (cells[c] == options.missing_token) {
                values.push_back(std::numeric_limits<double>::quiet_NaN());
                d.missing.emplace_back(row, f);
            } else if (const auto v = parse_number(cells[c]); v && std::isfinite(*v)) {
                values.push_back(*v);
            } else {
                throw ParseError(line_no, "non-numeric feature value '" + cells[c] + "' in column " +
                                              std::to_string(c));
            }
            ++f;
        }
        ++row;
    }
    if (row == 0)
        throw ParseError(lines.front().first, "no data rows");

    d.points = Matrix(row, features, std::move(values));
    if (label_idx)
        d.labels = std::move(labels);
    d.feature_ranges = observed_ranges(d.points);
    return d;
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_csv(buf.str(), options, path.stem().string());
}

std::vector<FeatureRange> observed_ranges(const Matrix& points) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<FeatureRange> ranges(points.cols(), FeatureRange{nan, nan});
    for (std::size_t c = 0; c < points.cols(); ++c) {
        for (std::size_t r = 0; r < points.rows(); ++r) {
            const double v = points(r, c);
            if (std::isnan(v))
                continue;
            auto& range = ranges[c];
            if (std::isnan(range.min) || v < range.min)
                range.min = v;
            if (std::isnan(range.max) || v > range.max)
                range.max = v;
        }
    }
    return ranges;
}

Dataset impute_missing(const Dataset& d, std::uint64_t seed) {
    Dataset out = d;
    if (d.missing.empty())
        return out;
    auto cells = d.missing;
    std::sort(cells.begin(), cells.end());
    for (const auto& [r, c] : cells)
        if (std::isnan(d.feature_ranges[c].min))
            throw std::invalid_argument("feature '" + d.feature_names[c] +
                                        "' has no observed values to impute from");

    std::mt19937_64 rng(seed);
    for (const auto& [r, c] : cells) {
        const auto range = d.feature_ranges[c];
        double v = range.min;
        if (range.max > range.min) {
            std::uniform_real_distribution<double> dist(range.min, range.max);
            v = dist(rng);
        }
        out.points(r, c) = v;
    }
    out.missing.clear();
    out.feature_ranges = observed_ranges(out.points);
    return out;
}

Dataset normalize_minmax(const Dataset& d) {
    if (d.has_missing())
        throw std::invalid_argument("normalize_minmax: dataset still has missing cells");
    Dataset out = d;
    const auto ranges = observed_ranges(d.points);
    for (std::size_t c = 0; c < d.dims(); ++c) {
        const double lo = ranges[c].min;
        const double span = ranges[c].max - lo;
        for (std::size_t r = 0; r < d.size(); ++r)
            out.points(r, c) = span > 0.0 ? (d.points(r, c) - lo) / span : 0.0;
    }
    out.feature_ranges = observed_ranges(out.points);
    return out;
}

}  // namespace flcn
