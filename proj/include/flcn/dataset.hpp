#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "flcn/matrix.hpp"

namespace flcn {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t row, const std::string& what)
        : std::runtime_error("row " + std::to_string(row) + ": " + what), row_(row) {}
    // Zero-based index of the offending line in the file (header included).
    std::size_t row() const { return row_; }

private:
    std::size_t row_;
};

struct FeatureRange {
    double min = 0.0;
    double max = 0.0;
};

// N points x m features with optional class labels.
//
// Missing cells are stored as NaN and flagged in `missing` until
// impute_missing() replaces them.
struct Dataset {
    std::string name;
    Matrix points;
    std::vector<std::string> feature_names;
    std::optional<std::vector<std::size_t>> labels;  // dense class ids 0..C-1
    std::vector<std::string> class_names;            // class_names[id]
    std::vector<FeatureRange> feature_ranges;        // over non-missing cells
    std::vector<std::pair<std::size_t, std::size_t>> missing;  // (row, col)

    std::size_t size() const { return points.rows(); }
    std::size_t dims() const { return points.cols(); }
    std::size_t class_count() const { return class_names.size(); }
    bool has_missing() const { return !missing.empty(); }
};

// Selects the label column: by header name, by zero-based index, or the last column.
struct LastColumn {};
using ColumnSelector = std::variant<std::size_t, std::string, LastColumn>;

enum class HeaderMode { Auto, Present, Absent };

struct CsvOptions {
    std::optional<ColumnSelector> label_column;
    std::string missing_token = "?";
    char delimiter = ',';
    HeaderMode header = HeaderMode::Auto;
};

// Parses "last", a zero-based integer, or a column name.
ColumnSelector parse_column_selector(const std::string& text);

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options = {});
Dataset parse_csv(const std::string& text, const CsvOptions& options = {},
                  std::string name = "inline");

// Recomputes per-feature (min, max) over non-missing cells. Features with no
// observed value get NaN bounds.
std::vector<FeatureRange> observed_ranges(const Matrix& points);

// Replaces each missing cell by a uniform draw over its feature's observed
// range. Cells are visited in row-major order; the stream is seeded once.
// Throws std::invalid_argument if a feature has no observed value.
Dataset impute_missing(const Dataset& d, std::uint64_t seed);

// Affine map of every feature onto [0, 1]; constant features map to 0.
// Throws std::invalid_argument if missing cells remain.
Dataset normalize_minmax(const Dataset& d);

}  // namespace flcn
