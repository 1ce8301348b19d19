#pragma once

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algal/errors.hpp"
#include "algal/matrix.hpp"

namespace algal {

// A loaded binary-classification dataset. Features are min-max rescaled to
// [0,1] per dimension at load time; labels are mapped to {-1,+1} with the
// lexicographically smaller raw label text becoming -1.
struct Dataset {
    std::string name;
    Matrix X;               // n x d, every entry in [0,1]
    std::vector<int> y;     // n entries, each -1 or +1
    std::string neg_label;  // raw label text mapped to -1
    std::string pos_label;  // raw label text mapped to +1

    int n() const { return X.rows(); }
    int d() const { return X.cols(); }
};

enum class FileFormat {
    csv,         // comma-separated, no header
    csv_header,  // comma-separated, first line skipped
    libsvm,      // "label idx:val idx:val ...", 1-based indices
};

struct ColumnSpec {
    FileFormat format = FileFormat::csv;
    int label_col = -1;  // CSV only; -1 means last column
};

namespace detail {

inline std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

inline bool parse_double(const std::string& s, double& out) {
    const char* b = s.data();
    const char* e = s.data() + s.size();
    auto [p, ec] = std::from_chars(b, e, out);
    return ec == std::errc() && p == e;
}

inline std::vector<std::string> split_fields(const std::string& line, char delim) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : line) {
        if (ch == delim) {
            out.push_back(trim(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(trim(cur));
    return out;
}

struct RawTable {
    std::vector<std::vector<double>> rows;
    std::vector<std::string> labels;
    int d = 0;
};

inline RawTable read_csv(const std::string& path, const ColumnSpec& spec) {
    std::ifstream in(path);
    require(in.good(), Errc::io, "cannot open " + path);
    RawTable t;
    std::string line;
    int lineno = 0;
    bool skip_first = spec.format == FileFormat::csv_header;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        if (skip_first) {
            skip_first = false;
            continue;
        }
        auto fields = split_fields(s, ',');
        int ncols = static_cast<int>(fields.size());
        require(ncols >= 2, Errc::malformed_file,
                path + ":" + std::to_string(lineno) + ": needs at least one feature and a label");
        int lc = spec.label_col < 0 ? ncols - 1 : spec.label_col;
        require(lc < ncols, Errc::malformed_file,
                path + ":" + std::to_string(lineno) + ": label column out of range");
        if (t.d == 0)
            t.d = ncols - 1;
        else
            require(ncols - 1 == t.d, Errc::malformed_file,
                    path + ":" + std::to_string(lineno) + ": inconsistent column count");
        std::vector<double> row;
        row.reserve(t.d);
        for (int c = 0; c < ncols; ++c) {
            if (c == lc) continue;
            double v;
            require(!fields[c].empty() && parse_double(fields[c], v), Errc::malformed_file,
                    path + ":" + std::to_string(lineno) + ": bad numeric field '" + fields[c] + "'");
            row.push_back(v);
        }
        require(!fields[lc].empty(), Errc::malformed_file,
                path + ":" + std::to_string(lineno) + ": empty label");
        t.rows.push_back(std::move(row));
        t.labels.push_back(fields[lc]);
    }
    require(!t.rows.empty(), Errc::malformed_file, path + ": no data rows");
    return t;
}

inline RawTable read_libsvm(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io, "cannot open " + path);
    std::vector<std::string> labels;
    std::vector<std::vector<std::pair<int, double>>> sparse;
    int max_index = 0;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream ls(s);
        std::string tok;
        require(static_cast<bool>(ls >> tok), Errc::malformed_file,
                path + ":" + std::to_string(lineno) + ": missing label");
        labels.push_back(tok);
        std::vector<std::pair<int, double>> entries;
        while (ls >> tok) {
            auto colon = tok.find(':');
            require(colon != std::string::npos, Errc::malformed_file,
                    path + ":" + std::to_string(lineno) + ": expected idx:value, got '" + tok + "'");
            double idx_d, val;
            require(parse_double(tok.substr(0, colon), idx_d) && idx_d >= 1 &&
                        idx_d == std::floor(idx_d),
                    Errc::malformed_file,
                    path + ":" + std::to_string(lineno) + ": bad feature index in '" + tok + "'");
            require(parse_double(tok.substr(colon + 1), val), Errc::malformed_file,
                    path + ":" + std::to_string(lineno) + ": bad feature value in '" + tok + "'");
            int idx = static_cast<int>(idx_d);
            max_index = std::max(max_index, idx);
            entries.emplace_back(idx - 1, val);
        }
        sparse.push_back(std::move(entries));
    }
    require(!labels.empty(), Errc::malformed_file, path + ": no data rows");
    require(max_index >= 1, Errc::malformed_file, path + ": no features found");
    RawTable t;
    t.d = max_index;
    t.labels = std::move(labels);
    t.rows.assign(t.labels.size(), std::vector<double>(t.d, 0.0));
    for (std::size_t i = 0; i < sparse.size(); ++i)
        for (auto [j, v] : sparse[i]) t.rows[i][j] = v;
    return t;
}

} // namespace detail

// Per-dimension min-max rescale into [0,1]; constant dimensions map to 0.
inline Matrix rescale_features(const Matrix& raw) {
    require(raw.all_finite(), Errc::invalid_data, "rescale_features: non-finite input");
    Matrix out(raw.rows(), raw.cols());
    for (int j = 0; j < raw.cols(); ++j) {
        double lo = raw(0, j), hi = raw(0, j);
        for (int i = 1; i < raw.rows(); ++i) {
            lo = std::min(lo, raw(i, j));
            hi = std::max(hi, raw(i, j));
        }
        const double span = hi - lo;
        if (span <= 0.0) continue;  // constant dimension stays 0
        for (int i = 0; i < raw.rows(); ++i) out(i, j) = (raw(i, j) - lo) / span;
    }
    return out;
}

inline Dataset build_dataset(const std::string& name, detail::RawTable&& t) {
    std::vector<std::string> classes;
    for (const auto& l : t.labels)
        if (std::find(classes.begin(), classes.end(), l) == classes.end()) classes.push_back(l);
    require(classes.size() <= 2, Errc::unsupported_task,
            name + ": found " + std::to_string(classes.size()) + " classes, need exactly 2");
    require(classes.size() == 2, Errc::degenerate_dataset, name + ": only one class present");
    std::sort(classes.begin(), classes.end());

    Dataset ds;
    ds.name = name;
    ds.neg_label = classes[0];
    ds.pos_label = classes[1];
    const int n = static_cast<int>(t.rows.size());
    Matrix raw(n, t.d);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < t.d; ++j) raw(i, j) = t.rows[i][j];
    ds.X = rescale_features(raw);
    ds.y.resize(n);
    int counts[2] = {0, 0};
    for (int i = 0; i < n; ++i) {
        ds.y[i] = t.labels[i] == ds.neg_label ? -1 : +1;
        ++counts[ds.y[i] > 0 ? 1 : 0];
    }
    require(counts[0] >= 2 && counts[1] >= 2, Errc::degenerate_dataset,
            name + ": each class needs at least 2 instances");
    return ds;
}

inline Dataset load_dataset(const std::string& path, const ColumnSpec& spec,
                            const std::string& name) {
    detail::RawTable t = spec.format == FileFormat::libsvm ? detail::read_libsvm(path)
                                                           : detail::read_csv(path, spec);
    return build_dataset(name, std::move(t));
}

// Manifest: one dataset per line, tab- or whitespace-separated:
//   name  path  format  [label_col]
// where format is csv | csvh | libsvm and label_col is a 0-based column
// index or "last" (CSV formats only). '#' starts a comment.
struct ManifestEntry {
    std::string name;
    std::string path;
    ColumnSpec spec;
};

inline std::vector<ManifestEntry> parse_manifest(const std::string& path) {
    std::ifstream in(path);
    require(in.good(), Errc::io, "cannot open manifest " + path);
    std::vector<ManifestEntry> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string s = detail::trim(line);
        if (s.empty() || s[0] == '#') continue;
        std::istringstream ls(s);
        ManifestEntry e;
        std::string fmt, lc;
        require(static_cast<bool>(ls >> e.name >> e.path >> fmt), Errc::malformed_file,
                path + ":" + std::to_string(lineno) + ": expected 'name path format [label_col]'");
        if (fmt == "csv")
            e.spec.format = FileFormat::csv;
        else if (fmt == "csvh")
            e.spec.format = FileFormat::csv_header;
        else if (fmt == "libsvm")
            e.spec.format = FileFormat::libsvm;
        else
            fail(Errc::malformed_file,
                 path + ":" + std::to_string(lineno) + ": unknown format '" + fmt + "'");
        if (ls >> lc) {
            if (lc == "last") {
                e.spec.label_col = -1;
            } else {
                double v;
                require(detail::parse_double(lc, v) && v >= 0 && v == std::floor(v),
                        Errc::malformed_file,
                        path + ":" + std::to_string(lineno) + ": bad label column '" + lc + "'");
                e.spec.label_col = static_cast<int>(v);
            }
        }
        out.push_back(std::move(e));
    }
    require(!out.empty(), Errc::malformed_file, path + ": empty manifest");
    return out;
}

// Paths in a manifest are resolved relative to the manifest's directory.
inline std::string resolve_relative(const std::string& manifest_path, const std::string& file) {
    if (!file.empty() && file[0] == '/') return file;
    auto slash = manifest_path.find_last_of('/');
    if (slash == std::string::npos) return file;
    return manifest_path.substr(0, slash + 1) + file;
}

inline std::vector<Dataset> load_manifest(const std::string& path) {
    std::vector<Dataset> out;
    for (const auto& e : parse_manifest(path))
        out.push_back(load_dataset(resolve_relative(path, e.path), e.spec, e.name));
    return out;
}

inline void write_csv(const Dataset& ds, const std::string& path) {
    std::ofstream out(path);
    require(out.good(), Errc::io, "cannot write " + path);
    out.precision(17);
    for (int i = 0; i < ds.n(); ++i) {
        for (int j = 0; j < ds.d(); ++j) out << ds.X(i, j) << ',';
        out << (ds.y[i] < 0 ? ds.neg_label : ds.pos_label) << '\n';
    }
    require(out.good(), Errc::io, "failed writing " + path);
}

} // namespace algal
