#include "igs/io.hpp"

#include <cctype>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <vector>

namespace igs::io {

namespace {

std::string format_message(const std::filesystem::path& path, std::size_t line,
                           const std::string& message) {
    std::string out = path.string();
    if (line != 0) {
        out += ":" + std::to_string(line);
    }
    out += ": " + message;
    return out;
}

// 17 significant digits round-trip every finite double exactly.
std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

struct Line {
    std::size_t number;  // 1-based
    std::string text;
};

std::vector<Line> read_lines(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path, 0, "cannot open for reading");
    }
    std::vector<Line> lines;
    std::string text;
    std::size_t number = 0;
    while (std::getline(in, text)) {
        if (!text.empty() && text.back() == '\r') {
            text.pop_back();
        }
        lines.push_back({++number, text});
    }
    // trailing blank lines carry no content
    while (!lines.empty() && lines.back().text.find_first_not_of(" \t") == std::string::npos) {
        lines.pop_back();
    }
    return lines;
}

bool is_blank(const Line& line) {
    return line.text.find_first_not_of(" \t") == std::string::npos;
}

// Comma or whitespace delimited; runs of delimiters collapse.
std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::string current;
    for (char c : text) {
        if (c == ',' || c == ' ' || c == '\t') {
            if (!current.empty()) {
                tokens.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        tokens.push_back(std::move(current));
    }
    return tokens;
}

double parse_double(const std::filesystem::path& path, std::size_t line,
                    const std::string& token) {
    errno = 0;
    char* end = nullptr;
    const double value = std::strtod(token.c_str(), &end);
    if (end != token.c_str() + token.size() || token.empty()) {
        throw IoError(path, line, "non-numeric token '" + token + "'");
    }
    if (errno == ERANGE && std::isinf(value)) {
        throw IoError(path, line, "value out of range: '" + token + "'");
    }
    return value;
}

double parse_finite(const std::filesystem::path& path, std::size_t line,
                    const std::string& token) {
    const double value = parse_double(path, line, token);
    if (!std::isfinite(value)) {
        throw IoError(path, line, "non-finite value '" + token + "'");
    }
    return value;
}

std::size_t parse_size(const std::filesystem::path& path, std::size_t line,
                       const std::string& token) {
    errno = 0;
    char* end = nullptr;
    const unsigned long long value = std::strtoull(token.c_str(), &end, 10);
    if (end != token.c_str() + token.size() || token.empty() || token[0] == '-' ||
        errno == ERANGE) {
        throw IoError(path, line, "expected a nonnegative integer, got '" + token + "'");
    }
    return static_cast<std::size_t>(value);
}

void atomic_write(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw IoError(path, 0, "cannot open for writing");
        }
        out << content;
        out.flush();
        if (!out) {
            std::filesystem::remove(tmp);
            throw IoError(path, 0, "write failed");
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw IoError(path, 0, "rename failed: " + ec.message());
    }
}

void append_row(std::string& out, std::span<const double> row_major, std::size_t cols,
                std::size_t row, std::size_t rows) {
    for (std::size_t j = 0; j < cols; ++j) {
        if (j != 0) {
            out += ',';
        }
        out += format_double(row_major[row + rows * j]);
    }
    out += '\n';
}

}  // namespace

IoError::IoError(std::filesystem::path path, std::size_t line, const std::string& message)
    : std::runtime_error(format_message(path, line, message)),
      path_(std::move(path)),
      line_(line) {}

VectorSet read_matrix(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw IoError(path, 0, "empty matrix file");
    }
    std::size_t cols = 0;
    std::vector<std::vector<double>> rows;
    for (const Line& line : lines) {
        if (is_blank(line)) {
            throw IoError(path, line.number, "blank line inside matrix");
        }
        const auto tokens = tokenize(line.text);
        if (cols == 0) {
            cols = tokens.size();
        } else if (tokens.size() != cols) {
            throw IoError(path, line.number,
                          "expected " + std::to_string(cols) + " fields, got " +
                              std::to_string(tokens.size()));
        }
        std::vector<double> row;
        row.reserve(cols);
        for (const auto& token : tokens) {
            row.push_back(parse_finite(path, line.number, token));
        }
        rows.push_back(std::move(row));
    }
    VectorSet v(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < cols; ++j) {
            v(i, j) = rows[i][j];
        }
    }
    return v;
}

void write_matrix(const VectorSet& v, const std::filesystem::path& path) {
    std::string out;
    for (std::size_t i = 0; i < v.rows(); ++i) {
        append_row(out, v.values(), v.cols(), i, v.rows());
    }
    atomic_write(path, out);
}

BlockSet read_tensor(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw IoError(path, 0, "empty tensor file");
    }
    const auto header = tokenize(lines[0].text);
    if (header.size() != 4 || header[0] != "dims") {
        throw IoError(path, lines[0].number, "expected header 'dims M B N'");
    }
    const std::size_t m = parse_size(path, lines[0].number, header[1]);
    const std::size_t b = parse_size(path, lines[0].number, header[2]);
    const std::size_t n = parse_size(path, lines[0].number, header[3]);
    if (m == 0 || b == 0 || n == 0) {
        throw IoError(path, lines[0].number, "tensor dims must all be at least 1");
    }

    BlockSet v(m, b, n);
    std::size_t cursor = 1;
    for (std::size_t block = 0; block < n; ++block) {
        if (block != 0) {
            if (cursor >= lines.size() || !is_blank(lines[cursor])) {
                const std::size_t at = cursor < lines.size() ? lines[cursor].number : 0;
                throw IoError(path, at, "expected a blank line between blocks");
            }
            ++cursor;
        }
        for (std::size_t i = 0; i < m; ++i, ++cursor) {
            if (cursor >= lines.size() || is_blank(lines[cursor])) {
                const std::size_t at = cursor < lines.size() ? lines[cursor].number : 0;
                throw IoError(path, at,
                              "block " + std::to_string(block + 1) + " is missing row " +
                                  std::to_string(i + 1));
            }
            const auto tokens = tokenize(lines[cursor].text);
            if (tokens.size() != b) {
                throw IoError(path, lines[cursor].number,
                              "expected " + std::to_string(b) + " fields, got " +
                                  std::to_string(tokens.size()));
            }
            for (std::size_t j = 0; j < b; ++j) {
                v(i, j, block) = parse_finite(path, lines[cursor].number, tokens[j]);
            }
        }
    }
    if (cursor != lines.size()) {
        throw IoError(path, lines[cursor].number,
                      "content after the declared " + std::to_string(n) + " blocks");
    }
    return v;
}

void write_tensor(const BlockSet& v, const std::filesystem::path& path) {
    std::string out = "dims " + std::to_string(v.rows()) + " " + std::to_string(v.block_cols()) +
                      " " + std::to_string(v.count()) + "\n";
    for (std::size_t n = 0; n < v.count(); ++n) {
        if (n != 0) {
            out += '\n';
        }
        const auto block = v.block(n);
        for (std::size_t i = 0; i < v.rows(); ++i) {
            append_row(out, block, v.block_cols(), i, v.rows());
        }
    }
    atomic_write(path, out);
}

PackedCoefficients read_coeffs(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    if (lines.empty()) {
        throw IoError(path, 0, "empty coefficient file");
    }
    const auto header = tokenize(lines[0].text);
    if (header.size() != 2 || header[0] != "n_vectors") {
        throw IoError(path, lines[0].number, "expected header 'n_vectors N'");
    }
    const std::size_t n = parse_size(path, lines[0].number, header[1]);
    if (n == 0) {
        throw IoError(path, lines[0].number, "n_vectors must be at least 1");
    }
    const std::size_t expected = packed_length(n);
    if (lines.size() - 1 != expected) {
        throw IoError(path, 0,
                      "n_vectors " + std::to_string(n) + " needs " + std::to_string(expected) +
                          " coefficients, file has " + std::to_string(lines.size() - 1));
    }
    std::vector<double> values;
    values.reserve(expected);
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto tokens = tokenize(lines[i].text);
        if (tokens.size() != 1) {
            throw IoError(path, lines[i].number, "expected one coefficient per line");
        }
        values.push_back(parse_double(path, lines[i].number, tokens[0]));
    }
    return PackedCoefficients(n, std::move(values));
}

void write_coeffs(const PackedCoefficients& r, const std::filesystem::path& path) {
    std::string out = "n_vectors " + std::to_string(r.n_vectors()) + "\n";
    for (double x : r.values()) {
        out += format_double(x);
        out += '\n';
    }
    atomic_write(path, out);
}

lab::ExperimentRow read_report(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::map<std::string, std::pair<std::size_t, std::string>> fields;
    for (const Line& line : lines) {
        if (is_blank(line)) {
            continue;
        }
        const auto eq = line.text.find('=');
        if (eq == std::string::npos) {
            throw IoError(path, line.number, "expected 'key = value'");
        }
        auto trim = [](std::string s) {
            const auto first = s.find_first_not_of(" \t");
            const auto last = s.find_last_not_of(" \t");
            return first == std::string::npos ? std::string() : s.substr(first, last - first + 1);
        };
        const std::string key = trim(line.text.substr(0, eq));
        const std::string value = trim(line.text.substr(eq + 1));
        if (fields.count(key)) {
            throw IoError(path, line.number, "duplicate key '" + key + "'");
        }
        fields[key] = {line.number, value};
    }
    for (const char* key : {"method", "seed", "M", "N", "max_po", "mae", "mse", "psnr"}) {
        if (!fields.count(key)) {
            throw IoError(path, 0, std::string("missing key '") + key + "'");
        }
    }
    if (fields.size() != 8) {
        for (const auto& [key, where] : fields) {
            if (key != "method" && key != "seed" && key != "M" && key != "N" &&
                key != "max_po" && key != "mae" && key != "mse" && key != "psnr") {
                throw IoError(path, where.first, "unknown key '" + key + "'");
            }
        }
    }
    auto field = [&](const char* key) -> const std::pair<std::size_t, std::string>& {
        return fields.at(key);
    };
    const auto& [method_line, method_text] = field("method");
    const auto method = method_from_string(method_text);
    if (!method) {
        throw IoError(path, method_line, "unknown method '" + method_text + "'");
    }

    lab::ExperimentRow row{};
    row.method = *method;
    {
        const auto& [line, text] = field("seed");
        errno = 0;
        char* end = nullptr;
        const unsigned long long value = std::strtoull(text.c_str(), &end, 10);
        // strtoull silently wraps a leading minus sign; reject it explicitly
        if (end != text.c_str() + text.size() || text.empty() || text[0] == '-' ||
            errno == ERANGE) {
            throw IoError(path, line, "expected an unsigned integer seed, got '" + text + "'");
        }
        row.seed = value;
    }
    row.m = parse_size(path, field("M").first, field("M").second);
    row.n = parse_size(path, field("N").first, field("N").second);
    row.max_po = parse_double(path, field("max_po").first, field("max_po").second);
    row.mae = parse_double(path, field("mae").first, field("mae").second);
    row.mse = parse_double(path, field("mse").first, field("mse").second);
    row.psnr = parse_double(path, field("psnr").first, field("psnr").second);
    return row;
}

void write_report(const lab::ExperimentRow& row, const std::filesystem::path& path) {
    std::string out;
    out += "method = " + std::string(to_string(row.method)) + "\n";
    out += "seed = " + std::to_string(row.seed) + "\n";
    out += "M = " + std::to_string(row.m) + "\n";
    out += "N = " + std::to_string(row.n) + "\n";
    out += "max_po = " + format_double(row.max_po) + "\n";
    out += "mae = " + format_double(row.mae) + "\n";
    out += "mse = " + format_double(row.mse) + "\n";
    out += "psnr = " + format_double(row.psnr) + "\n";
    atomic_write(path, out);
}

POVector read_plot(const std::filesystem::path& path) {
    const auto lines = read_lines(path);
    std::vector<double> values;
    values.reserve(lines.size());
    for (const Line& line : lines) {
        if (is_blank(line)) {
            throw IoError(path, line.number, "blank line inside plot data");
        }
        const auto tokens = tokenize(line.text);
        if (tokens.size() != 2) {
            throw IoError(path, line.number, "expected 'index,value'");
        }
        const std::size_t k = parse_size(path, line.number, tokens[0]);
        if (k != values.size() + 1) {
            throw IoError(path, line.number,
                          "pair index " + std::to_string(k) + " out of order, expected " +
                              std::to_string(values.size() + 1));
        }
        values.push_back(parse_double(path, line.number, tokens[1]));
    }
    // recover N from the triangular length; 0 entries means a single vector
    const std::size_t len = values.size();
    std::size_t n = 1;
    while (packed_length(n) < len) {
        ++n;
    }
    if (packed_length(n) != len) {
        throw IoError(path, 0,
                      std::to_string(len) + " pairs is not N(N-1)/2 for any vector count");
    }
    return POVector(n, std::move(values));
}

void write_plot(const POVector& w, const std::filesystem::path& path) {
    std::string out;
    const auto values = w.values();
    for (std::size_t k = 0; k < values.size(); ++k) {
        out += std::to_string(k + 1);
        out += ',';
        out += format_double(values[k]);
        out += '\n';
    }
    atomic_write(path, out);
}

bool looks_like_tensor(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError(path, 0, "cannot open for reading");
    }
    std::string first;
    if (!std::getline(in, first)) {
        return false;
    }
    const auto tokens = tokenize(first);
    return !tokens.empty() && tokens[0] == "dims";
}

}  // namespace igs::io
