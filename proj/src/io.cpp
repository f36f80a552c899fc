#include "opstft/io.hpp"

#include "json.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace opstft {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& why) {
    throw std::runtime_error(path + ": " + why);
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail(path, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spill(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) fail(path, "cannot open file for writing");
    out << text;
    if (!out) fail(path, "write failed");
}

json parse(const std::string& path) {
    json doc = json::parse(slurp(path), nullptr, false);
    if (doc.is_discarded()) fail(path, "not valid JSON");
    return doc;
}

double number_at(const json& node, const std::string& path) {
    if (!node.is_number()) fail(path, "expected a number entry");
    return node.get<double>();
}

void require_finite(double x, const std::string& path) {
    if (!std::isfinite(x)) throw std::invalid_argument(path + ": entries must be finite");
}

json matrix_to_json(const OperatorMatrix& m, const std::string& path) {
    const int n = static_cast<int>(m.rows());
    json rows = json::array();
    for (int i = 0; i < n; ++i) {
        json row = json::array();
        for (int j = 0; j < n; ++j) {
            require_finite(m(i, j).real(), path);
            require_finite(m(i, j).imag(), path);
            row.push_back({m(i, j).real(), m(i, j).imag()});
        }
        rows.push_back(std::move(row));
    }
    return {{"n", n}, {"data", std::move(rows)}};
}

OperatorMatrix matrix_from_json(const json& doc, const std::string& path) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("data"))
        fail(path, "expected an object with \"n\" and \"data\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1)
        fail(path, "\"n\" must be a positive integer");
    const int n = doc["n"].get<int>();
    const json& data = doc["data"];
    if (!data.is_array() || static_cast<int>(data.size()) != n)
        fail(path, "\"data\" must have exactly n = " + std::to_string(n) + " rows");
    OperatorMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        const json& row = data[i];
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            fail(path, "row " + std::to_string(i) + " must have n = " + std::to_string(n) +
                           " entries");
        for (int j = 0; j < n; ++j) {
            const json& pair = row[j];
            if (!pair.is_array() || pair.size() != 2)
                fail(path, "entries must be [re, im] pairs");
            m(i, j) = Complex(number_at(pair[0], path), number_at(pair[1], path));
        }
    }
    return m;
}

}  // namespace

void write_matrix_json(const std::string& path, const OperatorMatrix& m) {
    if (m.rows() != m.cols() || m.rows() == 0)
        throw std::invalid_argument(path + ": matrix must be square and nonempty");
    spill(path, matrix_to_json(m, path).dump(2) + "\n");
}

OperatorMatrix read_matrix_json(const std::string& path) {
    return matrix_from_json(parse(path), path);
}

void write_field_json(const std::string& path, const OperatorField& field) {
    const int n = field.dim();
    if (n == 0) throw std::invalid_argument(path + ": field must be nonempty");
    json cells = json::object();
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l)
            cells[std::to_string(k) + "," + std::to_string(l)] =
                matrix_to_json(field.at(k, l), path);
    json doc = {{"n", n}, {"cells", std::move(cells)}};
    spill(path, doc.dump(2) + "\n");
}

OperatorField read_field_json(const std::string& path) {
    json doc = parse(path);
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("cells"))
        fail(path, "expected an object with \"n\" and \"cells\"");
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() < 1)
        fail(path, "\"n\" must be a positive integer");
    const int n = doc["n"].get<int>();
    const json& cells = doc["cells"];
    if (!cells.is_object()) fail(path, "\"cells\" must be an object");
    OperatorField field(n);
    int found = 0;
    for (int k = 0; k < n; ++k)
        for (int l = 0; l < n; ++l) {
            std::string key = std::to_string(k) + "," + std::to_string(l);
            if (!cells.contains(key)) fail(path, "missing cell \"" + key + "\"");
            OperatorMatrix cell = matrix_from_json(cells[key], path + " cell " + key);
            if (cell.rows() != n)
                fail(path, "cell \"" + key + "\" has dimension " +
                               std::to_string(cell.rows()) + ", expected N = " +
                               std::to_string(n));
            field.at(k, l) = std::move(cell);
            ++found;
        }
    if (static_cast<int>(cells.size()) != found)
        fail(path, "unexpected extra cell keys");
    return field;
}

namespace {

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

double parse_double(const std::string& text, const std::string& path) {
    size_t used = 0;
    double x = 0.0;
    try {
        x = std::stod(text, &used);
    } catch (const std::exception&) {
        fail(path, "not a number: \"" + text + "\"");
    }
    while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
    if (used != text.size()) fail(path, "trailing characters after number: \"" + text + "\"");
    return x;
}

std::vector<std::vector<std::string>> read_csv_rows(const std::string& path) {
    std::string text = slurp(path);
    std::vector<std::vector<std::string>> rows;
    std::istringstream lines(text);
    std::string line;
    while (std::getline(lines, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::vector<std::string> fields;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) fields.push_back(cell);
        rows.push_back(std::move(fields));
    }
    return rows;
}

}  // namespace

void write_real_grid_csv(const std::string& path, const RealGrid& grid) {
    std::ostringstream out;
    for (Eigen::Index k = 0; k < grid.rows(); ++k) {
        for (Eigen::Index l = 0; l < grid.cols(); ++l) {
            require_finite(grid(k, l), path);
            if (l) out << ',';
            out << format_double(grid(k, l));
        }
        out << '\n';
    }
    spill(path, out.str());
}

RealGrid read_real_grid_csv(const std::string& path) {
    auto rows = read_csv_rows(path);
    if (rows.empty()) fail(path, "empty grid");
    const size_t cols = rows.front().size();
    RealGrid grid(rows.size(), cols);
    for (size_t k = 0; k < rows.size(); ++k) {
        if (rows[k].size() != cols)
            fail(path, "row " + std::to_string(k) + " has " + std::to_string(rows[k].size()) +
                           " columns, expected " + std::to_string(cols));
        for (size_t l = 0; l < cols; ++l) grid(k, l) = parse_double(rows[k][l], path);
    }
    return grid;
}

void write_signal_csv(const std::string& path, const Signal& signal) {
    std::ostringstream out;
    for (Eigen::Index t = 0; t < signal.size(); ++t) {
        require_finite(signal(t).real(), path);
        require_finite(signal(t).imag(), path);
        out << format_double(signal(t).real()) << ',' << format_double(signal(t).imag())
            << '\n';
    }
    spill(path, out.str());
}

Signal read_signal_csv(const std::string& path) {
    auto rows = read_csv_rows(path);
    if (rows.empty()) fail(path, "empty signal");
    Signal signal(rows.size());
    for (size_t t = 0; t < rows.size(); ++t) {
        if (rows[t].size() != 2)
            fail(path, "signal rows must be \"re,im\"; row " + std::to_string(t) + " has " +
                           std::to_string(rows[t].size()) + " fields");
        signal(t) = Complex(parse_double(rows[t][0], path), parse_double(rows[t][1], path));
    }
    return signal;
}

uint64_t fnv1a64(const std::string& bytes) {
    uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string file_digest(const std::string& path) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "fnv1a64:%016llx",
                  static_cast<unsigned long long>(fnv1a64(slurp(path))));
    return buf;
}

}  // namespace opstft
