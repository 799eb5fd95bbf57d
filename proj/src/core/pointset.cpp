#include "pointset.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace rgg {

PointSet::PointSet(int d, std::int64_t n) : d_(d), n_(n) {
    if (d < 1) throw UsageError("PointSet: dimension must be >= 1");
    if (n < 0) throw UsageError("PointSet: count must be >= 0");
    coords_.assign(static_cast<std::size_t>(d) * n, 0.0);
}

PointSet PointSet::from_rows(int d, std::span<const double> row_major) {
    if (d < 1) throw UsageError("PointSet: dimension must be >= 1");
    if (row_major.size() % d != 0) throw UsageError("PointSet: row data not a multiple of d");
    std::int64_t n = static_cast<std::int64_t>(row_major.size() / d);
    PointSet ps(d, n);
    for (std::int64_t i = 0; i < n; ++i) {
        for (int k = 0; k < d; ++k) ps.set_coord(i, k, row_major[i * d + k]);
    }
    return ps;
}

void PointSet::save_csv(std::ostream& os) const {
    for (int k = 0; k < d_; ++k) {
        os << (k ? ",x" : "x") << (k + 1);
    }
    os << '\n';
    char buf[40];
    for (std::int64_t i = 0; i < n_; ++i) {
        for (int k = 0; k < d_; ++k) {
            std::snprintf(buf, sizeof(buf), "%.17g", coord(i, k));
            if (k) os << ',';
            os << buf;
        }
        os << '\n';
    }
}

void PointSet::save_csv_file(const std::string& path) const {
    std::ofstream os(path);
    if (!os) throw UsageError("PointSet: cannot open for writing: " + path);
    save_csv(os);
}

PointSet PointSet::load_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line)) throw UsageError("PointSet: empty CSV");
    int d = 0;
    {
        std::stringstream hs(line);
        std::string col;
        while (std::getline(hs, col, ',')) {
            std::string want = "x" + std::to_string(d + 1);
            if (col != want) throw UsageError("PointSet: bad CSV header column '" + col + "'");
            ++d;
        }
    }
    if (d < 1) throw UsageError("PointSet: CSV header has no columns");
    std::vector<double> rows;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        const char* s = line.c_str();
        for (int k = 0; k < d; ++k) {
            char* end = nullptr;
            double v = std::strtod(s, &end);
            if (end == s) throw UsageError("PointSet: bad CSV number in row");
            rows.push_back(v);
            s = end;
            if (k + 1 < d) {
                if (*s != ',') throw UsageError("PointSet: expected ',' in CSV row");
                ++s;
            }
        }
    }
    return from_rows(d, rows);
}

PointSet PointSet::load_csv_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw UsageError("PointSet: cannot open for reading: " + path);
    return load_csv(is);
}

}  // namespace rgg
