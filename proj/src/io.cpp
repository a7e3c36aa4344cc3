#include "mwd/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "mwd/errors.hpp"

namespace mwd {

namespace {

bool skippable(const std::string& line) {
    auto pos = line.find_first_not_of(" \t\r");
    return pos == std::string::npos || line[pos] == '#';
}

[[noreturn]] void fail(int lineno, const std::string& what) {
    throw input_error("line " + std::to_string(lineno) + ": " + what);
}

struct Row {
    int lineno;
    Point point;
    std::string second;
};

std::vector<Row> read_rows(std::istream& in, const PrimeField& field,
                           bool want_second) {
    std::vector<Row> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skippable(line)) continue;
        std::istringstream fields(line);
        std::string point_text, second, extra;
        fields >> point_text;
        bool has_second = static_cast<bool>(fields >> second);
        if (fields >> extra)
            fail(lineno, "unexpected trailing field \"" + extra + "\"");
        if (want_second && !has_second)
            fail(lineno, "expected \"<point> <output>\"");
        if (!want_second && has_second)
            fail(lineno, "unexpected trailing field \"" + second + "\"");
        try {
            rows.push_back({lineno, parse_point(point_text, field), second});
        } catch (const input_error& e) {
            fail(lineno, e.what());
        }
    }
    return rows;
}

template <typename Reader>
auto from_file(const std::string& path, const PrimeField& field, Reader read)
    -> decltype(read(std::declval<std::istream&>(), field)) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return read(in, field);
    } catch (const input_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

} // namespace

InputSet read_points(std::istream& in, const PrimeField& field) {
    auto rows = read_rows(in, field, false);
    if (rows.empty()) throw input_error("no points in input");
    std::vector<Point> points;
    points.reserve(rows.size());
    for (auto& row : rows) points.push_back(std::move(row.point));
    return InputSet(std::move(points), field);
}

DataSet read_data(std::istream& in, const PrimeField& field) {
    auto rows = read_rows(in, field, true);
    if (rows.empty()) throw input_error("no data rows in input");
    std::vector<Point> points;
    std::vector<std::uint32_t> values;
    points.reserve(rows.size());
    values.reserve(rows.size());
    for (auto& row : rows) {
        size_t used = 0;
        unsigned long v = 0;
        try {
            v = std::stoul(row.second, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != row.second.size() || v >= field.p())
            fail(row.lineno, "output value \"" + row.second +
                                 "\" is not an element of F_" +
                                 std::to_string(field.p()));
        points.push_back(std::move(row.point));
        values.push_back(static_cast<std::uint32_t>(v));
    }
    return DataSet(InputSet(std::move(points), field),
                   OutputAssignment{std::move(values)});
}

InputSet read_points_file(const std::string& path, const PrimeField& field) {
    return from_file(path, field,
                     [](std::istream& in, const PrimeField& F) {
                         return read_points(in, F);
                     });
}

DataSet read_data_file(const std::string& path, const PrimeField& field) {
    return from_file(path, field,
                     [](std::istream& in, const PrimeField& F) {
                         return read_data(in, F);
                     });
}

} // namespace mwd
