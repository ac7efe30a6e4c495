// csv.cpp

#include "qbw/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "qbw/errors.hpp"

namespace qbw {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

std::string sanitize(std::string s) {
    for (char& c : s)
        if (c == ',' || c == '\n' || c == '\r') c = ';';
    return s;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::stringstream ss(line);
    while (std::getline(ss, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

} // namespace

void write_csv(const SweepTable& table, std::ostream& out, double energy_scale) {
    for (const std::string& c : table.comments) out << '#' << c << '\n';
    for (const Column& c : table.columns) out << c.name << ',';
    out << "error\n";
    for (std::size_t i = 0; i < table.rows.size(); ++i) {
        const auto& row = table.rows[i];
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (row[j]) out << format_number(table.columns[j].energy ? *row[j] * energy_scale : *row[j]);
            out << ',';
        }
        if (i < table.errors.size()) out << sanitize(table.errors[i]);
        out << '\n';
    }
}

std::string to_csv(const SweepTable& table, double energy_scale) {
    std::ostringstream os;
    write_csv(table, os, energy_scale);
    return os.str();
}

SweepTable read_csv(std::istream& in) {
    SweepTable t;
    std::string line;
    bool have_header = false;
    bool has_error = false;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            t.comments.push_back(line.substr(1));
            continue;
        }
        std::vector<std::string> cells = split(line);
        if (!have_header) {
            has_error = !cells.empty() && cells.back() == "error";
            if (has_error) cells.pop_back();
            if (cells.empty()) throw UsageError("csv: empty header");
            for (const std::string& c : cells) t.columns.push_back({c, false});
            have_header = true;
            continue;
        }
        const std::size_t ncol = t.columns.size();
        if (cells.size() != ncol + (has_error ? 1 : 0))
            throw UsageError("csv line " + std::to_string(line_no) + ": expected " +
                             std::to_string(ncol) + " values");
        std::vector<std::optional<double>> row;
        for (std::size_t j = 0; j < ncol; ++j) {
            if (cells[j].empty()) {
                row.emplace_back();
                continue;
            }
            try {
                std::size_t used = 0;
                row.emplace_back(std::stod(cells[j], &used));
                if (used != cells[j].size()) throw std::invalid_argument(cells[j]);
            } catch (const std::exception&) {
                throw UsageError("csv line " + std::to_string(line_no) + ": bad number '" +
                                 cells[j] + "'");
            }
        }
        t.rows.push_back(std::move(row));
        t.errors.push_back(cells.size() > ncol ? cells[ncol] : std::string{});
    }
    if (!have_header) throw UsageError("csv: missing header row");
    return t;
}

SweepTable read_csv_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    return read_csv(in);
}

} // namespace qbw
