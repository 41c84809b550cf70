#include "btzharvest/csv.hpp"

#include <array>
#include <charconv>
#include <cmath>
#include <ostream>

namespace btzharvest {

const std::vector<std::string>& csv_columns() {
    static const std::vector<std::string> columns = [] {
        std::vector<std::string> c = parameter_names();
        for (const char* name : {"P_A", "P_B", "re_X", "im_X", "abs_X", "concurrence", "negativity",
                                 "n_terms_used", "est_error", "status"}) {
            c.emplace_back(name);
        }
        return c;
    }();
    return columns;
}

std::string format_double(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
    std::array<char, 32> buf;
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

void write_csv_header(std::ostream& out) {
    const auto& cols = csv_columns();
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << '\n';
}

void write_csv_row(std::ostream& out, const SweepRow& row) {
    for (const std::string& name : parameter_names()) out << format_double(get_parameter(row.input, name)) << ',';
    for (double v : {row.p_a, row.p_b, row.re_x, row.im_x, row.abs_x, row.concurrence, row.negativity}) {
        out << format_double(v) << ',';
    }
    out << row.n_terms_used << ',' << format_double(row.est_error) << ',' << row.status << '\n';
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    write_csv_header(out);
    for (const SweepRow& row : rows) write_csv_row(out, row);
}

}  // namespace btzharvest
