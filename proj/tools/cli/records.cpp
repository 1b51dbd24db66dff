#include "cli/records.hpp"

#include <algorithm>
#include <ostream>

#include "cli/errors.hpp"

namespace carlitz::cli {

OutputFormat parse_format(std::string_view text) {
    if (text == "jsonl") return OutputFormat::Jsonl;
    if (text == "csv") return OutputFormat::Csv;
    if (text == "table") return OutputFormat::Table;
    throw usage_error("--format must be jsonl, csv or table, got '" + std::string(text) + "'");
}

Row factorization_json(const Factorization& f) {
    Row arr = Row::array();
    for (const auto& [prime, e] : f.factors) arr.push_back(Row{{"prime", to_string(prime)}, {"exponent", e}});
    return arr;
}

Row mersenne_row(const MersenneRecord& r) {
    Row row;
    row["q"] = r.prime.gf().q();
    row["P"] = to_string(r.prime);
    row["value"] = to_string(r.value);
    row["monic"] = to_string(r.monic_associate);
    row["unit"] = r.leading_unit.value();
    row["prime"] = r.is_prime;
    row["factors"] = r.factorization ? factorization_json(*r.factorization) : Row(nullptr);
    return row;
}

Row wieferich_row(const WieferichRecord& r) {
    Row row;
    row["P"] = to_string(r.prime);
    row["residue"] = to_string(r.residue);
    row["wieferich"] = r.is_wieferich;
    row["deg"] = r.prime.degree().value();
    const auto flag = r.degree_divisible_by_p();
    row["deg_div_by_p"] = flag ? Row(*flag) : Row(nullptr);
    return row;
}

Row witness_json(const Witness& w) {
    Row row = Row::object();
    for (const auto& [k, v] : w.fields) row[k] = v;
    return row;
}

Row report_json(const VerificationReport& report, std::uint64_t q) {
    Row row;
    row["suite"] = report.suite;
    row["q"] = q;
    row["cases"] = report.cases;
    row["witnesses"] = report.witnesses.size();
    row["failures"] = report.failures.size();
    row["passed"] = report.passed();
    if (!report.notes.empty()) row["notes"] = report.notes;
    return row;
}

namespace {

std::string cell(const Row& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_null()) return "";
    return v.dump();
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

}  // namespace

void write_rows(std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& columns,
                OutputFormat format) {
    switch (format) {
        case OutputFormat::Jsonl:
            for (const auto& r : rows) out << r.dump() << '\n';
            return;
        case OutputFormat::Csv: {
            for (std::size_t i = 0; i < columns.size(); ++i) out << (i ? "," : "") << columns[i];
            out << '\n';
            for (const auto& r : rows) {
                for (std::size_t i = 0; i < columns.size(); ++i)
                    out << (i ? "," : "") << csv_escape(r.contains(columns[i]) ? cell(r[columns[i]]) : "");
                out << '\n';
            }
            return;
        }
        case OutputFormat::Table: {
            std::vector<std::size_t> width;
            for (const auto& c : columns) width.push_back(c.size());
            std::vector<std::vector<std::string>> cells;
            for (const auto& r : rows) {
                auto& line = cells.emplace_back();
                for (std::size_t i = 0; i < columns.size(); ++i) {
                    line.push_back(r.contains(columns[i]) ? cell(r[columns[i]]) : "");
                    width[i] = std::max(width[i], line.back().size());
                }
            }
            auto emit = [&](const std::vector<std::string>& line) {
                for (std::size_t i = 0; i < line.size(); ++i) {
                    out << line[i];
                    if (i + 1 < line.size()) out << std::string(width[i] - line[i].size() + 2, ' ');
                }
                out << '\n';
            };
            emit(columns);
            for (const auto& line : cells) emit(line);
            return;
        }
    }
}

}  // namespace carlitz::cli
