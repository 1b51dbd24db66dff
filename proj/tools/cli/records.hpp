#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "carlitz/factor.hpp"
#include "carlitz/mersenne.hpp"
#include "carlitz/report.hpp"
#include "carlitz/wieferich.hpp"

namespace carlitz::cli {

using Row = nlohmann::ordered_json;

enum class OutputFormat { Jsonl, Csv, Table };

/// Throws a usage error for anything other than jsonl, csv or table.
OutputFormat parse_format(std::string_view text);

// Fixed column sets, also listed in --help.
inline const std::vector<std::string> kMersenneColumns = {"q", "P", "value", "monic", "unit", "prime", "factors"};
inline const std::vector<std::string> kWieferichColumns = {"P", "residue", "wieferich", "deg", "deg_div_by_p"};
inline const std::vector<std::string> kTwinColumns = {"q", "wp", "wp_plus_one"};

Row mersenne_row(const MersenneRecord& record);
Row wieferich_row(const WieferichRecord& record);
Row factorization_json(const Factorization& f);
Row witness_json(const Witness& w);
/// Summary line for a verification suite.
Row report_json(const VerificationReport& report, std::uint64_t q);

/// Renders rows; csv and table use `columns` in order. jsonl output is
/// one compact object per line and is what the determinism guarantee covers.
void write_rows(std::ostream& out, const std::vector<Row>& rows, const std::vector<std::string>& columns,
                OutputFormat format);

}  // namespace carlitz::cli
