#pragma once

#include "olpuc/checks.hpp"

#include <iosfwd>
#include <string>

namespace olpuc {

// measure spec from JSON text; ParseError names the line or the offending field.
// `source` prefixes the messages (usually the file name)
Measure parse_measure(const std::string& text, const std::string& source = "<input>");
Measure load_measure(const std::string& path);

// "0.1", "-0.2i", "0.1+0.05i", "1e-3-2e-3i"
cplx parse_complex(const std::string& s);
// comma separated list of the above
std::vector<cplx> parse_complex_list(const std::string& s);
// "n+,n-"
Ordering parse_ordering(const std::string& s);

// {"check", "params", "residual", "tolerance", "pass"} objects with 15 significant digits
void write_report_json(std::ostream& os, const std::vector<CheckResult>& results);
void write_report_table(std::ostream& os, const std::vector<CheckResult>& results);

} // namespace olpuc
