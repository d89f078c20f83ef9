#pragma once

#include <string>
#include <vector>

#include "csurf/numberfield.hpp"

namespace csurf::scan {

struct ScanRow {
    int index = 0;  // 1-based, after sorting by discriminant
    Int disc;
    std::string status;  // True | False | skipped-class-number |
                         // non-monogenic-unsupported | error: ...
};

struct ScanReport {
    std::vector<ScanRow> rows;
    int total = 0, passed = 0, failed = 0, skipped = 0, errors = 0;

    std::string ratio_exact() const;    // "passed/decided" or "n/a"
    std::string ratio_decimal() const;  // 6 places, or "n/a"
};

// One row's worth of work; never throws.
std::string scan_one(const nf::FieldRecord& rec);

// Runs the sign-pattern criterion over the records with `jobs` worker
// threads; output is independent of the job count.
ScanReport run_scan(const std::vector<nf::FieldRecord>& records, int jobs = 1);

// Parses a record file (UTF-8, '#' comments, blank lines ignored).
// Malformed lines become rows with an error status and disc = -1.
struct ParsedInput {
    std::vector<nf::FieldRecord> records;
    std::vector<std::string> line_errors;
};
ParsedInput parse_field_file(const std::string& path);

ScanReport run_scan_file(const std::string& path, int jobs = 1);

std::string format_table(const ScanReport& rep);
std::string format_json(const ScanReport& rep);

}  // namespace csurf::scan
