#include "csurf/scan.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <sstream>
#include <thread>

namespace csurf::scan {

std::string ScanReport::ratio_exact() const {
    int decided = passed + failed;
    if (decided == 0) return "n/a";
    std::ostringstream os;
    os << passed << "/" << decided;
    return os.str();
}

std::string ScanReport::ratio_decimal() const {
    int decided = passed + failed;
    if (decided == 0) return "n/a";
    return decimal_string(make_rat(passed, decided), 6);
}

std::string scan_one(const nf::FieldRecord& rec) {
    try {
        auto field = nf::NumberField::create(rec.coeffs, rec.disc, rec.class_number);
        if (field->class_number() != 1) return "skipped-class-number";
        if (!field->monogenic()) return "non-monogenic-unsupported";
        std::vector<nf::Felem> units;
        units.reserve(rec.units.size());
        for (const auto& u : rec.units) {
            nf::Felem elem = nf::from_int_coords(field, u);
            if (!nf::is_unit(elem)) return "error: supplied unit has norm != +-1";
            units.push_back(std::move(elem));
        }
        auto res = nf::sign_pattern_search(field, units);
        return res.found ? "True" : "False";
    } catch (const DomainError& e) {
        return std::string("error: ") + e.token();
    } catch (const std::exception& e) {
        return std::string("error: ") + e.what();
    }
}

ScanReport run_scan(const std::vector<nf::FieldRecord>& records, int jobs) {
    // sort ascending by discriminant, stable for equal discs
    std::vector<size_t> order(records.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        return records[a].disc < records[b].disc;
    });

    std::vector<std::string> statuses(records.size());
    if (jobs < 1) jobs = 1;
    jobs = std::min<int>(jobs, std::max<size_t>(records.size(), 1));
    std::atomic<size_t> next{0};
    auto worker = [&] {
        while (true) {
            size_t i = next.fetch_add(1);
            if (i >= order.size()) break;
            statuses[i] = scan_one(records[order[i]]);
        }
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ScanReport rep;
    rep.total = (int)records.size();
    for (size_t i = 0; i < order.size(); ++i) {
        ScanRow row;
        row.index = (int)i + 1;
        row.disc = records[order[i]].disc;
        row.status = statuses[i];
        if (row.status == "True")
            ++rep.passed;
        else if (row.status == "False")
            ++rep.failed;
        else if (row.status == "skipped-class-number" ||
                 row.status == "non-monogenic-unsupported")
            ++rep.skipped;
        else
            ++rep.errors;
        rep.rows.push_back(std::move(row));
    }
    return rep;
}

ParsedInput parse_field_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open field file: " + path);
    ParsedInput out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string trimmed = line;
        size_t a = trimmed.find_first_not_of(" \t\r\n");
        if (a == std::string::npos) continue;
        if (trimmed[a] == '#') continue;
        std::string err;
        auto rec = nf::parse_field_record(line, &err);
        if (!rec) {
            std::ostringstream os;
            os << "line " << lineno << ": " << err;
            out.line_errors.push_back(os.str());
            continue;
        }
        out.records.push_back(std::move(*rec));
    }
    return out;
}

ScanReport run_scan_file(const std::string& path, int jobs) {
    ParsedInput in = parse_field_file(path);
    ScanReport rep = run_scan(in.records, jobs);
    for (const auto& e : in.line_errors) {
        ScanRow row;
        row.index = (int)rep.rows.size() + 1;
        row.disc = -1;
        row.status = "error: " + e;
        rep.rows.push_back(std::move(row));
        ++rep.errors;
        ++rep.total;
    }
    return rep;
}

std::string format_table(const ScanReport& rep) {
    std::ostringstream os;
    os << "  idx      discr   result\n";
    for (const auto& row : rep.rows) {
        std::string d = row.disc < 0 ? "-" : row.disc.get_str();
        os << "  " << row.index;
        for (size_t pad = std::to_string(row.index).size(); pad < 3; ++pad) os << ' ';
        os << "  ";
        for (size_t pad = d.size(); pad < 9; ++pad) os << ' ';
        os << d << "   " << row.status << "\n";
    }
    os << "summary: total=" << rep.total << " passed=" << rep.passed << " failed=" << rep.failed
       << " skipped=" << rep.skipped << " errors=" << rep.errors
       << " ratio=" << rep.ratio_exact() << " (" << rep.ratio_decimal() << ")\n";
    return os.str();
}

std::string format_json(const ScanReport& rep) {
    std::ostringstream os;
    os << "{\"rows\":[";
    for (size_t i = 0; i < rep.rows.size(); ++i) {
        const auto& r = rep.rows[i];
        if (i) os << ",";
        os << "{\"index\":" << r.index << ",\"disc\":" << r.disc.get_str() << ",\"status\":\""
           << r.status << "\"}";
    }
    os << "],\"total\":" << rep.total << ",\"passed\":" << rep.passed
       << ",\"failed\":" << rep.failed << ",\"skipped\":" << rep.skipped
       << ",\"errors\":" << rep.errors << ",\"ratio\":\"" << rep.ratio_exact() << "\""
       << ",\"ratio_decimal\":\"" << rep.ratio_decimal() << "\"}";
    return os.str();
}

}  // namespace csurf::scan
