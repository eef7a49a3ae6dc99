#include "volcert/report.hpp"

#include <cmath>
#include <sstream>

namespace volcert {

namespace {

std::string label_text(const std::vector<QuantityId>& active) {
    std::string s;
    for (QuantityId q : active) {
        if (!s.empty()) s += ",";
        s += quantity_name(q);
    }
    return s;
}

std::string h_cell(const TableRow& row) {
    std::string s = trunc3(row.h_lb);
    std::string lbl = label_text(row.h_active);
    if (!lbl.empty()) s += " (" + lbl + ")";
    return s;
}

std::string range_cell(const TableRow& row) {
    return "[" + row.c1_lo_text + "," + row.c1_hi_text + "]";
}

// Fields containing a comma are quoted so the csv stays 5 columns wide.
std::string csv_cell(const std::string& s) {
    if (s.find(',') == std::string::npos) return s;
    return "\"" + s + "\"";
}

}  // namespace

std::string trunc3(double v) {
    double t = std::floor(v * 1000.0) / 1000.0;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", t);
    std::string s(buf);
    if (s.size() > 1 && s[0] == '0' && s[1] == '.') s.erase(0, 1);
    return s;
}

std::string render_table(const TableResult& result, OutputFormat format) {
    std::ostringstream os;
    switch (format) {
        case OutputFormat::Md: {
            os << "| cosh l1 | muffin volume | area | H | volume |\n";
            os << "|---|---|---|---|---|\n";
            for (const TableRow& row : result.rows) {
                os << "| " << range_cell(row) << " | " << trunc3(row.muffin_lb) << " | "
                   << trunc3(row.area_lb) << " | " << h_cell(row) << " | "
                   << trunc3(row.vol_lb) << " |";
                if (!row.passed) os << " FAILED(" << row.failure << ")";
                os << "\n";
            }
            os << "\nstatus: " << verdict_name(result.cert.status) << "\n";
            break;
        }
        case OutputFormat::Csv: {
            os << "cosh_l1,muffin_volume,area,H,volume\n";
            for (const TableRow& row : result.rows) {
                os << csv_cell(range_cell(row)) << "," << trunc3(row.muffin_lb) << ","
                   << trunc3(row.area_lb) << "," << csv_cell(h_cell(row)) << ","
                   << trunc3(row.vol_lb) << "\n";
            }
            break;
        }
        case OutputFormat::Json: {
            os << "{\"table_id\": " << result.table_id << ", \"rows\": [";
            bool first = true;
            for (const TableRow& row : result.rows) {
                if (!first) os << ", ";
                first = false;
                os << "{\"c1\": " << row.c1_range.to_json()
                   << ", \"muffin_lb\": \"" << shortest_decimal(row.muffin_lb)
                   << "\", \"area_lb\": \"" << shortest_decimal(row.area_lb)
                   << "\", \"h_lb\": \"" << shortest_decimal(row.h_lb)
                   << "\", \"h_lb_unfloored\": \"" << shortest_decimal(row.h_lb_unfloored)
                   << "\", \"h_active\": \"" << label_text(row.h_active)
                   << "\", \"vol_lb\": \"" << shortest_decimal(row.vol_lb)
                   << "\", \"passed\": " << (row.passed ? "true" : "false") << "}";
            }
            os << "], \"certificate\": " << result.cert.to_json() << "}";
            break;
        }
    }
    return os.str();
}

std::string render_certificate(const Certificate& cert, OutputFormat format) {
    if (format == OutputFormat::Json) return cert.to_json();
    std::ostringstream os;
    os << "claim: " << cert.claim_id << "\n"
       << "status: " << verdict_name(cert.status) << "\n"
       << "depth_used: " << cert.depth_used << "\n"
       << "pieces: " << cert.pieces.size() << "\n";
    if (format == OutputFormat::Csv) {
        os << "lo,hi,bound_lo,bound_hi,kind\n";
        for (const Piece& p : cert.pieces) {
            os << shortest_decimal(p.c1.lo()) << "," << shortest_decimal(p.c1.hi()) << ","
               << shortest_decimal(p.bound.lo()) << "," << shortest_decimal(p.bound.hi())
               << "," << p.kind << "\n";
        }
    }
    return os.str();
}

std::string render_lemma(const LemmaReport& report, OutputFormat format) {
    std::ostringstream os;
    if (format == OutputFormat::Json) {
        os << "{\"lemma\": \"" << lemma_name(report.id) << "\", \"verdict\": \""
           << verdict_name(report.verdict) << "\", \"witnesses\": [";
        for (std::size_t i = 0; i < report.witnesses.size(); ++i) {
            if (i) os << ", ";
            os << "{\"name\": \"" << report.witnesses[i].name
               << "\", \"value\": " << report.witnesses[i].value.to_json() << "}";
        }
        os << "], \"detail\": \"" << report.detail << "\"}";
        return os.str();
    }
    os << "lemma: " << lemma_name(report.id) << "\n"
       << "verdict: " << verdict_name(report.verdict) << "\n";
    for (const Witness& w : report.witnesses) {
        os << "  " << w.name << " in [" << shortest_decimal(w.value.lo()) << ", "
           << shortest_decimal(w.value.hi()) << "]\n";
    }
    if (!report.detail.empty()) os << "  " << report.detail << "\n";
    return os.str();
}

std::string render_tail(const TailResult& result, OutputFormat format) {
    if (format == OutputFormat::Json) {
        std::ostringstream os;
        os << "{\"verdict\": \"" << verdict_name(result.verdict) << "\", \"witnesses\": [";
        for (std::size_t i = 0; i < result.witnesses.size(); ++i) {
            if (i) os << ", ";
            os << "{\"name\": \"" << result.witnesses[i].name
               << "\", \"value\": " << result.witnesses[i].value.to_json() << "}";
        }
        os << "], \"certificate\": " << result.cert.to_json() << "}";
        return os.str();
    }
    std::ostringstream os;
    os << "tail certificate: " << verdict_name(result.verdict) << "\n";
    for (const Witness& w : result.witnesses) {
        os << "  " << w.name << " in [" << shortest_decimal(w.value.lo()) << ", "
           << shortest_decimal(w.value.hi()) << "]\n";
    }
    return os.str();
}

}  // namespace volcert
