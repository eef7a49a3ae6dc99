#ifndef VOLCERT_REPORT_HPP
#define VOLCERT_REPORT_HPP

#include <string>

#include "volcert/certify.hpp"

namespace volcert {

enum class OutputFormat { Md, Csv, Json };

// Three-place truncation (floor), keeping printed values valid lower
// bounds; values below 1 drop the leading zero to match the table style.
std::string trunc3(double v);

std::string render_table(const TableResult& result, OutputFormat format);
std::string render_certificate(const Certificate& cert, OutputFormat format);
std::string render_lemma(const LemmaReport& report, OutputFormat format);
std::string render_tail(const TailResult& result, OutputFormat format);

}  // namespace volcert

#endif
