#pragma once

#include <string>

#include <json.hpp>

#include "burnside/certificate.hpp"
#include "burnside/picard.hpp"

namespace burnside {

using OrderedJson = nlohmann::ordered_json;

std::string format_hash(std::uint64_t h); // 16 hex digits

/// {"name": ..., "version": ...}
OrderedJson tool_header();

/// {"spec": name, "hash": ..., "degree": ..., "order": ...}
OrderedJson group_header(const std::string& name, const MarksTable& t);

OrderedJson marks_report(const std::string& name, const MarksTable& t);
std::string marks_csv(const MarksTable& t);

OrderedJson units_report(const std::string& name, const MarksTable& t, const UnitsReport& u);

OrderedJson picard_report(const std::string& name, const MarksTable& t, const PicardReport& p);
OrderedJson picard_not_computed(const std::string& name, const MarksTable& t,
                                const std::string& reason);

OrderedJson certificate_report(const std::string& name, const MarksTable& t,
                               const Certificate& cert);

/// Compact single-report text rendering for --format text.
std::string render_text(const OrderedJson& report);

} // namespace burnside
