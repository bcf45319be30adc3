#ifndef WEYLKIT_CHECKS_HPP
#define WEYLKIT_CHECKS_HPP

#include "weylkit/filtration.hpp"
#include "weylkit/modular.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace weylkit {

// Result of one named verification.  `certificate` is a JSON object whose
// "identities" array carries every arithmetic relation the verdict rests on,
// in a form replay_certificate can re-evaluate without any other input;
// structural evidence (filtration verdicts, candidate heads) sits next to it.
// `citations` lists the registered statements the check consumed, in order of
// first use.  A check passes only if every recorded identity holds exactly.
struct CheckReport {
    enum class Status { Pass, Fail, DataMissing };

    std::string check_id;
    Status status = Status::DataMissing;
    std::vector<std::pair<std::string, std::string>> computed_values;
    nlohmann::ordered_json certificate;
    std::vector<std::string> citations;
};

const char* status_name(CheckReport::Status s);  // "pass" | "fail" | "data-missing"

// The fixed catalog, in report order.
const std::vector<std::string>& check_catalog();

// Runs one check against the dataset.  Unknown ids raise UnsupportedType.
// Data the check needs but cannot find turns into status DataMissing, never
// into a silent pass.
CheckReport run_check(const std::string& check_id, const Dataset& data);

// The whole catalog, in catalog order.
std::vector<CheckReport> run_all_checks(const Dataset& data);

bool all_passed(const std::vector<CheckReport>& reports);

// Re-evaluates every identity recorded in a certificate: each entry of
// certificate["identities"] is {label, relation, lhs, rhs} with relation one
// of "eq", "ne", "le", "lt", "ge", "gt" and operands that are integers or
// nested {"sum": [...]} / {"product": [...]} terms.  Returns true iff all
// relations hold.  Everything needed is inside the certificate itself.
bool replay_certificate(const nlohmann::json& certificate);

// Deterministic renderings: no timestamps, fixed ordering, byte-stable for
// identical inputs.
std::string render_text_report(const Dataset& data, const std::vector<CheckReport>& reports);
nlohmann::ordered_json render_json_report(const std::vector<CheckReport>& reports);

}  // namespace weylkit

#endif
