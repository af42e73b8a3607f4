#ifndef MAXTORUS_REPORT_HPP
#define MAXTORUS_REPORT_HPP

#include "maxtorus/engine.hpp"
#include "maxtorus/oracle.hpp"
#include "maxtorus/problem.hpp"

#include <string>

namespace maxtorus {

inline constexpr const char* kToolName = "maxtorus";
inline constexpr const char* kToolVersion = "1.0.0";

Json place_json(const Place& v);
Json places_json(const PlaceSet& s);
Json invariants_json(const QFInvariants& inv);
Json local_json(const LocalCheckResult& r);
Json report_json(const DecisionReport& r);
Json algebra_json(const EtaleAlgebra& e);
Json oracle_json(const OracleResult& r);

// Inverses of the renderers above; throw InputError on malformed data.
Place parse_place(const Json& j);
QFInvariants parse_invariants(const Json& j);
LocalCheckResult parse_local(const Json& j);
DecisionReport parse_report(const Json& j);

// {"tool": {...}, "input": normalized problem, "report": {...}}.
Json report_document(const ProblemDocument& doc, const DecisionReport& r);

// One line for humans, e.g. "realizable (fast path cm)".
std::string summary_line(const DecisionReport& r);

} // namespace maxtorus

#endif
