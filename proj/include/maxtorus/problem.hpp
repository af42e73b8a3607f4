#ifndef MAXTORUS_PROBLEM_HPP
#define MAXTORUS_PROBLEM_HPP

#include "maxtorus/engine.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace maxtorus {

using Json = nlohmann::ordered_json;

// One decision query as written in the input document:
//   {"algebra": [{"type":"quad","d":-1}, {"type":"general","f":[...],"theta":[...]}],
//    "form": {"diagonal":[...]} | {"gram":[[...]]},
//    "options": {"prime_bound":1000, "oracle_height":0,
//                "annotations":[{"component":0,"prime":3,"status":"split"}]}}
// Rationals are JSON integers or strings "p" / "p/q".
struct ProblemDocument {
    std::vector<ComponentSpec> algebra;
    std::optional<std::vector<Rational>> diagonal;
    std::optional<RationalMatrix> gram;
    std::uint64_t prime_bound = kDefaultPrimeBound;
    unsigned oracle_height = 0;
    AnnotationSet annotations;
};

// Validated inputs ready for the engine.
struct Problem {
    EtaleAlgebra algebra;
    QuadraticSpace form;
    AnnotationSet annotations;
    std::uint64_t prime_bound;
    unsigned oracle_height;
};

// Throws InputError naming the JSON pointer of the offending value.
ProblemDocument parse_problem(const Json& doc);
// Text to JSON; syntax errors carry the byte offset.
Json parse_json_text(const std::string& text);

// Component validation, form diagonalization and the rank check. Throws
// InputError naming the offending JSON pointer.
Problem build_problem(const ProblemDocument& doc);

// Canonical rendering: reduced rationals, integers as JSON numbers when they
// fit in 64 bits, every option present, annotations sorted.
Json render_problem(const ProblemDocument& doc);

Rational parse_rational(const Json& value, const std::string& pointer);
Json rational_json(const Rational& x);
Json integer_json(const Integer& n);

} // namespace maxtorus

#endif
