#include "maxtorus/report.hpp"
#include "maxtorus/error.hpp"

namespace maxtorus {

namespace {

[[noreturn]] void malformed(const std::string& what) { throw InputError("malformed report: " + what); }

const Json& at(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        malformed(std::string("missing \"") + key + "\"");
    return j[key];
}

bool get_bool(const Json& j, const char* key)
{
    const Json& v = at(j, key);
    if (!v.is_boolean())
        malformed(std::string(key) + " is not a boolean");
    return v.get<bool>();
}

std::uint64_t get_count(const Json& j, const char* key)
{
    const Json& v = at(j, key);
    if (!v.is_number_unsigned())
        malformed(std::string(key) + " is not a count");
    return v.get<std::uint64_t>();
}

const Json& get_array(const Json& j, const char* key)
{
    const Json& v = at(j, key);
    if (!v.is_array())
        malformed(std::string(key) + " is not an array");
    return v;
}

Integer get_integer(const Json& v)
{
    const Rational x = parse_rational(v, "");
    if (x.get_den() != 1)
        malformed("expected an integer");
    return x.get_num();
}

SquareClass get_class(const Json& v) { return SquareClass::of(Rational(get_integer(v))); }

std::vector<std::string> get_strings(const Json& j, const char* key)
{
    std::vector<std::string> out;
    for (const auto& s : get_array(j, key)) {
        if (!s.is_string())
            malformed(std::string(key) + " holds a non-string");
        out.push_back(s.get<std::string>());
    }
    return out;
}

Json signature_json(const Signature& s) { return Json::array({s.positive, s.negative}); }

Signature parse_signature(const Json& j)
{
    if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
        malformed("signature");
    return {j[0].get<unsigned>(), j[1].get<unsigned>()};
}

PlaceSet parse_places(const Json& j)
{
    if (!j.is_array())
        malformed("place list");
    PlaceSet out;
    for (const auto& v : j)
        out.insert(parse_place(v));
    return out;
}

LocalCondition parse_condition(const Json& j)
{
    if (j == "disc")
        return LocalCondition::Disc;
    if (j == "hyperbolicity")
        return LocalCondition::Hyperbolicity;
    if (j == "signature")
        return LocalCondition::Signature;
    malformed("condition");
}

Verdict parse_verdict(const Json& j)
{
    for (Verdict v : {Verdict::LocallyFails, Verdict::Realizable, Verdict::NotRealizableUpToBound, Verdict::Inconclusive})
        if (j == to_string(v))
            return v;
    malformed("verdict");
}

Json needed_json(const std::vector<NeededAnnotation>& needed)
{
    Json out = Json::array();
    for (const auto& a : needed)
        out.push_back({{"component", a.component}, {"prime", integer_json(a.prime)}, {"reason", a.reason}});
    return out;
}

std::vector<NeededAnnotation> parse_needed(const Json& j)
{
    if (!j.is_array())
        malformed("annotation list");
    std::vector<NeededAnnotation> out;
    for (const auto& a : j) {
        const Json& reason = at(a, "reason");
        if (!reason.is_string())
            malformed("reason");
        out.push_back({get_count(a, "component"), get_integer(at(a, "prime")), reason.get<std::string>()});
    }
    return out;
}

Json optional_place_json(const std::optional<Place>& v) { return v ? place_json(*v) : Json(nullptr); }

std::optional<Place> parse_optional_place(const Json& j)
{
    if (j.is_null())
        return std::nullopt;
    return parse_place(j);
}

Json summary_json(const PairSummary& s)
{
    Json out;
    out["form"] = invariants_json(s.form);
    out["algebra_disc"] = integer_json(s.algebra_disc.rep());
    out["rho"] = s.rho;
    out["rho_unweighted"] = s.rho_unweighted;
    out["ramified"] = s.ramified;
    out["deviation_set"] = places_json(s.deviation);
    out["pairing_support"] = places_json(s.pairing);
    out["sigma"] = places_json(s.sigma);
    return out;
}

PairSummary parse_summary(const Json& j)
{
    PairSummary s;
    s.form = parse_invariants(at(j, "form"));
    s.algebra_disc = get_class(at(j, "algebra_disc"));
    s.rho = static_cast<unsigned>(get_count(j, "rho"));
    s.rho_unweighted = static_cast<unsigned>(get_count(j, "rho_unweighted"));
    s.ramified = static_cast<unsigned>(get_count(j, "ramified"));
    s.deviation = parse_places(at(j, "deviation_set"));
    s.pairing = parse_places(at(j, "pairing_support"));
    s.sigma = parse_places(at(j, "sigma"));
    return s;
}

Json baseline_json(const BaselineCollection& c)
{
    Json out;
    out["sigma"] = places_json(c.sigma_set);
    Json bits = Json::array();
    for (const auto& [v, b] : c.bits)
        bits.push_back({{"place", place_json(v)}, {"bits", b}});
    out["bits"] = std::move(bits);
    Json sigs = Json::array();
    for (const auto& s : c.infinity_signatures)
        sigs.push_back(signature_json(s));
    out["infinity_signatures"] = std::move(sigs);
    return out;
}

BaselineCollection parse_baseline(const Json& j)
{
    BaselineCollection c;
    c.sigma_set = parse_places(at(j, "sigma"));
    for (const auto& row : get_array(j, "bits"))
        c.bits[parse_place(at(row, "place"))] = get_array(row, "bits").get<std::vector<int>>();
    for (const auto& s : get_array(j, "infinity_signatures"))
        c.infinity_signatures.push_back(parse_signature(s));
    return c;
}

Json graph_json(const ComponentGraph& g)
{
    Json out;
    out["vertices"] = g.vertices;
    Json edges = Json::array();
    for (const auto& e : g.edges)
        edges.push_back({{"i", e.i}, {"j", e.j}, {"witness", place_json(e.witness)}});
    out["edges"] = std::move(edges);
    Json unresolved = Json::array();
    for (const auto& [i, j] : g.unresolved_pairs)
        unresolved.push_back(Json::array({i, j}));
    out["unresolved_pairs"] = std::move(unresolved);
    return out;
}

ComponentGraph parse_graph(const Json& j)
{
    ComponentGraph g;
    g.vertices = get_count(j, "vertices");
    for (const auto& e : get_array(j, "edges"))
        g.edges.push_back({get_count(e, "i"), get_count(e, "j"), parse_place(at(e, "witness"))});
    for (const auto& p : get_array(j, "unresolved_pairs")) {
        if (!p.is_array() || p.size() != 2)
            malformed("unresolved pair");
        g.unresolved_pairs.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
    }
    return g;
}

Json fast_path_json(const FastPath& f)
{
    Json out;
    switch (f.kind) {
    case FastPathKind::None:
        out["kind"] = "none";
        break;
    case FastPathKind::CM:
        out["kind"] = "cm";
        break;
    case FastPathKind::Star:
        out["kind"] = "star";
        out["center"] = f.center;
        break;
    }
    return out;
}

FastPath parse_fast_path(const Json& j)
{
    const Json& kind = at(j, "kind");
    if (kind == "none")
        return {};
    if (kind == "cm")
        return {FastPathKind::CM, 0};
    if (kind == "star")
        return {FastPathKind::Star, get_count(j, "center")};
    malformed("fast path");
}

Json poly_coeffs_json(const PolyQ& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(rational_json(c));
    return out;
}

Json diagonal_json(const QuadraticSpace& q)
{
    Json out = Json::array();
    for (const auto& x : q.diagonal())
        out.push_back(rational_json(x));
    return out;
}

} // namespace

Json place_json(const Place& v) { return v.to_string(); }

Place parse_place(const Json& j)
{
    if (!j.is_string())
        malformed("place");
    try {
        return Place::parse(j.get<std::string>());
    } catch (const std::domain_error&) {
        malformed("place \"" + j.get<std::string>() + "\"");
    }
}

Json places_json(const PlaceSet& s)
{
    Json out = Json::array();
    for (const auto& v : s)
        out.push_back(place_json(v));
    return out;
}

Json invariants_json(const QFInvariants& inv)
{
    Json out;
    out["dim"] = inv.dim;
    out["det"] = integer_json(inv.det.rep());
    out["disc"] = integer_json(inv.disc.rep());
    out["hasse_support"] = places_json(inv.hasse_support);
    out["signature"] = signature_json(inv.signature);
    return out;
}

QFInvariants parse_invariants(const Json& j)
{
    QFInvariants inv;
    inv.dim = get_count(j, "dim");
    inv.det = get_class(at(j, "det"));
    inv.disc = get_class(at(j, "disc"));
    inv.hasse_support = parse_places(at(j, "hasse_support"));
    inv.signature = parse_signature(at(j, "signature"));
    return inv;
}

Json local_json(const LocalCheckResult& r)
{
    Json out;
    out["disc_ok"] = r.disc_ok;
    out["hyperbolicity_ok"] = r.hyperbolicity_ok ? Json(*r.hyperbolicity_ok) : Json("indeterminate");
    out["signature_ok"] = r.signature_ok;
    out["failing_place"] = optional_place_json(r.failing_place);
    out["failing_condition"] = r.failing_condition ? Json(to_string(*r.failing_condition)) : Json(nullptr);
    Json failures = Json::array();
    for (const auto& f : r.failures)
        failures.push_back({{"place", optional_place_json(f.place)}, {"condition", to_string(f.condition)}});
    out["failures"] = std::move(failures);
    out["needed_annotations"] = needed_json(r.needed);
    return out;
}

LocalCheckResult parse_local(const Json& j)
{
    LocalCheckResult r;
    r.disc_ok = get_bool(j, "disc_ok");
    const Json& h = at(j, "hyperbolicity_ok");
    if (h.is_boolean())
        r.hyperbolicity_ok = h.get<bool>();
    else if (h == "indeterminate")
        r.hyperbolicity_ok = std::nullopt;
    else
        malformed("hyperbolicity_ok");
    r.signature_ok = get_bool(j, "signature_ok");
    r.failing_place = parse_optional_place(at(j, "failing_place"));
    if (!at(j, "failing_condition").is_null())
        r.failing_condition = parse_condition(j["failing_condition"]);
    for (const auto& f : get_array(j, "failures"))
        r.failures.push_back({parse_optional_place(at(f, "place")), parse_condition(at(f, "condition"))});
    r.needed = parse_needed(at(j, "needed_annotations"));
    return r;
}

Json report_json(const DecisionReport& r)
{
    Json out;
    out["verdict"] = to_string(r.verdict);
    out["bound"] = r.bound;
    out["fast_path"] = fast_path_json(r.fast_path);
    out["summary"] = summary_json(r.summary);
    out["local"] = local_json(r.local);
    out["baseline"] = r.baseline ? baseline_json(*r.baseline) : Json(nullptr);
    out["parity"] = r.parity;
    out["graph"] = r.graph ? graph_json(*r.graph) : Json(nullptr);
    out["needed_annotations"] = needed_json(r.needed_annotations);
    out["inconclusive_reasons"] = r.inconclusive_reasons;
    out["notes"] = r.notes;
    return out;
}

DecisionReport parse_report(const Json& j)
{
    DecisionReport r;
    r.verdict = parse_verdict(at(j, "verdict"));
    r.bound = get_count(j, "bound");
    r.fast_path = parse_fast_path(at(j, "fast_path"));
    r.summary = parse_summary(at(j, "summary"));
    r.local = parse_local(at(j, "local"));
    if (!at(j, "baseline").is_null())
        r.baseline = parse_baseline(j["baseline"]);
    r.parity = get_array(j, "parity").get<std::vector<int>>();
    if (!at(j, "graph").is_null())
        r.graph = parse_graph(j["graph"]);
    r.needed_annotations = parse_needed(at(j, "needed_annotations"));
    r.inconclusive_reasons = get_strings(j, "inconclusive_reasons");
    r.notes = get_strings(j, "notes");
    return r;
}

Json algebra_json(const EtaleAlgebra& e)
{
    Json out;
    out["rank"] = e.rank();
    out["disc"] = integer_json(algebra_disc_class(e).rep());
    out["rho"] = rho_infinity(e);
    out["rho_unweighted"] = rho_infinity_unweighted(e);
    out["ramified"] = ramified_real_count(e);
    out["cm"] = e.is_cm();
    out["pairing_support"] = places_json(pairing_support(e));
    Json comps = Json::array();
    for (const auto& c : e.components()) {
        Json cj;
        cj["field"] = c.describe();
        cj["degree"] = c.degree();
        cj["min_poly"] = poly_coeffs_json(c.min_poly());
        cj["disc_class"] = integer_json(c.disc_class().rep());
        cj["det_class"] = integer_json(c.det_class().rep());
        cj["real_profile"] = {{"ramified", c.real_profile().ramified},
                              {"unramified_real", c.real_profile().unramified_real},
                              {"complex_pairs", c.real_profile().complex_pairs}};
        cj["split_at_infinity"] = component_split_at_infinity(c).is_split();
        comps.push_back(std::move(cj));
    }
    out["components"] = std::move(comps);
    return out;
}

Json oracle_json(const OracleResult& r)
{
    Json out;
    out["height"] = r.height;
    out["examined"] = r.examined;
    out["found"] = r.found();
    if (r.found()) {
        Json alpha = Json::array();
        for (const auto& p : r.alpha->parts)
            alpha.push_back(poly_coeffs_json(p));
        out["alpha"] = std::move(alpha);
        Json gram = Json::array();
        for (const auto& row : r.form->gram) {
            Json jr = Json::array();
            for (const auto& x : row)
                jr.push_back(rational_json(x));
            gram.push_back(std::move(jr));
        }
        out["gram"] = std::move(gram);
        out["diagonal"] = diagonal_json(r.form->diagonalized);
        out["invariants"] = invariants_json(r.form->invariants);
    }
    return out;
}

Json report_document(const ProblemDocument& doc, const DecisionReport& r)
{
    Json out;
    out["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
    out["input"] = render_problem(doc);
    out["report"] = report_json(r);
    return out;
}

std::string summary_line(const DecisionReport& r)
{
    std::string s = to_string(r.verdict);
    if (r.verdict == Verdict::LocallyFails && r.local.failing_condition) {
        s += ": " + to_string(*r.local.failing_condition);
        if (r.local.failing_place)
            s += " at " + r.local.failing_place->to_string();
    } else if (r.verdict == Verdict::NotRealizableUpToBound) {
        s += " (bound " + std::to_string(r.bound) + ")";
    } else if (r.verdict == Verdict::Inconclusive) {
        s += ": " + std::to_string(r.needed_annotations.size()) + " annotation(s) needed";
    }
    if (r.fast_path.kind != FastPathKind::None)
        s += " [fast path " + to_string(r.fast_path) + "]";
    return s;
}

} // namespace maxtorus
