#include "maxtorus/problem.hpp"
#include "maxtorus/error.hpp"

#include <regex>
#include <set>

namespace maxtorus {

namespace {

[[noreturn]] void fail(const std::string& pointer, const std::string& message)
{
    throw InputError("at " + (pointer.empty() ? std::string("/") : pointer) + ": " + message);
}

void require_keys(const Json& obj, const std::string& pointer, const std::set<std::string>& allowed)
{
    if (!obj.is_object())
        fail(pointer, "expected an object");
    for (const auto& [key, value] : obj.items())
        if (!allowed.count(key))
            fail(pointer + "/" + key, "unknown key");
}

const Json& member(const Json& obj, const std::string& pointer, const std::string& key)
{
    auto it = obj.find(key);
    if (it == obj.end())
        fail(pointer + "/" + key, "missing key");
    return *it;
}

Integer parse_integer(const Json& value, const std::string& pointer)
{
    if (value.is_number_integer())
        return value.is_number_unsigned() ? Integer(std::to_string(value.get<std::uint64_t>()))
                                          : Integer(std::to_string(value.get<std::int64_t>()));
    if (value.is_string()) {
        static const std::regex re("-?[0-9]+");
        const std::string s = value.get<std::string>();
        if (std::regex_match(s, re))
            return Integer(s);
    }
    fail(pointer, "expected an integer");
}

std::uint64_t parse_count(const Json& value, const std::string& pointer, std::uint64_t minimum)
{
    const Integer n = parse_integer(value, pointer);
    if (n < minimum || !n.fits_ulong_p())
        fail(pointer, "expected an integer >= " + std::to_string(minimum));
    return n.get_ui();
}

std::vector<Rational> parse_rational_list(const Json& value, const std::string& pointer)
{
    if (!value.is_array())
        fail(pointer, "expected an array");
    std::vector<Rational> out;
    for (std::size_t k = 0; k < value.size(); ++k)
        out.push_back(parse_rational(value[k], pointer + "/" + std::to_string(k)));
    return out;
}

PolyQ parse_poly(const Json& value, const std::string& pointer)
{
    std::vector<Rational> c = parse_rational_list(value, pointer);
    if (c.empty())
        fail(pointer, "expected a nonempty coefficient list");
    return PolyQ(std::move(c));
}

ComponentSpec parse_component(const Json& value, const std::string& pointer)
{
    if (!value.is_object())
        fail(pointer, "expected an object");
    const Json& type = member(value, pointer, "type");
    if (type == "quad") {
        require_keys(value, pointer, {"type", "d"});
        return QuadSpec{parse_integer(member(value, pointer, "d"), pointer + "/d")};
    }
    if (type == "general") {
        require_keys(value, pointer, {"type", "f", "theta"});
        return GeneralSpec{parse_poly(member(value, pointer, "f"), pointer + "/f"),
                           parse_poly(member(value, pointer, "theta"), pointer + "/theta")};
    }
    fail(pointer + "/type", "expected \"quad\" or \"general\"");
}

Json poly_json(const PolyQ& p)
{
    Json out = Json::array();
    for (const auto& c : p.coeffs())
        out.push_back(rational_json(c));
    if (p.is_zero())
        out.push_back(0);
    return out;
}

} // namespace

Rational parse_rational(const Json& value, const std::string& pointer)
{
    if (value.is_number_integer())
        return Rational(parse_integer(value, pointer));
    if (value.is_string()) {
        static const std::regex re("(-?[0-9]+)(/([0-9]+))?");
        std::smatch m;
        const std::string s = value.get<std::string>();
        if (std::regex_match(s, m, re)) {
            const Integer num(m[1].str());
            const Integer den(m[3].matched ? m[3].str() : std::string("1"));
            if (den == 0)
                fail(pointer, "zero denominator");
            Rational x(num, den);
            x.canonicalize();
            return x;
        }
    }
    fail(pointer, "expected a rational: an integer or a string \"p/q\"");
}

Json integer_json(const Integer& n)
{
    if (n.fits_slong_p())
        return n.get_si();
    return n.get_str();
}

Json rational_json(const Rational& input)
{
    Rational x = input;
    x.canonicalize();
    if (x.get_den() == 1)
        return integer_json(x.get_num());
    return to_string(x);
}

Json parse_json_text(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError("parse error at byte " + std::to_string(e.byte) + ": " + e.what());
    }
}

ProblemDocument parse_problem(const Json& doc)
{
    require_keys(doc, "", {"algebra", "form", "options"});
    ProblemDocument p;

    const Json& algebra = member(doc, "", "algebra");
    if (!algebra.is_array() || algebra.empty())
        fail("/algebra", "expected a nonempty array of components");
    for (std::size_t i = 0; i < algebra.size(); ++i)
        p.algebra.push_back(parse_component(algebra[i], "/algebra/" + std::to_string(i)));

    const Json& form = member(doc, "", "form");
    require_keys(form, "/form", {"diagonal", "gram"});
    const bool has_diag = form.contains("diagonal"), has_gram = form.contains("gram");
    if (has_diag == has_gram)
        fail("/form", "exactly one of \"diagonal\" and \"gram\" is required");
    if (has_diag) {
        p.diagonal = parse_rational_list(form["diagonal"], "/form/diagonal");
    } else {
        const Json& g = form["gram"];
        if (!g.is_array())
            fail("/form/gram", "expected an array of rows");
        RationalMatrix m;
        for (std::size_t r = 0; r < g.size(); ++r)
            m.push_back(parse_rational_list(g[r], "/form/gram/" + std::to_string(r)));
        p.gram = std::move(m);
    }

    if (doc.contains("options")) {
        const Json& opt = doc["options"];
        require_keys(opt, "/options", {"prime_bound", "oracle_height", "annotations"});
        if (opt.contains("prime_bound"))
            p.prime_bound = parse_count(opt["prime_bound"], "/options/prime_bound", 2);
        if (opt.contains("oracle_height")) {
            const std::uint64_t h = parse_count(opt["oracle_height"], "/options/oracle_height", 0);
            if (h > 1000)
                fail("/options/oracle_height", "height above 1000");
            p.oracle_height = static_cast<unsigned>(h);
        }
        if (opt.contains("annotations")) {
            const Json& anns = opt["annotations"];
            if (!anns.is_array())
                fail("/options/annotations", "expected an array");
            for (std::size_t k = 0; k < anns.size(); ++k) {
                const std::string ptr = "/options/annotations/" + std::to_string(k);
                require_keys(anns[k], ptr, {"component", "prime", "status"});
                const std::uint64_t comp = parse_count(member(anns[k], ptr, "component"), ptr + "/component", 0);
                if (comp >= p.algebra.size())
                    fail(ptr + "/component", "no such component");
                const Integer prime = parse_integer(member(anns[k], ptr, "prime"), ptr + "/prime");
                if (prime < 2 || !is_probable_prime(prime))
                    fail(ptr + "/prime", "expected a prime");
                const Json& status = member(anns[k], ptr, "status");
                SplitKind kind;
                if (status == "split")
                    kind = SplitKind::Split;
                else if (status == "nonsplit")
                    kind = SplitKind::NonSplit;
                else
                    fail(ptr + "/status", "expected \"split\" or \"nonsplit\"");
                if (auto prev = p.annotations.find(comp, prime); prev && *prev != kind)
                    fail(ptr, "conflicting annotation");
                p.annotations.add(comp, prime, kind);
            }
        }
    }
    return p;
}

Problem build_problem(const ProblemDocument& doc)
{
    std::vector<Component> comps;
    for (std::size_t i = 0; i < doc.algebra.size(); ++i) {
        const std::string ptr = "/algebra/" + std::to_string(i);
        try {
            comps.push_back(validate_component(doc.algebra[i]));
        } catch (const InputError& e) {
            fail(ptr, e.what());
        } catch (const std::domain_error& e) {
            fail(ptr, e.what());
        }
    }
    EtaleAlgebra algebra(std::move(comps));

    std::optional<QuadraticSpace> form;
    try {
        form = doc.diagonal ? QuadraticSpace(*doc.diagonal) : diagonalize_gram(*doc.gram);
    } catch (const InputError& e) {
        fail(doc.diagonal ? "/form/diagonal" : "/form/gram", e.what());
    }
    try {
        require_matching_rank(algebra, *form);
    } catch (const InputError& e) {
        fail("/form", e.what());
    }
    return Problem{std::move(algebra), std::move(*form), doc.annotations, doc.prime_bound, doc.oracle_height};
}

Json render_problem(const ProblemDocument& doc)
{
    Json out;
    Json algebra = Json::array();
    for (const auto& spec : doc.algebra) {
        Json c;
        if (const auto* q = std::get_if<QuadSpec>(&spec)) {
            c["type"] = "quad";
            c["d"] = integer_json(q->d);
        } else {
            const auto& g = std::get<GeneralSpec>(spec);
            c["type"] = "general";
            c["f"] = poly_json(g.f);
            c["theta"] = poly_json(g.theta);
        }
        algebra.push_back(std::move(c));
    }
    out["algebra"] = std::move(algebra);

    Json form;
    if (doc.diagonal) {
        Json d = Json::array();
        for (const auto& x : *doc.diagonal)
            d.push_back(rational_json(x));
        form["diagonal"] = std::move(d);
    } else {
        Json g = Json::array();
        for (const auto& row : *doc.gram) {
            Json r = Json::array();
            for (const auto& x : row)
                r.push_back(rational_json(x));
            g.push_back(std::move(r));
        }
        form["gram"] = std::move(g);
    }
    out["form"] = std::move(form);

    Json opt;
    opt["prime_bound"] = doc.prime_bound;
    opt["oracle_height"] = doc.oracle_height;
    Json anns = Json::array();
    for (const auto& a : doc.annotations.entries())
        anns.push_back({{"component", a.component}, {"prime", integer_json(a.prime)}, {"status", to_string(a.kind)}});
    opt["annotations"] = std::move(anns);
    out["options"] = std::move(opt);
    return out;
}

} // namespace maxtorus
