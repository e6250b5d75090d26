#include "weylwt/json_io.hpp"

#include <stdexcept>

namespace weylwt {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) {
    throw std::invalid_argument("invalid input at '" + field + "': " + why);
}

long long get_int(const json& j, const std::string& field) {
    if (!j.is_number_integer())
        bad(field, "expected an integer");
    return j.get<long long>();
}

Index parse_index(const std::string& key, const std::string& field) {
    try {
        size_t pos = 0;
        int v = std::stoi(key, &pos);
        if (pos != key.size())
            throw std::invalid_argument("trailing characters");
        return v;
    } catch (const std::exception&) {
        bad(field, "expected an integer index, got '" + key + "'");
    }
}

}  // namespace

json coord_to_json(const CoordValue& v) {
    if (v.is_int())
        return json{{"kind", "int"}, {"value", v.int_value()}};
    return json{{"kind", "nonint"},
                {"sign", v.sign()},
                {"symbol", v.symbol()},
                {"offset", v.offset()}};
}

CoordValue coord_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        bad("coord.kind", "expected an object with a 'kind' field");
    std::string kind = j["kind"].get<std::string>();
    if (kind == "int") {
        if (!j.contains("value"))
            bad("coord.value", "missing");
        return CoordValue::integer(get_int(j["value"], "coord.value"));
    }
    if (kind == "nonint") {
        if (!j.contains("sign") || !j.contains("symbol"))
            bad("coord", "nonint coordinate needs 'sign' and 'symbol'");
        int sign = int(get_int(j["sign"], "coord.sign"));
        if (sign != 1 && sign != -1)
            bad("coord.sign", "must be 1 or -1");
        long long off = j.contains("offset") ? get_int(j["offset"], "coord.offset") : 0;
        return CoordValue::nonint(sign, j["symbol"].get<std::string>(), off);
    }
    bad("coord.kind", "must be 'int' or 'nonint'");
}

json weight_to_json(const Weight& w) {
    json overrides = json::object();
    for (const auto& [i, v] : w.overrides())
        overrides[std::to_string(i)] = coord_to_json(v);
    return json{{"default", coord_to_json(w.default_value())}, {"overrides", overrides}};
}

Weight weight_from_json(const json& j) {
    if (!j.is_object() || !j.contains("default"))
        bad("weight.default", "expected an object with a 'default' field");
    Weight w(coord_from_json(j["default"]));
    if (j.contains("overrides")) {
        if (!j["overrides"].is_object())
            bad("weight.overrides", "expected an object");
        for (const auto& [key, val] : j["overrides"].items())
            w.set(parse_index(key, "weight.overrides"), coord_from_json(val));
    }
    return w;
}

json shift_to_json(const Shift& s) {
    json out = json::object();
    for (const auto& [i, v] : s.entries())
        out[std::to_string(i)] = v;
    return out;
}

Shift shift_from_json(const json& j) {
    if (!j.is_object())
        bad("shift", "expected an object of index -> integer");
    Shift s;
    for (const auto& [key, val] : j.items())
        s.set(parse_index(key, "shift"), get_int(val, "shift." + key));
    return s;
}

namespace {

template <typename Var, typename KeyFromVar>
json poly_to_json(const Poly<Var>& p, KeyFromVar&& key_of) {
    json terms = json::array();
    for (const auto& [m, c] : p.terms()) {
        json exps = json::object();
        for (const auto& [v, e] : m)
            exps[key_of(v)] = e;
        terms.push_back(json{{"coeff", rational_to_string(c)}, {"exps", exps}});
    }
    return json{{"terms", terms}};
}

template <typename Var, typename VarFromKey>
Poly<Var> poly_from_json(const json& j, const std::string& field, VarFromKey&& var_of) {
    if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
        bad(field + ".terms", "expected {\"terms\": [...]}");
    Poly<Var> p;
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("coeff"))
            bad(field + ".terms[].coeff", "missing");
        Rational c;
        try {
            c = rational_from_string(t["coeff"].get<std::string>());
        } catch (const std::exception& e) {
            bad(field + ".terms[].coeff", e.what());
        }
        typename Poly<Var>::Monomial m;
        if (t.contains("exps")) {
            if (!t["exps"].is_object())
                bad(field + ".terms[].exps", "expected an object");
            for (const auto& [key, val] : t["exps"].items())
                m[var_of(key)] = int(get_int(val, field + ".terms[].exps." + key));
        }
        p += Poly<Var>::term(m, c);
    }
    return p;
}

}  // namespace

json scalar_to_json(const Scalar& a) {
    return poly_to_json<Symbol>(a, [](const Symbol& s) { return s; });
}

Scalar scalar_from_json(const json& j) {
    return poly_from_json<Symbol>(j, "scalar", [](const std::string& k) { return k; });
}

json a0poly_to_json(const A0Poly& q) {
    return poly_to_json<Index>(q, [](Index i) { return std::to_string(i); });
}

A0Poly a0poly_from_json(const json& j) {
    return poly_from_json<Index>(j, "a0poly", [](const std::string& k) {
        return parse_index(k, "a0poly.exps");
    });
}

json weyl_to_json(const WeylElement& a) {
    json out = json::array();
    for (const auto& [v, q] : a.terms())
        out.push_back(json{{"shift", shift_to_json(v)}, {"a0poly", a0poly_to_json(q)}});
    return out;
}

WeylElement weyl_from_json(const json& j) {
    if (!j.is_array())
        bad("element", "expected a list of {shift, a0poly} records");
    WeylElement a;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("shift") || !t.contains("a0poly"))
            bad("element[]", "expected {shift, a0poly}");
        a.add_term(shift_from_json(t["shift"]), a0poly_from_json(t["a0poly"]));
    }
    return a;
}

json indexset_to_json(const IndexSet& s) {
    if (s.is_finite()) {
        json arr = json::array();
        for (Index i : s.elems())
            arr.push_back(i);
        return arr;
    }
    json excl = json::array();
    for (Index i : s.elems())
        excl.push_back(i);
    return json{{"cofinite", true}, {"excluded", excl}};
}

IndexSet indexset_from_json(const json& j) {
    if (j.is_array()) {
        std::set<Index> xs;
        for (const auto& v : j)
            xs.insert(int(get_int(v, "indexset[]")));
        return IndexSet::finite(std::move(xs));
    }
    if (j.is_object() && j.value("cofinite", false)) {
        std::set<Index> xs;
        if (j.contains("excluded"))
            for (const auto& v : j["excluded"])
                xs.insert(int(get_int(v, "indexset.excluded[]")));
        return IndexSet::cofinite(std::move(xs));
    }
    bad("indexset", "expected an array or {\"cofinite\":true,...}");
}

IndexSet indexset_from_string(const std::string& s) {
    if (s == "all")
        return IndexSet::all();
    std::string body = s;
    bool cofinite = false;
    if (!body.empty() && body[0] == '~') {
        cofinite = true;
        body = body.substr(1);
    }
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        bad("indexset", "expected {i,j,...}, ~{...} or 'all', got '" + s + "'");
    std::set<Index> xs;
    std::string inner = body.substr(1, body.size() - 2);
    size_t pos = 0;
    while (pos < inner.size()) {
        size_t comma = inner.find(',', pos);
        std::string tok = inner.substr(pos, comma == std::string::npos ? comma : comma - pos);
        if (!tok.empty())
            xs.insert(parse_index(tok, "indexset"));
        if (comma == std::string::npos)
            break;
        pos = comma + 1;
    }
    return cofinite ? IndexSet::cofinite(std::move(xs)) : IndexSet::finite(std::move(xs));
}

json vector_to_json(const WeightVector& v) {
    json out = json::array();
    for (const auto& [m, c] : v.terms())
        out.push_back(json{{"weight", weight_to_json(m)}, {"scalar", scalar_to_json(c)}});
    return out;
}

WeightVector vector_from_json(const json& j) {
    if (!j.is_array())
        bad("vector", "expected a list of {weight, scalar}");
    WeightVector v;
    for (const auto& t : j) {
        if (!t.is_object() || !t.contains("weight") || !t.contains("scalar"))
            bad("vector[]", "expected {weight, scalar}");
        v.add_term(weight_from_json(t["weight"]), scalar_from_json(t["scalar"]));
    }
    return v;
}

MonomialModule ModuleDescriptor::build() const {
    MonomialModule m = [&] {
        if (label == "B")
            return realize_B(base);
        if (label == "N")
            return realize_N(base);
        if (label == "Nprime")
            return realize_NPrime(base);
        if (label == "L")
            return realize_L(base);
        bad("module.label", "must be one of B, N, Nprime, L");
    }();
    if (!twist.empty())
        m = theta_twist(m, twist);
    if (dual)
        m = dual_module(m);
    if (localize_at)
        m = localize(m, *localize_at);
    return m;
}

json descriptor_to_json(const ModuleDescriptor& d) {
    json out{{"label", d.label}, {"base", weight_to_json(d.base)}};
    if (!d.twist.empty()) {
        json arr = json::array();
        for (Index i : d.twist)
            arr.push_back(i);
        out["twist"] = arr;
    }
    if (d.dual)
        out["dual"] = true;
    if (d.localize_at)
        out["localize"] = indexset_to_json(*d.localize_at);
    return out;
}

ModuleDescriptor descriptor_from_json(const json& j) {
    if (!j.is_object() || !j.contains("label") || !j.contains("base"))
        bad("module", "expected {label, base, ...}");
    ModuleDescriptor d;
    d.label = j["label"].get<std::string>();
    d.base = weight_from_json(j["base"]);
    if (j.contains("twist")) {
        if (!j["twist"].is_array())
            bad("module.twist", "expected an array of indices (finite twist sets only)");
        for (const auto& v : j["twist"])
            d.twist.insert(int(get_int(v, "module.twist[]")));
    }
    if (j.contains("dual"))
        d.dual = j["dual"].get<bool>();
    if (j.contains("localize"))
        d.localize_at = indexset_from_json(j["localize"]);
    return d;
}

namespace {

const char* mode_str(CoordMode m) {
    switch (m) {
        case CoordMode::Plain: return "plain";
        case CoordMode::DualPlain: return "dual-plain";
        case CoordMode::Twisted: return "twisted";
        case CoordMode::DualTwisted: return "dual-twisted";
    }
    return "?";
}

const char* constraint_str(Constraint c) {
    switch (c) {
        case Constraint::Free: return "free";
        case Constraint::GeqZero: return "geq0";
        case Constraint::LeqMinusOne: return "leq-1";
    }
    return "?";
}

}  // namespace

json module_realization_to_json(const MonomialModule& m) {
    json modes{{"default", mode_str(m.default_mode())}};
    for (const auto& [i, md] : m.mode_overrides())
        modes[std::to_string(i)] = mode_str(md);
    json constraints{{"default", constraint_str(m.default_constraint())}};
    for (const auto& [i, c] : m.constraint_overrides())
        constraints[std::to_string(i)] = constraint_str(c);
    return json{{"label", m.label().to_string()},
                {"base", weight_to_json(m.base())},
                {"modes", modes},
                {"support", constraints}};
}

json quiver_to_json(const std::set<Index>& E) {
    json vertices = json::array();
    for (const Vertex& v : all_subsets(E))
        vertices.push_back(vertex_to_string(v));
    json arrows = json::array();
    for (const Vertex& v : all_subsets(E))
        for (Index i : E)
            arrows.push_back(json{{"from", vertex_to_string(v)},
                                  {"to", vertex_to_string(vertex_toggle(v, i))},
                                  {"coord", i}});
    json relations = json::array();
    for (const Vertex& v : all_subsets(E)) {
        for (Index i : E)
            relations.push_back(json{{"type", "square-zero"},
                                     {"at", vertex_to_string(v)},
                                     {"coord", i}});
        for (Index i : E)
            for (Index j : E)
                if (i < j)
                    relations.push_back(json{{"type", "commute"},
                                             {"at", vertex_to_string(v)},
                                             {"coords", {i, j}}});
    }
    return json{{"vertices", vertices}, {"arrows", arrows}, {"relations", relations}};
}

json localization_report_to_json(const LocalizationReport& rep) {
    return json{{"ok", rep.ok}, {"probes", rep.probes}, {"failures", rep.failures}};
}

}  // namespace weylwt
