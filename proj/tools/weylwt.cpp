#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "weylwt/blocks.hpp"
#include "weylwt/json_io.hpp"
#include "weylwt/resolution.hpp"

using namespace weylwt;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;

// Payload arguments are either a path to a JSON file or inline JSON
// (detected by a leading '{' or '[').
json load_payload(const std::string& arg) {
    std::string text = arg;
    if (!arg.empty() && arg[0] != '{' && arg[0] != '[') {
        std::ifstream in(arg);
        if (!in)
            throw std::invalid_argument("cannot open file '" + arg + "'");
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("malformed JSON: ") + e.what());
    }
}

std::string constraint_interval(Constraint c) {
    switch (c) {
        case Constraint::Free: return "(-inf,inf)";
        case Constraint::GeqZero: return "[0,inf)";
        case Constraint::LeqMinusOne: return "(-inf,-1]";
    }
    return "?";
}

int cmd_classify(const std::string& arg, bool as_json) {
    Weight p = weight_from_json(load_payload(arg));
    BlockKey key = block_key(p);
    CanonicalForm cf = canonical_form(p);
    IndexSet jp = integral_coords(p);
    if (as_json) {
        json flips = json::object();
        for (const auto& [s, sign] : key.flipped_symbols)
            flips[s] = sign;
        json out{{"block_key", weight_to_json(key.weight)},
                 {"flipped_symbols", flips},
                 {"p_plus", weight_to_json(cf.p_plus)},
                 {"J", indexset_to_json(cf.J)},
                 {"integral_coords", indexset_to_json(jp)}};
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "block key: " << key.weight.to_string() << "\n";
        std::cout << "canonical form: p_+ = " << cf.p_plus.to_string()
                  << ", J = " << cf.J.to_string() << "\n";
        std::cout << "integral coordinates J_p = " << jp.to_string() << "\n";
    }
    return kExitOk;
}

int cmd_iso(const std::string& parg, const std::string& qarg, bool as_json) {
    Weight p = weight_from_json(load_payload(parg));
    Weight q = weight_from_json(load_payload(qarg));
    bool iso = equivalent(p, q);
    if (as_json)
        std::cout << json{{"isomorphic", iso}}.dump(2) << "\n";
    else
        std::cout << (iso ? "isomorphic" : "not isomorphic") << "\n";
    return kExitOk;
}

int cmd_support(const std::string& marg, const std::string& warg, bool as_json) {
    MonomialModule m = descriptor_from_json(load_payload(marg)).build();
    Weight w = weight_from_json(load_payload(warg));
    bool in = support_contains(m, w);
    if (as_json)
        std::cout << json{{"in_support", in}}.dump(2) << "\n";
    else
        std::cout << (in ? "in support" : "not in support") << "\n";
    return kExitOk;
}

int cmd_act(const std::string& marg, const std::string& aarg, const std::string& varg,
            bool as_json) {
    MonomialModule m = descriptor_from_json(load_payload(marg)).build();
    WeylElement a = weyl_from_json(load_payload(aarg));
    WeightVector v = vector_from_json(load_payload(varg));
    for (const auto& [mono, c] : v.terms())
        if (!m.monomial_in_support(mono))
            throw std::invalid_argument("vector: monomial " + mono.to_string() +
                                        " outside the module support");
    WeightVector out = act(m, a, v);
    if (as_json)
        std::cout << vector_to_json(out).dump(2) << "\n";
    else
        std::cout << out.to_string() << "\n";
    return kExitOk;
}

int cmd_dual(const std::string& marg, bool as_json) {
    ModuleDescriptor d = descriptor_from_json(load_payload(marg));
    d.dual = !d.dual;
    MonomialModule m = d.build();
    if (as_json)
        std::cout << json{{"descriptor", descriptor_to_json(d)},
                          {"realization", module_realization_to_json(m)}}
                         .dump(2)
                  << "\n";
    else
        std::cout << m.to_string() << "\n";
    return kExitOk;
}

int cmd_localize(const std::string& marg, const std::string& jarg, bool as_json) {
    MonomialModule m = descriptor_from_json(load_payload(marg)).build();
    IndexSet J = indexset_from_string(jarg);
    MonomialModule loc = localize(m, J);
    if (as_json) {
        std::cout << module_realization_to_json(loc).dump(2) << "\n";
    } else {
        std::cout << loc.to_string() << "\n";
        std::cout << "support intervals: default "
                  << constraint_interval(loc.default_constraint());
        for (const auto& [i, c] : loc.constraint_overrides())
            std::cout << ", " << i << ": " << constraint_interval(c);
        std::cout << "\n";
    }
    return kExitOk;
}

int cmd_verify_loc(const std::string& parg, int radius, bool as_json) {
    Weight p = weight_from_json(load_payload(parg));
    LocalizationReport rep = verify_localization_realizations(p, radius);
    if (as_json) {
        json out = localization_report_to_json(rep);
        out["claim"] = "localization realizations (a) and (b)";
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << (rep.ok ? "verified" : "FAILED") << " (" << rep.probes
                  << " probes)\n";
        for (const std::string& f : rep.failures)
            std::cout << "  " << f << "\n";
    }
    return rep.ok ? kExitOk : kExitVerifyFailed;
}

int cmd_quiver(const std::string& earg, const std::string& format) {
    IndexSet E = indexset_from_string(earg);
    if (!E.is_finite())
        throw std::invalid_argument("quiver: E must be finite");
    if (format == "dot")
        std::cout << quiver_export_dot(E.elems());
    else
        std::cout << quiver_to_json(E.elems()).dump(2) << "\n";
    return kExitOk;
}

int cmd_koszul(const std::string& earg, int upto, bool as_json) {
    IndexSet E = indexset_from_string(earg);
    if (!E.is_finite())
        throw std::invalid_argument("koszul: E must be finite");
    KoszulReport rep = koszul_check(E.elems(), upto);
    if (as_json) {
        json tables = json::object();
        for (const auto& [v, t] : rep.tables) {
            json rows = json::object();
            for (const auto& [k, row] : t.entries) {
                json cells = json::array();
                for (const auto& [key, mult] : row)
                    cells.push_back(json{{"vertex", vertex_to_string(key.vertex)},
                                         {"degree", key.degree},
                                         {"mult", mult}});
                rows[std::to_string(k)] = cells;
            }
            tables[vertex_to_string(v)] = rows;
        }
        std::cout << json{{"koszul", rep.koszul},
                          {"upto", rep.upto},
                          {"violations", rep.violations},
                          {"tables", tables}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (rep.koszul ? "Koszul" : "NOT Koszul") << " up to degree "
                  << rep.upto << "\n";
        for (const std::string& v : rep.violations)
            std::cout << "  " << v << "\n";
        for (const auto& [v, t] : rep.tables) {
            std::cout << "S_" << vertex_to_string(v) << ":\n" << t.render();
        }
    }
    return rep.koszul ? kExitOk : kExitVerifyFailed;
}

int cmd_resolve(const std::string& earg, const std::string& varg, int upto,
                bool as_json) {
    IndexSet E = indexset_from_string(earg);
    IndexSet V = indexset_from_string(varg);
    if (!E.is_finite() || !V.is_finite())
        throw std::invalid_argument("resolve: E and vertex must be finite sets");
    for (Index i : V.elems())
        if (!E.contains(i))
            throw std::invalid_argument("resolve: vertex index " + std::to_string(i) +
                                        " not in E");
    BettiTable t = minimal_resolution(V.elems(), E.elems(), upto);
    if (as_json) {
        json rows = json::object();
        for (const auto& [k, row] : t.entries) {
            json cells = json::array();
            for (const auto& [key, mult] : row)
                cells.push_back(json{{"vertex", vertex_to_string(key.vertex)},
                                     {"degree", key.degree},
                                     {"mult", mult}});
            rows[std::to_string(k)] = cells;
        }
        std::cout << json{{"betti", rows}}.dump(2) << "\n";
    } else {
        std::cout << t.render();
    }
    return kExitOk;
}

int cmd_verify_block(const std::string& parg, const std::string& earg, bool as_json) {
    Weight p = weight_from_json(load_payload(parg));
    IndexSet E = indexset_from_string(earg);
    if (!E.is_finite())
        throw std::invalid_argument("verify-block: E must be finite");
    BlockReport rep = verify_block(p, E.elems());
    if (as_json) {
        std::cout << json{{"ok", rep.ok},
                          {"checks", rep.checks},
                          {"failures", rep.failures}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << (rep.ok ? "verified" : "FAILED") << " (" << rep.checks
                  << " checks)\n";
        for (const std::string& f : rep.failures)
            std::cout << "  " << f << "\n";
    }
    return rep.ok ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"weight modules over Weyl algebras: classification, "
                 "realizations, localization, blocks"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    std::string arg1, arg2, arg3;
    int radius = 3;
    int upto = 4;
    std::string format = "json";

    auto* classify = app.add_subcommand("classify", "block key and canonical form");
    classify->add_option("weight", arg1, "weight JSON (file or inline)")->required();

    auto* iso = app.add_subcommand("iso", "are L(p) and L(q) isomorphic");
    iso->add_option("p", arg1)->required();
    iso->add_option("q", arg2)->required();

    auto* support = app.add_subcommand("support", "weight membership in supp(M)");
    support->add_option("module", arg1)->required();
    support->add_option("weight", arg2)->required();

    auto* actc = app.add_subcommand("act", "apply an algebra element to a vector");
    actc->add_option("module", arg1)->required();
    actc->add_option("element", arg2)->required();
    actc->add_option("vector", arg3)->required();

    auto* dual = app.add_subcommand("dual", "dual module descriptor");
    dual->add_option("module", arg1)->required();

    auto* localizec = app.add_subcommand("localize", "localize a module at J");
    localizec->add_option("module", arg1)->required();
    localizec->add_option("J", arg2, "index set, e.g. {1,2} or ~{3} or all")->required();

    auto* verify_loc = app.add_subcommand("verify-loc", "localization realization report");
    verify_loc->add_option("p", arg1)->required();
    verify_loc->add_option("--radius", radius, "probe box radius");

    auto* quiver = app.add_subcommand("quiver", "export the block quiver of E");
    quiver->add_option("E", arg1, "finite index set, e.g. {1,2}")->required();
    quiver->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));

    auto* koszul = app.add_subcommand("koszul", "Koszulity report with Betti tables");
    koszul->add_option("E", arg1)->required();
    koszul->add_option("--upto", upto, "homological degree bound");

    auto* resolve = app.add_subcommand("resolve", "minimal resolution Betti table");
    resolve->add_option("E", arg1)->required();
    resolve->add_option("vertex", arg2)->required();
    resolve->add_option("--upto", upto);

    auto* verify_block_c = app.add_subcommand("verify-block", "block relation report");
    verify_block_c->add_option("p", arg1)->required();
    verify_block_c->add_option("E", arg2)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitBadInput;
    }

    try {
        if (classify->parsed())
            return cmd_classify(arg1, as_json);
        if (iso->parsed())
            return cmd_iso(arg1, arg2, as_json);
        if (support->parsed())
            return cmd_support(arg1, arg2, as_json);
        if (actc->parsed())
            return cmd_act(arg1, arg2, arg3, as_json);
        if (dual->parsed())
            return cmd_dual(arg1, as_json);
        if (localizec->parsed())
            return cmd_localize(arg1, arg2, as_json);
        if (verify_loc->parsed())
            return cmd_verify_loc(arg1, radius, as_json);
        if (quiver->parsed())
            return cmd_quiver(arg1, format);
        if (koszul->parsed())
            return cmd_koszul(arg1, upto, as_json);
        if (resolve->parsed())
            return cmd_resolve(arg1, arg2, upto, as_json);
        if (verify_block_c->parsed())
            return cmd_verify_block(arg1, arg2, as_json);
    } catch (const std::invalid_argument& e) {
        if (as_json)
            std::cout << json{{"error", e.what()}}.dump(2) << "\n";
        else
            std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    }
    return kExitBadInput;
}
