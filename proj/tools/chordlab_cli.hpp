#pragma once

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "chordlab/chordlab.hpp"

namespace chordlab::cli {

using nlohmann::json;

inline int parse_band(const std::string& text, int& b, int& d) {
    const auto colon = text.find(':');
    if (colon == std::string::npos) return -1;
    try {
        b = std::stoi(text.substr(0, colon));
        d = std::stoi(text.substr(colon + 1));
    } catch (...) {
        return -1;
    }
    return 0;
}

inline std::set<RelatorType> parse_relator_types(const std::string& csv) {
    std::set<RelatorType> out;
    std::size_t i = 0;
    while (i <= csv.size()) {
        std::size_t j = csv.find(',', i);
        if (j == std::string::npos) j = csv.size();
        const std::string tok = csv.substr(i, j - i);
        if (tok == "I")
            out.insert(RelatorType::I);
        else if (tok == "SII")
            out.insert(RelatorType::SII);
        else if (tok == "WII")
            out.insert(RelatorType::WII);
        else if (tok == "SIII")
            out.insert(RelatorType::SIII);
        else if (tok == "WIII")
            out.insert(RelatorType::WIII);
        else if (!tok.empty())
            throw BadToken("unknown relator type '" + tok + "'");
        i = j + 1;
    }
    return out;
}

inline Selector parse_selector(const std::string& s) {
    if (s == "all") return Selector::All;
    if (s == "irr") return Selector::Irr;
    if (s == "conn") return Selector::Conn;
    throw BadToken("unknown selector '" + s + "'");
}

inline json element_to_json(const ModuleElement& e) {
    json terms = json::array();
    for (const auto& [x, c] : e.terms()) terms.push_back({{"c", c}, {"w", to_string(x.word())}});
    return terms;
}

inline json spec_to_json(const InvariantSpec& spec) {
    json types = json::array();
    for (RelatorType t : spec.types) types.push_back(to_string(t));
    json basis = json::array();
    for (const CanonicalDiagram& x : spec.basis) basis.push_back(to_string(x.word()));
    json coeffs = json::array();
    for (long long c : spec.coeffs) coeffs.push_back(c);
    return json{{"name", spec.name},
                {"band", {spec.b, spec.d}},
                {"selector", to_string(spec.selector)},
                {"types", types},
                {"basis", basis},
                {"coeffs", coeffs}};
}

inline InvariantSpec spec_from_json(const json& j) {
    InvariantSpec spec;
    spec.name = j.value("name", "");
    spec.b = j.at("band").at(0).get<int>();
    spec.d = j.at("band").at(1).get<int>();
    spec.selector = parse_selector(j.at("selector").get<std::string>());
    for (const auto& t : j.at("types")) spec.types.insert(*parse_relator_types(t.get<std::string>()).begin());
    for (const auto& w : j.at("basis"))
        spec.basis.push_back(CanonicalDiagram::of(parse_gauss_word(w.get<std::string>())));
    for (const auto& c : j.at("coeffs")) spec.coeffs.push_back(c.get<long long>());
    if (spec.basis.size() != spec.coeffs.size())
        throw Error("invariant spec: basis and coeffs lengths differ");
    return spec;
}

/// Resolves --invariant values: a built-in name or @file.json.
inline InvariantSpec load_invariant(const std::string& ref) {
    if (!ref.empty() && ref[0] == '@') {
        std::ifstream in(ref.substr(1));
        if (!in) throw Error("cannot open invariant spec file " + ref.substr(1));
        json j;
        in >> j;
        return spec_from_json(j);
    }
    return builtin(ref);
}

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"chord-diagram counting invariants of spherical curves"};
    app.require_subcommand(1);

    std::string format = "text";

    // ---- enumerate ----
    auto* cmd_enum = app.add_subcommand("enumerate", "list diagram classes with their indices");
    int enum_max = 0;
    std::string enum_selector = "all", enum_band, enum_format = "text";
    cmd_enum->add_option("--max-chords", enum_max, "enumeration depth")->required();
    cmd_enum->add_option("--selector", enum_selector, "all|irr|conn");
    cmd_enum->add_option("--band", enum_band, "restrict to band b:d");
    cmd_enum->add_option("--format", enum_format, "text|json");

    // ---- relators ----
    auto* cmd_rel = app.add_subcommand("relators", "projected relator set for a band");
    std::string rel_types, rel_band, rel_format = "text";
    cmd_rel->add_option("--types", rel_types, "comma list of I,SII,WII,SIII,WIII")->required();
    cmd_rel->add_option("--band", rel_band, "band b:d")->required();
    cmd_rel->add_option("--format", rel_format, "text|json");

    // ---- kernel ----
    auto* cmd_ker = app.add_subcommand("kernel", "constraint matrix and its integer left-kernel");
    std::string ker_band, ker_basis = "all", ker_types, ker_format = "text";
    cmd_ker->add_option("--band", ker_band, "band b:d")->required();
    cmd_ker->add_option("--basis", ker_basis, "all|irr|conn");
    cmd_ker->add_option("--types", ker_types, "relator types")->required();
    cmd_ker->add_option("--format", ker_format, "text|json");

    // ---- derive ----
    auto* cmd_der = app.add_subcommand("derive", "derive invariant functionals from the kernel");
    std::string der_band, der_basis = "all", der_types, der_out, der_format = "text";
    cmd_der->add_option("--band", der_band, "band b:d")->required();
    cmd_der->add_option("--basis", der_basis, "all|irr|conn");
    cmd_der->add_option("--types", der_types, "relator types")->required();
    cmd_der->add_option("--out", der_out, "write invariant specs to a JSON file");
    cmd_der->add_option("--format", der_format, "text|json");

    // ---- eval ----
    auto* cmd_eval = app.add_subcommand("eval", "evaluate an invariant on a word");
    std::string eval_inv, eval_word;
    int eval_cap = 8;
    std::string eval_format = "text";
    cmd_eval->add_option("--invariant", eval_inv, "lambda3|lambda4|@file.json")->required();
    cmd_eval->add_option("--word", eval_word, "Gauss word (\"-\" for the trivial curve)")->required();
    cmd_eval->add_option("--max-chords", eval_cap, "evaluation chord cap (default 8)");
    cmd_eval->add_option("--format", eval_format, "text|json");

    // ---- fuzz ----
    auto* cmd_fuzz = app.add_subcommand("fuzz", "random move walk, optionally checking an invariant");
    std::string fuzz_types, fuzz_start = "-", fuzz_check, fuzz_format = "text";
    int fuzz_steps = 100, fuzz_cap = 8;
    std::uint64_t fuzz_seed = 0;
    cmd_fuzz->add_option("--types", fuzz_types, "move types RI,SRII,WRII,SRIII,WRIII")->required();
    cmd_fuzz->add_option("--steps", fuzz_steps, "number of moves");
    cmd_fuzz->add_option("--seed", fuzz_seed, "random seed (echoed; default 0)");
    cmd_fuzz->add_option("--start", fuzz_start, "start word");
    cmd_fuzz->add_option("--max-chords", fuzz_cap, "expansion cap (default 8)");
    cmd_fuzz->add_option("--check", fuzz_check, "invariant that must stay constant");
    cmd_fuzz->add_option("--format", fuzz_format, "text|json");

    // ---- catalog ----
    auto* cmd_cat = app.add_subcommand("catalog", "curve catalog operations");
    cmd_cat->require_subcommand(1);
    auto* cmd_cat_eval = cmd_cat->add_subcommand("eval", "evaluate invariants over a catalog");
    std::string cat_file, cat_invs = "lambda3,lambda4", cat_format = "text";
    int cat_cap = 8;
    cmd_cat_eval->add_option("--file", cat_file, "TSV file: name<TAB>word, '#' comments")->required();
    cmd_cat_eval->add_option("--invariants", cat_invs, "comma list of invariant refs");
    cmd_cat_eval->add_option("--max-chords", cat_cap, "evaluation chord cap");
    cmd_cat_eval->add_option("--format", cat_format, "text|tsv|json");

    std::vector<const char*> argv;
    argv.push_back("chordlab");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (cmd_enum->parsed()) {
            const DiagramIndex idx = enumerate_diagrams(enum_max);
            int b = 1, d = enum_max;
            std::vector<IndexedDiagram> list;
            const Selector sel = parse_selector(enum_selector);
            if (!enum_band.empty()) {
                if (parse_band(enum_band, b, d) != 0) throw BadToken("bad band '" + enum_band + "'");
                list = basis_select(idx, b, d, sel);
            } else {
                for (int i = 1; i <= idx.size(); ++i)
                    if (selector_accepts(sel, idx.at(i))) list.push_back({i, idx.at(i)});
            }
            if (enum_format == "json") {
                json diagrams = json::array();
                for (const auto& e : list)
                    diagrams.push_back({{"index", e.index},
                                        {"chords", e.diagram.chords()},
                                        {"word", to_string(e.diagram.word())}});
                out << json{{"max_chords", enum_max}, {"selector", enum_selector},
                            {"diagrams", diagrams}}.dump(2)
                    << "\n";
            } else {
                for (const auto& e : list) out << e.index << "\t" << to_string(e.diagram.word()) << "\n";
            }
            return 0;
        }

        if (cmd_rel->parsed()) {
            int b = 0, d = 0;
            if (parse_band(rel_band, b, d) != 0) throw BadToken("bad band '" + rel_band + "'");
            const RelatorSet rels = relator_set(parse_relator_types(rel_types), b, d);
            if (rel_format == "json") {
                json types = json::array();
                for (RelatorType t : rels.types) types.push_back(to_string(t));
                json elements = json::array();
                for (const ModuleElement& e : rels.elements) elements.push_back(element_to_json(e));
                out << json{{"band", {b, d}}, {"types", types}, {"count", rels.elements.size()},
                            {"elements", elements}}.dump(2)
                    << "\n";
            } else {
                for (const ModuleElement& e : rels.elements) out << to_string(e) << "\n";
            }
            return 0;
        }

        auto kernel_pack = [&](const std::string& band_text, const std::string& basis_text,
                               const std::string& types_text) {
            int b = 0, d = 0;
            if (parse_band(band_text, b, d) != 0) throw BadToken("bad band '" + band_text + "'");
            const Selector sel = parse_selector(basis_text);
            const std::set<RelatorType> types = parse_relator_types(types_text);
            const DiagramIndex idx = enumerate_diagrams(d);
            const std::vector<IndexedDiagram> selected = basis_select(idx, b, d, sel);
            std::vector<CanonicalDiagram> basis;
            for (const auto& e : selected) basis.push_back(e.diagram);
            const RelatorSet rels = relator_set(types, b, d);
            const IntegerMatrix m = build_matrix(basis, rels);
            const LatticeBasis kernel = left_kernel(m);
            return std::tuple{b, d, sel, types, selected, rels, m, kernel};
        };

        if (cmd_ker->parsed()) {
            auto [b, d, sel, types, selected, rels, m, kernel] =
                kernel_pack(ker_band, ker_basis, ker_types);
            if (ker_format == "json") {
                json basis = json::array(), indices = json::array();
                for (const auto& e : selected) {
                    basis.push_back(to_string(e.diagram.word()));
                    indices.push_back(e.index);
                }
                json matrix = json::array();
                for (int i = 0; i < m.rows(); ++i) {
                    json row = json::array();
                    for (int j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).convert_to<long long>());
                    matrix.push_back(row);
                }
                json kvecs = json::array();
                for (const auto& v : kernel.vectors) {
                    json row = json::array();
                    for (const BigInt& x : v) row.push_back(x.convert_to<long long>());
                    kvecs.push_back(row);
                }
                json jtypes = json::array();
                for (RelatorType t : types) jtypes.push_back(to_string(t));
                out << json{{"band", {b, d}},       {"selector", to_string(sel)},
                            {"types", jtypes},      {"basis", basis},
                            {"indices", indices},   {"relators", rels.elements.size()},
                            {"matrix", matrix},     {"kernel", kvecs}}.dump(2)
                    << "\n";
            } else {
                out << "basis:\n";
                for (const auto& e : selected)
                    out << "  " << e.index << "\t" << to_string(e.diagram.word()) << "\n";
                out << "matrix (" << m.rows() << "x" << m.cols() << "):\n";
                for (int i = 0; i < m.rows(); ++i) {
                    out << " ";
                    for (int j = 0; j < m.cols(); ++j) out << " " << m.at(i, j);
                    out << "\n";
                }
                out << "kernel:\n";
                for (const auto& v : kernel.vectors) {
                    out << " ";
                    for (const BigInt& x : v) out << " " << x;
                    out << "\n";
                }
            }
            return 0;
        }

        if (cmd_der->parsed()) {
            int b = 0, d = 0;
            if (parse_band(der_band, b, d) != 0) throw BadToken("bad band '" + der_band + "'");
            const std::vector<InvariantSpec> specs =
                derive_invariants(b, d, parse_selector(der_basis), parse_relator_types(der_types));
            json arr = json::array();
            for (std::size_t i = 0; i < specs.size(); ++i) {
                InvariantSpec s = specs[i];
                s.name = "derived_" + std::to_string(i + 1);
                arr.push_back(spec_to_json(s));
            }
            if (!der_out.empty()) {
                std::ofstream f(der_out);
                if (!f) throw Error("cannot write " + der_out);
                f << arr.dump(2) << "\n";
                out << "wrote " << specs.size() << " invariant(s) to " << der_out << "\n";
            } else if (der_format == "json") {
                out << arr.dump(2) << "\n";
            } else {
                for (const auto& j : arr) {
                    out << j.at("name").get<std::string>() << ": coeffs [";
                    bool first = true;
                    for (const auto& c : j.at("coeffs")) {
                        if (!first) out << ", ";
                        first = false;
                        out << c.get<long long>();
                    }
                    out << "]\n";
                }
                if (specs.empty()) out << "no nonzero invariants\n";
            }
            return 0;
        }

        if (cmd_eval->parsed()) {
            const InvariantSpec spec = load_invariant(eval_inv);
            const GaussWord w = parse_gauss_word(eval_word);
            const long long v = evaluate(spec, w, eval_cap);
            if (eval_format == "json") {
                json j{{"invariant", spec.name}, {"word", to_string(w)}, {"value", v}};
                if (spec.known_divisor != 0 && v % spec.known_divisor == 0)
                    j["quotient"] = v / spec.known_divisor;
                out << j.dump(2) << "\n";
            } else {
                out << v << "\n";
                if (spec.known_divisor != 0 && v % spec.known_divisor == 0)
                    out << "(= " << spec.known_divisor << " * " << v / spec.known_divisor << ")\n";
            }
            return 0;
        }

        if (cmd_fuzz->parsed()) {
            const std::set<MoveType> types = parse_move_types(fuzz_types);
            const GaussWord start = parse_gauss_word(fuzz_start);
            std::optional<InvariantSpec> check;
            if (!fuzz_check.empty()) check = load_invariant(fuzz_check);
            const FuzzTrace trace = fuzz_walk(start, types, fuzz_steps, fuzz_seed, fuzz_cap);
            long long expected = 0;
            if (check) expected = evaluate(*check, start, std::max(fuzz_cap, 8));
            bool violated = false;
            std::ostringstream lines;
            lines << "seed " << fuzz_seed << "\n";
            lines << "0\t-\t" << to_string(start);
            if (check) lines << "\t" << expected;
            lines << "\n";
            int stepno = 1;
            for (const FuzzStep& st : trace.steps) {
                lines << stepno << "\t" << to_string(st.site.type) << ":" << to_string(st.site.dir)
                      << "\t" << to_string(st.word);
                if (check) {
                    const long long v = evaluate(*check, st.word, std::max(fuzz_cap, 8));
                    lines << "\t" << v;
                    if (v != expected) {
                        violated = true;
                        lines << "\tVIOLATION (expected " << expected << ")";
                    }
                }
                lines << "\n";
                ++stepno;
            }
            if (trace.truncated) lines << "truncated: no applicable move\n";
            if (fuzz_format == "json") {
                json steps = json::array();
                for (const FuzzStep& st : trace.steps)
                    steps.push_back({{"move", to_string(st.site.type)},
                                     {"dir", to_string(st.site.dir)},
                                     {"word", to_string(st.word)}});
                out << json{{"seed", fuzz_seed}, {"start", to_string(start)},
                            {"steps", steps},    {"truncated", trace.truncated},
                            {"violated", violated}}.dump(2)
                    << "\n";
            } else {
                out << lines.str();
            }
            return violated ? 1 : 0;
        }

        if (cmd_cat_eval->parsed()) {
            std::ifstream f(cat_file);
            if (!f) throw Error("cannot open catalog file " + cat_file);
            std::stringstream buf;
            buf << f.rdbuf();
            const std::vector<CatalogRow> rows = parse_catalog(buf.str());
            std::vector<InvariantSpec> specs;
            std::size_t i = 0;
            while (i <= cat_invs.size()) {
                std::size_t j = cat_invs.find(',', i);
                if (j == std::string::npos) j = cat_invs.size();
                if (j > i) specs.push_back(load_invariant(cat_invs.substr(i, j - i)));
                i = j + 1;
            }
            const CatalogTable table = catalog_eval(specs, rows, cat_cap);
            if (cat_format == "json") {
                json jrows = json::array();
                for (const auto& r : table.rows) {
                    json row{{"name", r.name}, {"ok", r.ok}};
                    if (r.ok)
                        row["values"] = r.values;
                    else
                        row["error"] = r.error;
                    jrows.push_back(row);
                }
                json pairs = json::array();
                if (specs.size() >= 2)
                    for (const auto& [a, b] : distinguished_pairs(table, 0, 1))
                        pairs.push_back({a, b});
                out << json{{"invariants", table.invariant_names}, {"rows", jrows},
                            {"distinguished_pairs", pairs}}.dump(2)
                    << "\n";
            } else {
                out << "name";
                for (const auto& n : table.invariant_names) out << "\t" << n;
                out << "\n";
                for (const auto& r : table.rows) {
                    out << r.name;
                    if (r.ok)
                        for (long long v : r.values) out << "\t" << v;
                    else
                        out << "\tERROR: " << r.error;
                    out << "\n";
                }
                if (specs.size() >= 2) {
                    const auto pairs = distinguished_pairs(table, 0, 1);
                    for (const auto& [a, b] : pairs)
                        out << "# " << a << " and " << b << " agree on " << table.invariant_names[0]
                            << " but differ on " << table.invariant_names[1] << "\n";
                }
            }
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const json::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace chordlab::cli
