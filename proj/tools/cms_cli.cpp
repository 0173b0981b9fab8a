// Command-line front end. Every subcommand prints JSON (default) or a short
// table; errors go to stderr as {"error": {"code", "message"}}.
// Exit status: 0 success, 1 failed check or engine error, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "cms/cms.hpp"

namespace {

using cms::io::json;

struct RunConfig {
    cms::DeformedParams params;
    int pmax = 0;  // 0: 2(n+m)
    std::uint64_t seed = 20240601;
    std::string output = "json";
};

struct Flags {
    std::optional<int> n, m, pmax;
    std::optional<std::string> k, output, params_file, config_file;
    std::optional<std::uint64_t> seed;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cms::InvalidArgument("cannot read '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Inline JSON when the argument looks like JSON, otherwise a file name.
json load_json(const std::string& arg) {
    const auto first = arg.find_first_not_of(" \t\n");
    const std::string text = first != std::string::npos && (arg[first] == '[' || arg[first] == '{' || arg[first] == '-' ||
                                                            std::isdigit(static_cast<unsigned char>(arg[first])))
                                 ? arg
                                 : read_file(arg);
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw cms::InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

// Flat "key = value" lines; '#' starts a comment.
std::map<std::string, std::string> read_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::istringstream in(read_file(path));
    std::string line;
    int no = 0;
    while (std::getline(in, line)) {
        ++no;
        if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
        auto trim = [](std::string s) {
            const auto a = s.find_first_not_of(" \t\r");
            if (a == std::string::npos) return std::string();
            return s.substr(a, s.find_last_not_of(" \t\r") - a + 1);
        };
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw cms::InvalidArgument(path + ":" + std::to_string(no) + ": expected key = value");
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

int to_int(const std::string& s, const std::string& what) {
    try {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used == s.size()) return v;
    } catch (const std::exception&) {
    }
    throw cms::InvalidArgument(what + " must be an integer, got '" + s + "'");
}

// Flags override the config file, which overrides the defaults.
RunConfig resolve(const Flags& f) {
    RunConfig c;
    if (f.config_file) {
        for (const auto& [key, value] : read_config(*f.config_file)) {
            if (key == "n") c.params.n = to_int(value, "n");
            else if (key == "m") c.params.m = to_int(value, "m");
            else if (key == "k") c.params.k = cms::parse_rational(value);
            else if (key == "pmax") c.pmax = to_int(value, "pmax");
            else if (key == "seed") c.seed = std::stoull(value);
            else if (key == "output") c.output = value;
            else throw cms::InvalidArgument("unknown config key '" + key + "'");
        }
    }
    if (f.params_file) {
        const json p = load_json(*f.params_file);
        const auto q = cms::io::params_from_json(p);
        if (p.contains("n")) c.params.n = q.n;
        if (p.contains("m")) c.params.m = q.m;
        if (p.contains("k")) c.params.k = q.k;
    }
    if (f.n) c.params.n = *f.n;
    if (f.m) c.params.m = *f.m;
    if (f.k) c.params.k = cms::parse_rational(*f.k);
    if (f.pmax) c.pmax = *f.pmax;
    if (f.seed) c.seed = *f.seed;
    if (f.output) c.output = *f.output;
    c.params.validate();
    if (c.pmax == 0) c.pmax = 2 * c.params.vars();
    if (c.pmax < 2) throw cms::InvalidArgument("pmax must be >= 2");
    if (c.output != "json" && c.output != "table") throw cms::InvalidArgument("output must be json or table");
    return c;
}

void emit(const RunConfig& c, const json& j, const std::string& table) {
    if (c.output == "json") std::cout << j.dump(2) << "\n";
    else std::cout << table;
}

std::vector<cms::Exponent> exponents_from_json(const json& j, const cms::DeformedParams& p) {
    std::vector<cms::Exponent> out;
    if (j.is_object()) {
        for (const auto& e : cms::io::poly_from_json(j).exponents()) out.push_back(e);
    } else {
        for (const auto& e : j) out.push_back(cms::io::exponent_from_json(e));
    }
    for (const auto& e : out)
        if (e.size() != p.vars()) throw cms::InvalidArgument("seed exponent " + e.to_string() + " has wrong length");
    if (out.empty()) throw cms::InvalidArgument("empty support seed");
    return out;
}

std::vector<int> int_list(const std::string& s) {
    std::vector<int> v;
    if (s.empty()) return v;
    const json j = load_json(s.front() == '[' ? s : "[" + s + "]");
    for (const auto& x : j) v.push_back(x.get<int>());
    return v;
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t t = 0; t < v.size(); ++t) s += (t ? "," : "") + std::to_string(v[t]);
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact deformed CMS integrals, quasi-invariants and weight combinatorics"};
    app.require_subcommand(1);
    app.fallthrough();
    Flags flags;
    app.add_option("--n", flags.n, "number of x variables");
    app.add_option("--m", flags.m, "number of y variables");
    app.add_option("--k", flags.k, "deformation parameter p/q (default -1/2)");
    app.add_option("--params", flags.params_file, "params JSON {n, m, k} (file or inline)");
    app.add_option("--config", flags.config_file, "flat key = value config file");
    app.add_option("--pmax", flags.pmax, "largest integral order (default 2(n+m))");
    app.add_option("--output", flags.output, "json or table");
    app.add_option("--seed,--rng-seed", flags.seed, "64-bit sampling seed (subspace/decompose take --seed as the support seed)");

    int order = 0;
    std::string input, mode = "strict";
    std::optional<int> partial;
    auto* apply = app.add_subcommand("apply", "apply L_p (or d_i^(p) with --partial) to a polynomial");
    apply->add_option("--p", order, "order")->required();
    apply->add_option("--input", input, "LaurentPoly JSON")->required();
    apply->add_option("--mode", mode, "strict or localized")->check(CLI::IsMember({"strict", "localized"}));
    apply->add_option("--partial", partial, "variable index (0-based) for d_i^(p)");

    std::string eval_at;
    bool check_image = false;
    auto* hc = app.add_subcommand("hc", "Harish-Chandra image of L_p");
    hc->add_option("--p", order, "order")->required();
    hc->add_option("--eval", eval_at, "evaluate at a weight (JSON list)");
    hc->add_flag("--check", check_image, "test the image conditions");

    std::string seed_arg;
    auto* subspace = app.add_subcommand("subspace", "basis of the quasi-invariants supported in the hull of a seed");
    subspace->add_option("--seed", seed_arg, "exponent list or LaurentPoly JSON")->required();

    std::optional<long> degree;
    auto* decomp = app.add_subcommand("decompose", "joint generalised eigenspaces on the subspace of a seed");
    decomp->add_option("--seed", seed_arg, "exponent list or LaurentPoly JSON")->required();
    decomp->add_option("--degree", degree, "restrict to one degree");

    std::string weight;
    auto* cls = app.add_subcommand("class", "central-character class of an admissible weight");
    cls->add_option("--weight", weight, "dominant admissible weight, length n+2m")->required();
    std::optional<int> radius;
    cls->add_option("--search", radius, "also run the brute-force search with this radius");
    auto* typ = app.add_subcommand("typical", "spherical typicality of an admissible weight");
    typ->add_option("--weight", weight, "dominant admissible weight, length n+2m")->required();
    auto* kac = app.add_subcommand("kacflag", "Kac flag quotients of a spherically typical weight");
    kac->add_option("--weight", weight, "dominant admissible weight, length n+2m")->required();

    std::string a_seq, b_seq;
    auto* odd = app.add_subcommand("oddreflect", "odd reflection F(A, B)");
    odd->add_option("--a", a_seq, "comma-separated A")->required();
    odd->add_option("--b", b_seq, "comma-separated B")->required();

    std::optional<int> table_range;
    bool demo = false;
    std::string window = "0..0";
    auto* g12 = app.add_subcommand("gl12", "the (1,1) example: action table and spectral demo");
    g12->add_option("--check-table", table_range, "check the action table on |i|,|j| <= R");
    g12->add_flag("--demo", demo, "run decompose on degree slices");
    g12->add_option("--window", window, "degree window a..b");

    std::string suite_name = "all";
    std::optional<int> criterion;
    auto* verify = app.add_subcommand("verify", "run acceptance criteria");
    verify->add_option("--suite", suite_name, "all, gl12, operators, spectral, weights");
    verify->add_option("--criterion", criterion, "a single criterion 1..10");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const RunConfig cfg = resolve(flags);
        const cms::DeformedParams& P = cfg.params;
        const cms::SuperShape sh{P.n, P.m};

        if (*apply) {
            const auto f = cms::io::poly_from_json(load_json(input));
            if (f.shape() != P.shape()) throw cms::InvalidArgument("input shape does not match --n/--m");
            json out;
            std::string text;
            if (mode == "strict") {
                const auto g = partial ? cms::apply_partial(*partial, order, f, P) : cms::apply_integral(order, f, P);
                out = cms::io::poly_to_json(g);
                text = g.to_string() + "\n";
            } else {
                const auto g = partial ? cms::apply_partial_localized(*partial, order, f, P)
                                       : cms::apply_integral_localized(order, f, P);
                out = cms::io::localized_to_json(g);
                text = g.to_string() + "\n";
            }
            emit(cfg, out, text);
            return 0;
        }
        if (*hc) {
            const auto img = cms::hc_integral(order, P);
            if (!eval_at.empty()) {
                const auto lam = cms::io::exponent_from_json(load_json(eval_at));
                const auto v = cms::chi_eval(lam, order, P);
                emit(cfg, cms::io::rational_to_json(v), cms::to_display(v) + "\n");
                return 0;
            }
            if (check_image) {
                const auto rep = cms::check_image_membership(img, P, 20, cfg.seed);
                json out = {{"pass", rep.ok}, {"samples", rep.samples_checked}};
                if (rep.symmetry_witness) out["symmetry_witness"] = {rep.symmetry_witness->first, rep.symmetry_witness->second};
                if (rep.hyperplane_witness) out["hyperplane_witness"] = {rep.hyperplane_witness->first, rep.hyperplane_witness->second};
                emit(cfg, out, std::string(rep.ok ? "pass" : "fail") + "\n");
                return rep.ok ? 0 : 1;
            }
            emit(cfg, cms::io::hc_to_json(img), img.to_string() + "\n");
            return 0;
        }
        if (*subspace) {
            const auto basis = cms::invariant_subspace_basis(exponents_from_json(load_json(seed_arg), P), P);
            std::string text = "dim " + std::to_string(basis.dim()) + ", support " + std::to_string(basis.support.size()) + " points\n";
            for (const auto& g : basis.elements) text += "  " + g.to_string() + "\n";
            emit(cfg, cms::io::basis_to_json(basis), text);
            return 0;
        }
        if (*decomp) {
            const auto basis = cms::invariant_subspace_basis(exponents_from_json(load_json(seed_arg), P), P);
            cms::DecomposeOptions opt;
            opt.pmax = cfg.pmax;
            opt.degree = degree;
            const auto blocks = cms::decompose(basis, opt);
            std::string text;
            for (const auto& b : blocks) {
                text += "dim " + std::to_string(b.dim()) + " reps";
                for (const auto& r : b.reps) text += " " + r.to_string();
                text += " nilpotency";
                for (int v : b.nilpotency) text += " " + std::to_string(v);
                text += "\n";
            }
            emit(cfg, cms::io::blocks_to_json(blocks), text);
            return 0;
        }
        if (*cls) {
            const auto w = cms::io::weight_from_json(load_json(weight));
            const auto pair = cms::to_ab(w, sh);
            const auto members = cms::class_of(pair, sh);
            json list = json::array();
            std::string text;
            for (const auto& q : members) {
                const auto mw = cms::from_ab(q, sh);
                list.push_back({{"weight", mw}, {"A", q.A}, {"B", q.B}});
                text += cms::weight_to_string(mw) + "  " + q.to_string() + "\n";
            }
            json out = {{"size", members.size()}, {"members", list}, {"s", cms::atypicality_degree(members.front())}};
            if (radius) {
                const auto found = cms::class_by_search(w, sh, *radius);
                out["search"] = found;
                text += "search(radius " + std::to_string(*radius) + "): " + std::to_string(found.size()) + " members\n";
            }
            emit(cfg, out, text);
            return 0;
        }
        if (*typ) {
            const auto w = cms::io::weight_from_json(load_json(weight));
            const auto pair = cms::to_ab(w, sh);
            const bool t = cms::is_spherically_typical(w, sh);
            json out = {{"typical", t},
                        {"product", cms::io::rational_to_json(cms::spherical_typicality_product(w, sh))},
                        {"invariant_product", cms::io::rational_to_json(cms::invariant_typicality_product(w, sh))},
                        {"A", pair.A},
                        {"B", pair.B}};
            emit(cfg, out, std::string(t ? "true" : "false") + "\n");
            return 0;
        }
        if (*kac) {
            const auto w = cms::io::weight_from_json(load_json(weight));
            const auto flag = cms::kac_flag(w, sh);
            std::string text;
            for (const auto& q : flag) text += cms::weight_to_string(q) + "\n";
            emit(cfg, json(flag), text);
            return 0;
        }
        if (*odd) {
            const auto [bt, at] = cms::odd_reflection_F(int_list(a_seq), int_list(b_seq));
            emit(cfg, json{{"B", bt}, {"A", at}}, "(" + join_ints(bt) + "), (" + join_ints(at) + ")\n");
            return 0;
        }
        if (*g12) {
            if (!table_range && !demo) throw cms::InvalidArgument("gl12 needs --check-table R or --demo");
            json out = json::object();
            std::string text;
            bool ok = true;
            if (table_range) {
                const auto rep = cms::gl12::verify_jordan_table(*table_range);
                json fails = json::array();
                for (const auto& f : rep.failures)
                    fails.push_back({{"relation", f.relation}, {"i", f.i}, {"j", f.j}, {"expected", f.expected}, {"actual", f.actual}});
                out["table"] = {{"pass", rep.ok}, {"checked", rep.checked}, {"failures", fails}};
                text += "table R=" + std::to_string(*table_range) + ": " + std::to_string(rep.checked) + " relations, " +
                        std::to_string(rep.failures.size()) + " failed\n";
                for (const auto& f : rep.failures)
                    text += "  FAIL " + f.relation + " at i=" + std::to_string(f.i) + ", j=" + std::to_string(f.j) + "\n";
                ok = ok && rep.ok;
            }
            if (demo) {
                const auto dots = window.find("..");
                const long lo = dots == std::string::npos ? to_int(window, "window") : to_int(window.substr(0, dots), "window");
                const long hi = dots == std::string::npos ? lo : to_int(window.substr(dots + 2), "window");
                const auto rep = cms::gl12::spectral_demo(lo, hi);
                json degs = json::array();
                for (const auto& d : rep.degrees) {
                    json blocks = json::array();
                    for (const auto& b : d.blocks) {
                        json reps = json::array();
                        for (const auto& r : b.reps) reps.push_back(r.to_vector());
                        blocks.push_back({{"reps", reps}, {"dim", b.dim}, {"nilpotency_L2", b.nilpotency_l2}, {"matches", b.matches}});
                    }
                    degs.push_back({{"degree", d.degree}, {"dim", d.dim}, {"pass", d.ok}, {"blocks", blocks}});
                    text += "degree " + std::to_string(d.degree) + ": dim " + std::to_string(d.dim) + ", " +
                            std::to_string(d.blocks.size()) + " blocks, " + (d.ok ? "as predicted" : "MISMATCH") + "\n";
                }
                out["demo"] = {{"pass", rep.ok}, {"degrees", degs}};
                ok = ok && rep.ok;
            }
            emit(cfg, out, text);
            return ok ? 0 : 1;
        }
        if (*verify) {
            const auto ids = criterion ? std::vector<int>{*criterion} : cms::acceptance::suite(suite_name);
            json results = json::array();
            std::string text;
            bool ok = true;
            for (int id : ids) {
                const auto r = cms::acceptance::run_criterion(id);
                results.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.passed}, {"detail", r.detail}});
                text += cms::acceptance::format(r) + "\n";
                ok = ok && r.passed;
            }
            emit(cfg, json{{"pass", ok}, {"criteria", results}}, text);
            return ok ? 0 : 1;
        }
    } catch (const cms::Error& e) {
        std::cerr << json{{"error", {{"code", e.code()}, {"message", e.what()}}}}.dump() << "\n";
        return e.code() == "InvalidArgument" ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << json{{"error", {{"code", "InternalError"}, {"message", e.what()}}}}.dump() << "\n";
        return 1;
    }
    return 2;
}
