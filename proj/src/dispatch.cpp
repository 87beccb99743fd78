#include "germ2/dispatch.hpp"
#include "germ2/germtext.hpp"
#include "germ2/lie.hpp"
#include "germ2/normalform.hpp"
#include "germ2/dynamics.hpp"
#include "germ2/error.hpp"
#include <json.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

namespace germ2 {

namespace {

struct Args {
    std::vector<std::string> pos;
    std::map<std::string, std::string> opts;

    bool has(const std::string& k) const { return opts.count(k) > 0; }
    std::string get(const std::string& k, const std::string& dflt = "") const {
        auto it = opts.find(k);
        return it == opts.end() ? dflt : it->second;
    }
    long get_long(const std::string& k, long dflt) const {
        auto it = opts.find(k);
        if (it == opts.end()) return dflt;
        try {
            return std::stol(it->second);
        } catch (...) {
            throw UsageError("option --" + k + " expects an integer");
        }
    }
    double get_double(const std::string& k, double dflt) const {
        auto it = opts.find(k);
        if (it == opts.end()) return dflt;
        try {
            return std::stod(it->second);
        } catch (...) {
            throw UsageError("option --" + k + " expects a number");
        }
    }
    const std::string& positional(size_t i, const char* what) const {
        if (i >= pos.size()) throw UsageError(std::string("missing argument: ") + what);
        return pos[i];
    }
};

const char* kBareFlags[] = {"json", "numeric-roots", "auto"};

Args parse_args(const std::vector<std::string>& raw, size_t from) {
    Args a;
    for (size_t i = from; i < raw.size(); i++) {
        const std::string& t = raw[i];
        if (t.rfind("--", 0) == 0) {
            std::string body = t.substr(2);
            size_t eq = body.find('=');
            if (eq != std::string::npos) {
                a.opts[body.substr(0, eq)] = body.substr(eq + 1);
                continue;
            }
            bool bare = false;
            for (auto* b : kBareFlags)
                if (body == b) bare = true;
            if (!bare && i + 1 < raw.size() && raw[i + 1].rfind("--", 0) != 0) {
                a.opts[body] = raw[++i];
            } else {
                a.opts[body] = "";
            }
        } else {
            a.pos.push_back(t);
        }
    }
    return a;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

GermDocument read_doc(const std::string& path, const Args& a) {
    GermDocument d = parse_germ(slurp(path));
    if (a.has("order")) d = doc_with_order(d, (int)a.get_long("order", d.truncation));
    return d;
}

Cx parse_exact_complex(const std::string& s) { return gaussian_parse(s).to_complex(); }

std::pair<Cx, Cx> parse_start(const std::string& s) {
    size_t comma = std::string::npos;
    int depth = 0;
    for (size_t i = 0; i < s.size(); i++) {
        if (s[i] == '(') depth++;
        if (s[i] == ')') depth--;
        if (s[i] == ',' && depth == 0) { comma = i; break; }
    }
    if (comma == std::string::npos) throw UsageError("--start expects 'x,y'");
    return {parse_exact_complex(s.substr(0, comma)), parse_exact_complex(s.substr(comma + 1))};
}

void emit_doc(std::ostream& out, const Args& a, const GermDocument& d) {
    if (a.has("json")) {
        nlohmann::json j;
        j["germ"] = render_germ(d);
        out << j.dump(2) << "\n";
    } else {
        out << render_germ(d);
    }
}

nlohmann::json direction_json(const MapGerm& F) {
    DirectionData D = direction_data(F);
    nlohmann::json j;
    j["k"] = D.k;
    j["p"] = poly_str(D.p);
    j["r"] = poly_str(D.r);
    j["dicritic"] = D.dicritic();
    j["infinity_is_characteristic"] = D.infinity_is_characteristic;
    nlohmann::json roots = nlohmann::json::array();
    for (size_t i = 0; i < D.rational_roots.size(); i++)
        roots.push_back({{"v", gaussian_str(D.rational_roots[i])},
                         {"multiplicity", D.root_multiplicities[i]}});
    j["rational_roots"] = roots;
    CharDirections cd = characteristic_directions(F);
    j["all_directions_characteristic"] = cd.all_directions;
    nlohmann::json dirs = nlohmann::json::array();
    for (auto& d : cd.dirs)
        dirs.push_back({{"at_infinity", d.at_infinity},
                        {"v", d.at_infinity ? std::string("infinity") : gaussian_str(d.v)},
                        {"lambda", gaussian_str(d.lambda)},
                        {"degenerate", d.degenerate}});
    j["characteristic_directions"] = dirs;
    return j;
}

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    (void)err;
    if (argv.empty()) throw UsageError("usage: germ2 <command> [args]; see README");
    const std::string& cmd = argv[0];
    Args a = parse_args(argv, 1);

    if (cmd == "parse") {
        emit_doc(out, a, read_doc(a.positional(0, "germ file"), a));
        return 0;
    }
    if (cmd == "compose") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "first germ"), a));
        MapGerm G = doc_to_map(read_doc(a.positional(1, "second germ"), a));
        emit_doc(out, a, doc_from_map(compose(F, G), "composed"));
        return 0;
    }
    if (cmd == "invert") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        emit_doc(out, a, doc_from_map(invert(F), "inverse"));
        return 0;
    }
    if (cmd == "exp") {
        VFieldGerm X = doc_to_field(read_doc(a.positional(0, "field"), a));
        emit_doc(out, a, doc_from_map(exp_field(X), "exp"));
        return 0;
    }
    if (cmd == "log") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        emit_doc(out, a, doc_from_field(log_diffeo(F), "log"));
        return 0;
    }
    if (cmd == "flow-power") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        if (!a.has("t")) throw UsageError("flow-power needs --t=<scalar>");
        emit_doc(out, a, doc_from_map(flow_power(F, gaussian_parse(a.get("t"))), "flow"));
        return 0;
    }
    if (cmd == "bracket") {
        VFieldGerm X = doc_to_field(read_doc(a.positional(0, "field"), a));
        VFieldGerm Y = doc_to_field(read_doc(a.positional(1, "field"), a));
        emit_doc(out, a, doc_from_field(lie_bracket(X, Y), "bracket"));
        return 0;
    }
    if (cmd == "commutator") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        MapGerm G = doc_to_map(read_doc(a.positional(1, "germ"), a));
        emit_doc(out, a, doc_from_map(group_commutator(F, G), "commutator"));
        return 0;
    }
    if (cmd == "order") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        long maxN = a.get_long("max", 24);
        auto n = germ_order(F, (int)maxN);
        if (n) out << *n << "\n";
        else out << "no order <= " << maxN << "\n";
        return 0;
    }
    if (cmd == "average-linearize") {
        std::vector<MapGerm> gens;
        for (auto& p : a.pos) gens.push_back(doc_to_map(read_doc(p, a)));
        if (gens.empty()) throw UsageError("average-linearize needs at least one germ");
        emit_doc(out, a, doc_from_map(average_linearizer(gens, (int)a.get_long("max-group", 64)), "averaged"));
        return 0;
    }
    if (cmd == "invariant-field") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        VFieldGerm X = doc_to_field(read_doc(a.positional(1, "field"), a));
        out << (is_invariant_field(F, X) ? "true" : "false") << "\n";
        return 0;
    }
    if (cmd == "linearize-radial") {
        VFieldGerm X = doc_to_field(read_doc(a.positional(0, "field"), a));
        emit_doc(out, a, doc_from_map(linearize_radial(X), "linearizer"));
        return 0;
    }
    if (cmd == "dicritic") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        DicriticInfo info = is_dicritic(F);
        nlohmann::json j;
        j["tangent_to_identity"] = info.tangent;
        j["dicritic"] = info.dicritic;
        if (info.tangent) j["k"] = info.k;
        if (info.dicritic) j["f"] = info.f.str();
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cmd == "abelian-t") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        MapGerm G = doc_to_map(read_doc(a.positional(1, "germ"), a));
        AbelianT t = abelian_structure(F, G);
        if (t.in_flow) out << gaussian_str(t.t) << "\n";
        else out << "not in flow" << "\n";
        return 0;
    }
    if (cmd == "resonances") {
        Gaussian l1 = gaussian_parse(a.positional(0, "lambda1"));
        Gaussian l2 = gaussian_parse(a.positional(1, "lambda2"));
        ResonanceReport rep = find_resonances(l1, l2, (int)a.get_long("bound", 6));
        nlohmann::json j;
        j["search_bound"] = rep.search_bound;
        nlohmann::json rel = nlohmann::json::array();
        for (auto& r : rep.relations) rel.push_back({{"m", {r.m1, r.m2}}, {"j", r.j}});
        j["relations"] = rel;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cmd == "sla") {
        if (!a.has("matrix") || !a.has("lambda"))
            throw UsageError("sla needs --matrix=\"a,b;c,d\" and --lambda=\"l1,l2\"");
        std::vector<std::vector<Int>> B;
        std::istringstream ms(a.get("matrix"));
        std::string row;
        while (std::getline(ms, row, ';')) {
            std::vector<Int> r;
            std::istringstream rs(row);
            std::string cell;
            while (std::getline(rs, cell, ',')) r.push_back(Int(cell));
            B.push_back(r);
        }
        std::vector<Rat> lambda;
        std::istringstream ls(a.get("lambda"));
        std::string cell;
        while (std::getline(ls, cell, ',')) {
            Gaussian g = gaussian_parse(cell);
            if (!g.is_rational()) throw UsageError("sla lambda entries must be rational");
            lambda.push_back(g.re);
        }
        out << (sla_membership(B, lambda) ? "true" : "false") << "\n";
        return 0;
    }
    if (cmd == "blowup") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        long chart = a.get_long("chart", 1);
        SemiSeries S = chart == 2 ? blowup_chart2(F) : blowup_chart1(F);
        out << semiseries_json(S) << "\n";
        return 0;
    }
    if (cmd == "directions") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        out << direction_json(F).dump(2) << "\n";
        return 0;
    }
    if (cmd == "normal-form") {
        if (a.positional(0, "mode") != "dicritic")
            throw UsageError("normal-form supports the 'dicritic' mode");
        MapGerm F = doc_to_map(read_doc(a.positional(1, "germ"), a));
        DicriticNormalForm nf = dicritic_normal_form(F, (int)a.get_long("xorder", -1));
        out << dicritic_normal_form_json(nf) << "\n";
        return 0;
    }
    if (cmd == "lambda") {
        SemiSeries S = a.has("chart")
                           ? parse_semiseries_json(slurp(a.get("chart")))
                           : blowup_chart1(doc_to_map(read_doc(a.positional(0, "germ"), a)));
        int vorder = (int)a.get_long("vorder", 6);
        LocalInvariant li;
        if (a.has("numeric-roots")) {
            if (!a.has("root")) throw UsageError("lambda needs --root=<seed>");
            li = lambda_invariant_numeric(S, parse_exact_complex(a.get("root")), vorder);
        } else {
            if (!a.has("root")) throw UsageError("lambda needs --root=<gaussian rational>");
            li = lambda_invariant(S, gaussian_parse(a.get("root")), vorder);
        }
        out << local_invariant_json(li) << "\n";
        return 0;
    }
    if (cmd == "lagrange") {
        SemiSeries S = a.has("chart")
                           ? parse_semiseries_json(slurp(a.get("chart")))
                           : blowup_chart1(doc_to_map(read_doc(a.positional(0, "germ"), a)));
        int vorder = (int)a.get_long("vorder", 6);
        nlohmann::json j;
        if (a.has("numeric-roots")) {
            auto coeffs = lagrange_LF_numeric(S, vorder);
            nlohmann::json arr = nlohmann::json::array();
            for (auto& c : coeffs) arr.push_back({c.real(), c.imag()});
            j["mode"] = "numeric";
            j["L_F_coefficients"] = arr;
        } else {
            j["mode"] = "exact";
            j["L_F"] = poly_str(lagrange_LF(S, vorder));
        }
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cmd == "residue") {
        GermDocument d = read_doc(a.positional(0, "one-variable germ"), a);
        auto [k, c] = residue_1d(doc_to_jet1(d));
        nlohmann::json j;
        j["k"] = k;
        j["c"] = gaussian_str(c);
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cmd == "orbit") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        auto [x0, y0] = parse_start(a.get("start", "1/10,1/10"));
        OrbitRecord o =
            iterate_orbit(F, x0, y0, (int)a.get_long("n", 1000), a.get_double("escape", 10.0));
        if (a.has("csv")) {
            DirectionData D = direction_data(F);
            std::ofstream cs(a.get("csv"));
            if (!cs) throw UsageError("cannot write CSV file: " + a.get("csv"));
            cs << orbit_csv(o, D.p);
        }
        out << orbit_json_summary(o) << "\n";
        return 0;
    }
    if (cmd == "seq1") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        auto [x0, y0] = parse_start(a.get("start", "1/10,1/10"));
        Seq1Result r = seq1_check(F, x0, y0, (int)a.get_long("n", 10000));
        nlohmann::json j;
        j["limit_estimate"] = {r.limit_estimate.real(), r.limit_estimate.imag()};
        j["target"] = {r.target.real(), r.target.imag()};
        j["error"] = r.error;
        out << j.dump(2) << "\n";
        return 0;
    }
    if (cmd == "flower") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        double R = a.has("R") && a.get("R") != "auto" ? a.get_double("R", -1.0) : -1.0;
        FlowerReport rep = flower_verify(
            F, (int)a.get_long("samples", 500), (int)a.get_long("n", 10000), R,
            a.get_double("r", 0.25), a.get_double("floor", 0.25),
            (uint64_t)a.get_long("seed", 1));
        out << flower_json(rep) << "\n";
        return 0;
    }
    if (cmd == "classify-roots") {
        MapGerm F = doc_to_map(read_doc(a.positional(0, "germ"), a));
        auto roots = classify_characteristic_roots(F, a.get_double("tolerance", 0.05),
                                                   (int)a.get_long("probes", 50),
                                                   (uint64_t)a.get_long("seed", 1));
        nlohmann::json arr = nlohmann::json::array();
        for (auto& rc : roots) {
            nlohmann::json j;
            j["v0"] = {rc.v0.real(), rc.v0.imag()};
            j["ratio"] = {rc.ratio.real(), rc.ratio.imag()};
            j["exact_root"] = rc.exact_root;
            j["probes"] = rc.probes;
            j["agreeing"] = rc.agreeing;
            switch (rc.orientation) {
                case RootClass::ForwardAttracting: j["orientation"] = "forward-attracting"; break;
                case RootClass::BackwardAttracting: j["orientation"] = "backward-attracting"; break;
                case RootClass::Undetermined: j["orientation"] = "undetermined"; break;
            }
            arr.push_back(j);
        }
        out << arr.dump(2) << "\n";
        return 0;
    }
    throw UsageError("unknown command: " + cmd);
}

} // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(args, out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const MathError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace germ2
