// Command-line front end: Euler elements, gradings, Harish-Chandra data,
// orbit counts, cones, classification tables, pi_0 and the matrix models.

#include "ncc/catalog.hpp"
#include "ncc/cones.hpp"
#include "ncc/emit.hpp"
#include "ncc/models.hpp"
#include "ncc/orbits.hpp"
#include "ncc/strongorth.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace ncc;

namespace {

struct Output {
    Json json;
    std::string plain;
    std::string md;
};

struct SystemArgs {
    std::string type;
    int rank = -1;
    int h = 0;
};

void add_system_args(CLI::App* c, SystemArgs& a, bool with_index)
{
    c->add_option("--type", a.type, "root system family: A B C D E6 E7 E8 F4 G2 BC")->required();
    c->add_option("--rank", a.rank, "rank (implied for exceptional families)");
    if (with_index) c->add_option("--h", a.h, "index j of the coweight h_j")->required();
}

RootSystem system_of(const SystemArgs& a)
{
    Family f = parse_family(a.type);
    int rank = a.rank;
    if (rank < 0) {
        switch (f) {
        case Family::E6: rank = 6; break;
        case Family::E7: rank = 7; break;
        case Family::E8: rank = 8; break;
        case Family::F4: rank = 4; break;
        case Family::G2: rank = 2; break;
        default: throw std::invalid_argument("--rank is required for family " + a.type);
        }
    }
    return build(make_kind(f, rank));
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string roots_text(const std::vector<RVector>& vs)
{
    std::string s;
    for (const auto& v : vs) s += (s.empty() ? "" : " ") + to_string(v);
    return s.empty() ? "{}" : s;
}

Json roots_json(const std::vector<RVector>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Output cmd_euler(const SystemArgs& a)
{
    auto rs = system_of(a);
    Output o;
    o.json["system"] = to_string(rs.kind);
    o.json["euler_elements"] = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : euler_elements(rs)) {
        bool sym = is_symmetric(rs, e);
        Json j;
        j["index"] = e.index;
        j["coweight"] = to_json(e.coweight);
        j["symmetric"] = sym;
        o.json["euler_elements"].push_back(j);
        o.plain += "h_" + std::to_string(e.index) + "  " + to_string(e.coweight) + "  symmetric: " + yes_no(sym) + "\n";
        rows.push_back({"h_" + std::to_string(e.index), to_string(e.coweight), yes_no(sym)});
    }
    if (rows.empty()) o.plain = "no Euler elements in " + to_string(rs.kind) + "\n";
    o.md = markdown_table({"Euler element", "coweight", "symmetric"}, rows);
    return o;
}

Output cmd_grade(const SystemArgs& a)
{
    auto rs = system_of(a);
    auto h = euler_element(rs, a.h);
    auto g = grading(rs, h);
    Output o;
    o.json["system"] = to_string(rs.kind);
    o.json["h"] = a.h;
    o.json["plus"] = roots_json(g.plus);
    o.json["zero"] = roots_json(g.zero);
    o.json["minus"] = roots_json(g.minus);
    o.plain = "Sigma_1:  " + roots_text(g.plus) + "\nSigma_0:  " + roots_text(g.zero) +
              "\nSigma_-1: " + roots_text(g.minus) + "\n";
    o.md = markdown_table({"part", "roots"}, {{"Σ_1", roots_text(g.plus)},
                                              {"Σ_0", roots_text(g.zero)},
                                              {"Σ_-1", roots_text(g.minus)}});
    return o;
}

Output cmd_gamma(const SystemArgs& a)
{
    auto rs = system_of(a);
    auto h = euler_element(rs, a.h);
    auto g = gamma_hc(rs, h);
    auto p = hc_partition(rs, h, g);
    auto c = check_hs_conditions(rs, h);
    std::string type = std::string(projected_type(p) == ProjectedType::C ? "C_" : "BC_") + std::to_string(g.r());
    auto hs = h_s(g);
    Output o;
    o.json["system"] = to_string(rs.kind);
    o.json["h"] = a.h;
    o.json["gamma"] = roots_json(g.gammas);
    o.json["r"] = g.r();
    o.json["projected_type"] = type;
    o.json["h_s"] = to_json(hs);
    o.json["symmetric"] = c.symmetric;
    o.json["h_equals_h_s"] = c.equals_hs;
    o.json["p_c_fibers_empty"] = c.fibers_empty;
    o.json["in_coroot_span"] = in_coroot_span(g, h.coweight);
    o.plain = "Gamma: " + roots_text(g.gammas) + "\nr = " + std::to_string(g.r()) + "\nprojected type: " + type +
              "\nh_s = " + to_string(hs) + "\nsymmetric: " + yes_no(c.symmetric) +
              "\nh = h_s: " + yes_no(c.equals_hs) + "\nP_j, C_j empty: " + yes_no(c.fibers_empty) + "\n";
    o.md = markdown_table({"Γ", "r", "projected type", "h_s", "symmetric"},
                          {{roots_text(g.gammas), std::to_string(g.r()), type, to_string(hs), yes_no(c.symmetric)}});
    return o;
}

Output cmd_orbits(const SystemArgs& a)
{
    auto rs = system_of(a);
    auto h = euler_element(rs, a.h);
    auto oc = double_cosets(rs, h);
    Output o;
    o.json["system"] = to_string(rs.kind);
    o.json["h"] = a.h;
    o.json["total_points"] = oc.total_points;
    o.json["class_count"] = oc.class_count;
    o.json["representatives"] = roots_json(oc.representatives);
    o.json["class_sizes"] = oc.class_sizes;
    o.plain = std::to_string(oc.class_count) + " classes (" + std::to_string(oc.total_points) + " points)\n";
    std::vector<std::vector<std::string>> rows;
    for (std::size_t i = 0; i < oc.class_count; ++i) {
        o.plain += "  " + to_string(oc.representatives[i]) + "  size " + std::to_string(oc.class_sizes[i]) + "\n";
        rows.push_back({to_string(oc.representatives[i]), std::to_string(oc.class_sizes[i])});
    }
    o.md = markdown_table({"representative", "size"}, rows);
    return o;
}

std::vector<int> parse_ints(const std::string& s)
{
    std::vector<int> out;
    std::string item;
    std::istringstream in(s);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("not an integer: " + item);
        out.push_back(v);
    }
    return out;
}

Output pi0_of(const std::vector<NccEntry>& es)
{
    Output o;
    o.json["rows"] = Json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& e : es) {
        auto res = pi0(e);
        Json j;
        j["g"] = e.g_name;
        j["h"] = euler_list(e.euler_indices);
        j["type"] = to_string(e.type_class);
        j["r"] = e.r;
        j["pi0_order"] = res.order;
        j["reason"] = res.reason;
        o.json["rows"].push_back(j);
        o.plain += e.g_name + " (" + euler_list(e.euler_indices) + "): |pi0| = " + std::to_string(res.order) +
                   "  [" + res.reason + "]\n";
        rows.push_back({e.g_name, euler_list(e.euler_indices), to_string(e.type_class), std::to_string(e.r),
                        std::to_string(res.order), res.reason});
    }
    o.md = markdown_table({"g", "h", "type", "r", "|π_0|", "reason"}, rows);
    return o;
}

Output cmd_cone(const SystemArgs& a, const std::string& point, const std::string& which)
{
    auto rs = system_of(a);
    auto h = euler_element(rs, a.h);
    RVector x = parse_rvector(point);
    if (x.size() != rs.ambient_dim)
        throw std::invalid_argument("point has " + std::to_string(x.size()) + " coordinates, expected " +
                                    std::to_string(rs.ambient_dim));
    std::string verdict;
    if (which == "max") {
        auto c = cmax_a(rs, h);
        verdict = !contains(c, x) ? "outside" : on_boundary(c, x) ? "boundary" : "inside";
    } else {
        auto c = cmin_a(rs, h);
        verdict = !contains(c, x) ? "outside" : on_boundary(c, x) ? "boundary" : "inside";
    }
    Output o;
    o.json["system"] = to_string(rs.kind);
    o.json["h"] = a.h;
    o.json["cone"] = which;
    o.json["point"] = to_json(x);
    o.json["verdict"] = verdict;
    o.plain = verdict + "\n";
    o.md = markdown_table({"cone", "point", "verdict"}, {{which, to_string(x), verdict}});
    return o;
}

Output cmd_table(int n)
{
    Output o;
    o.json = table_json(n);
    o.md = table_markdown(n);
    o.plain = o.md;
    return o;
}

std::vector<Rational> parse_rationals(const std::string& s)
{
    if (s.empty()) return {};
    return parse_rvector(s).coords();
}

Output cmd_cw(int p, int q, const std::string& lambdas, const std::string& mus)
{
    auto g = cw_build(p, q, parse_rationals(lambdas), parse_rationals(mus));
    auto sig = signature(g.beta);
    auto qsig = signature(restrict_form(g.beta, cw_minus_tau_basis(g)));
    Output o;
    o.json["dim"] = g.dim;
    o.json["jacobi"] = cw_jacobi(g);
    o.json["beta_invariant"] = cw_beta_invariant(g);
    o.json["d_skew"] = cw_d_skew(g);
    o.json["tau_automorphism"] = cw_tau_automorphism(g);
    o.json["signature"] = {sig.plus, sig.minus};
    o.json["degenerate"] = sig.zero;
    o.json["minus_tau_signature"] = {qsig.plus, qsig.minus};
    std::string s = "(" + std::to_string(sig.plus) + "," + std::to_string(sig.minus) + ")";
    std::string qs = "(" + std::to_string(qsig.plus) + "," + std::to_string(qsig.minus) + ")";
    o.plain = "dim " + std::to_string(g.dim) + "\nJacobi: " + yes_no(cw_jacobi(g)) +
              "\nbeta invariant: " + yes_no(cw_beta_invariant(g)) + "\nD skew: " + yes_no(cw_d_skew(g)) +
              "\ntau automorphism: " + yes_no(cw_tau_automorphism(g)) + "\nsignature " + s +
              "\nsignature on the (-tau)-eigenspace " + qs + "\n";
    o.md = markdown_table({"dim", "Jacobi", "β invariant", "signature", "(-τ) signature"},
                          {{std::to_string(g.dim), yes_no(cw_jacobi(g)), yes_no(cw_beta_invariant(g)), s, qs}});
    return o;
}

Output cmd_crown(const std::string& xs, bool center)
{
    std::vector<double> x;
    std::string item;
    std::istringstream in(xs);
    while (std::getline(in, item, ',')) {
        std::size_t used = 0;
        x.push_back(std::stod(item, &used));
        if (used != item.size()) throw std::invalid_argument("not a number: " + item);
    }
    bool in_crown = crown_membership(static_cast<int>(x.size()), x, center);
    auto comp = crown_components(x, center);
    Output o;
    o.json["components"] = comp;
    o.json["inside"] = in_crown;
    o.json["spectral_radius"] = sl2s_spectral_radius(x);
    std::ostringstream os;
    os.precision(17);
    for (double c : comp) os << c << " ";
    o.plain = std::string(in_crown ? "inside" : "outside") + "\ncomponents: " + os.str() + "\n";
    o.md = markdown_table({"inside", "spectral radius"},
                          {{yes_no(in_crown), std::to_string(sl2s_spectral_radius(x))}});
    return o;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Euler elements, 3-gradings and non-compactly causal symmetric Lie algebras"};
    app.set_help_flag("--help", "print this help and exit");
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand
    std::string format = "plain", out_path;
    app.add_option("--format", format, "json, md or plain")
        ->check(CLI::IsMember({"json", "md", "plain"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "write output to this file");

    SystemArgs sys;
    auto* c_euler = app.add_subcommand("euler", "Euler elements with symmetry flags");
    add_system_args(c_euler, sys, false);
    auto* c_grade = app.add_subcommand("grade", "3-grading induced by h_j");
    add_system_args(c_grade, sys, true);
    auto* c_gamma = app.add_subcommand("gamma", "strongly orthogonal set, projection type, h_s");
    add_system_args(c_gamma, sys, true);
    auto* c_orbits = app.add_subcommand("orbits", "W_0-orbits on W.h");
    add_system_args(c_orbits, sys, true);

    auto* c_pi0 = app.add_subcommand("pi0", "component group order for a Table 3 row");
    std::string family, params;
    bool all = false;
    c_pi0->add_option("--family", family, "row family key, e.g. sp_2r(R), so(n,n), sl_n(R)");
    c_pi0->add_option("--params", params, "comma-separated integer parameters");
    c_pi0->add_flag("--all", all, "every instantiated row");

    auto* c_cone = app.add_subcommand("cone", "membership in the minimal or maximal cone");
    add_system_args(c_cone, sys, true);
    std::string point, which = "max";
    c_cone->add_option("--point", point, "comma-separated rationals")->required();
    c_cone->add_option("--which", which, "min or max")->check(CLI::IsMember({"min", "max"}));

    auto* c_table = app.add_subcommand("table", "emit a classification table");
    int table_no = 0;
    c_table->add_option("number", table_no, "1, 2 or 3")->required()->check(CLI::Range(1, 3));

    auto* c_cw = app.add_subcommand("cw", "Cahen-Wallach algebra checks");
    int p = 0, q = 0;
    std::string lambdas, mus;
    c_cw->add_option("--p", p, "number of mu parameters")->required();
    c_cw->add_option("--q", q, "number of lambda parameters")->required();
    c_cw->add_option("--lambdas", lambdas, "comma-separated positive rationals");
    c_cw->add_option("--mus", mus, "comma-separated positive rationals");

    auto* c_crown = app.add_subcommand("crown", "crown membership in the sl2^s model");
    std::string xs;
    bool center = false;
    c_crown->add_option("--x", xs, "comma-separated reals")->required();
    c_crown->add_flag("--center", center, "include a central component");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        Output o;
        if (c_euler->parsed()) o = cmd_euler(sys);
        else if (c_grade->parsed()) o = cmd_grade(sys);
        else if (c_gamma->parsed()) o = cmd_gamma(sys);
        else if (c_orbits->parsed()) o = cmd_orbits(sys);
        else if (c_pi0->parsed()) {
            if (all) o = pi0_of(table3());
            else if (family.empty()) throw std::invalid_argument("pi0 needs --family or --all");
            else o = pi0_of({ncc_entry(parse_ncc_family(family), parse_ints(params))});
        } else if (c_cone->parsed()) o = cmd_cone(sys, point, which);
        else if (c_table->parsed()) o = cmd_table(table_no);
        else if (c_cw->parsed()) o = cmd_cw(p, q, lambdas, mus);
        else if (c_crown->parsed()) o = cmd_crown(xs, center);

        std::string text = format == "json" ? dump(o.json) : format == "md" ? o.md : o.plain;
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw std::runtime_error("cannot open " + out_path);
            f << text;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
