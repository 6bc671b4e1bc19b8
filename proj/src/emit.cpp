#include "ncc/emit.hpp"

#include <stdexcept>

namespace ncc {

Json to_json(const Rational& q) { return to_fraction(q); }

Json to_json(const RVector& v)
{
    Json a = Json::array();
    for (std::size_t i = 0; i < v.size(); ++i) a.push_back(to_fraction(v[i]));
    return a;
}

std::string euler_list(const std::vector<int>& idx)
{
    std::string s;
    for (int j : idx) s += (s.empty() ? "h_" : ", h_") + std::to_string(j);
    return s;
}

Json to_json(const HermitianEntry& e, bool symmetric_column)
{
    Json j;
    j["h_hermitian"] = e.h_name;
    j["sigma_h_a_h"] = kind_label(e.restricted_kind);
    j["g_h_c"] = e.complexification_name;
    j["sigma_g_a"] = kind_label(e.complexified_kind);
    j[symmetric_column ? "symm_euler_element" : "euler_elt"] = euler_list(e.euler_indices);
    return j;
}

Json to_json(const NccEntry& e)
{
    Json j;
    j["g"] = e.g_name;
    j["g_c_h_iq"] = e.gc_name;
    j["r"] = e.r;
    j["h_g_tau_h_theta"] = e.h_fix_name;
    j["s"] = e.s;
    j["sigma_g_a"] = kind_label(e.restricted_kind);
    j["h"] = euler_list(e.euler_indices);
    j["g_1_h"] = e.g1_name;
    j["type"] = to_string(e.type_class);
    return j;
}

Json table_json(int n)
{
    Json rows = Json::array();
    switch (n) {
    case 1: for (const auto& e : table1()) rows.push_back(to_json(e)); break;
    case 2: for (const auto& e : table2()) rows.push_back(to_json(e, true)); break;
    case 3: for (const auto& e : table3()) rows.push_back(to_json(e)); break;
    default: throw std::invalid_argument("table must be 1, 2 or 3");
    }
    Json j;
    j["table"] = n;
    j["rows"] = rows;
    return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows)
{
    auto line = [](const std::vector<std::string>& cells) {
        std::string s = "|";
        for (const auto& c : cells) s += " " + c + " |";
        return s + "\n";
    };
    std::string out = line(header);
    out += "|";
    for (std::size_t i = 0; i < header.size(); ++i) out += "---|";
    out += "\n";
    for (const auto& r : rows) {
        if (r.size() != header.size()) throw std::logic_error("markdown row width mismatch");
        out += line(r);
    }
    return out;
}

std::string table_markdown(int n)
{
    std::vector<std::vector<std::string>> rows;
    if (n == 1 || n == 2) {
        std::string last = n == 1 ? "Euler elt." : "symm. Euler element";
        for (const auto& e : n == 1 ? table1() : table2())
            rows.push_back({e.h_name, kind_label(e.restricted_kind), e.complexification_name,
                            kind_label(e.complexified_kind), euler_list(e.euler_indices)});
        return markdown_table({"h (hermitian)", "Σ(h, a_h)", "g = h_C", "Σ(g, a)", last}, rows);
    }
    if (n == 3) {
        for (const auto& e : table3())
            rows.push_back({e.g_name, e.gc_name, std::to_string(e.r), e.h_fix_name, std::to_string(e.s),
                            kind_label(e.restricted_kind), euler_list(e.euler_indices), e.g1_name,
                            to_string(e.type_class)});
        return markdown_table(
            {"g", "g^c = h + iq", "r", "h = g^(τ_h θ)", "s", "Σ(g, a)", "h", "g_1(h)", "type"}, rows);
    }
    throw std::invalid_argument("table must be 1, 2 or 3");
}

}  // namespace ncc
