#include "ncc/catalog.hpp"

#include "ncc/euler.hpp"

#include <algorithm>
#include <stdexcept>

namespace ncc {

namespace {

std::string str(int n) { return std::to_string(n); }

std::string pair_name(const std::string& head, int a, int b, const std::string& tail = "")
{
    return head + "(" + str(a) + "," + str(b) + tail + ")";
}

void need(bool ok, const std::string& what)
{
    if (!ok) throw std::invalid_argument(what);
}

void arity(const std::vector<int>& params, std::size_t n, const std::string& fam)
{
    need(params.size() == n, fam + " expects " + std::to_string(n) + " parameter(s)");
}

}  // namespace

std::string kind_label(const RootSystemKind& k)
{
    switch (k.family) {
    case Family::E6: return "E_6";
    case Family::E7: return "E_7";
    case Family::E8: return "E_8";
    case Family::F4: return "F_4";
    case Family::G2: return "G_2";
    default: return family_name(k.family) + "_" + str(k.rank);
    }
}

std::string to_string(TypeClass t)
{
    switch (t) {
    case TypeClass::Complex: return "complex";
    case TypeClass::Cayley: return "Cayley";
    case TypeClass::Split: return "split";
    case TypeClass::NonSplit: return "non-split";
    }
    return "?";
}

HermitianEntry hermitian_entry(HermFamily f, const std::vector<int>& params)
{
    HermitianEntry e;
    e.family = f;
    switch (f) {
    case HermFamily::SU: {
        arity(params, 2, "su(p,q)");
        int p = std::min(params[0], params[1]), q = std::max(params[0], params[1]);
        need(p >= 1 && p + q >= 3, "su(p,q) needs 1 <= p <= q and p+q >= 3");
        e.params = {p, q};
        e.h_name = pair_name("su", p, q);
        e.restricted_kind = make_kind(p < q ? Family::BC : Family::C, p);
        e.complexification_name = "sl(" + str(p + q) + ",C)";
        e.complexified_kind = make_kind(Family::A, p + q - 1);
        e.euler_indices = {p};
        break;
    }
    case HermFamily::SP: {
        arity(params, 1, "sp(2n,R)");
        int n = params[0];
        need(n >= 2, "sp(2n,R) needs n >= 2");
        e.params = {n};
        e.h_name = "sp(" + str(2 * n) + ",R)";
        e.restricted_kind = make_kind(Family::C, n);
        e.complexification_name = "sp(" + str(2 * n) + ",C)";
        e.complexified_kind = make_kind(Family::C, n);
        e.euler_indices = {n};
        break;
    }
    case HermFamily::SO2: {
        arity(params, 1, "so(2,n)");
        int n = params[0];
        need(n >= 3, "so(2,n) needs n > 2");
        e.params = {n};
        e.h_name = pair_name("so", 2, n);
        e.restricted_kind = make_kind(Family::C, 2);
        e.complexification_name = "so(" + str(n + 2) + ",C)";
        e.complexified_kind = n % 2 ? make_kind(Family::B, (n + 1) / 2) : make_kind(Family::D, (n + 2) / 2);
        e.euler_indices = {1};
        break;
    }
    case HermFamily::SOSTAR: {
        arity(params, 1, "so*(2n)");
        int n = params[0];
        need(n >= 3, "so*(2n) needs n >= 3");
        e.params = {n};
        e.h_name = "so*(" + str(2 * n) + ")";
        e.restricted_kind = make_kind(n % 2 ? Family::BC : Family::C, n / 2);
        e.complexification_name = "so(" + str(2 * n) + ",C)";
        e.complexified_kind = make_kind(Family::D, n);
        e.euler_indices = {n - 1, n};
        break;
    }
    case HermFamily::E6_14:
        arity(params, 0, "e6(-14)");
        e.h_name = "e6(-14)";
        e.restricted_kind = make_kind(Family::BC, 2);
        e.complexification_name = "e6";
        e.complexified_kind = make_kind(Family::E6, 6);
        e.euler_indices = {1, 6};
        break;
    case HermFamily::E7_25:
        arity(params, 0, "e7(-25)");
        e.h_name = "e7(-25)";
        e.restricted_kind = make_kind(Family::C, 3);
        e.complexification_name = "e7";
        e.complexified_kind = make_kind(Family::E7, 7);
        e.euler_indices = {7};
        break;
    }
    e.tube_type = e.restricted_kind.family == Family::C;
    return e;
}

namespace {

struct FamilyKey {
    NccFamily f;
    const char* key;
};

const FamilyKey family_keys[] = {
    {NccFamily::SlC, "sl_n(C)"},       {NccFamily::SpC, "sp_2n(C)"},    {NccFamily::SoC, "so_n(C)"},
    {NccFamily::So2nC, "so_2n(C)"},    {NccFamily::E6C, "e6(C)"},       {NccFamily::E7C, "e7(C)"},
    {NccFamily::SuRR, "su(r,r)"},      {NccFamily::Sp2rR, "sp_2r(R)"},  {NccFamily::So2d, "so(2,d)"},
    {NccFamily::SoStar4r, "so*(4r)"},  {NccFamily::E7_25, "e7(-25)"},   {NccFamily::SlR, "sl_n(R)"},
    {NccFamily::SoNN, "so(n,n)"},      {NccFamily::SoPQ, "so(p+1,q+1)"}, {NccFamily::E6R, "e6(R)"},
    {NccFamily::E7R, "e7(R)"},         {NccFamily::SlH, "sl_n(H)"},     {NccFamily::UnnH, "u(n,n;H)"},
    {NccFamily::So1d, "so(1,d+1)"},    {NccFamily::E6_26, "e6(-26)"},
};

int prime(int n, int j) { return std::min(j, n - j); }

}  // namespace

NccFamily parse_ncc_family(const std::string& key)
{
    for (const auto& k : family_keys)
        if (key == k.key) return k.f;
    std::string all;
    for (const auto& k : family_keys) all += std::string(all.empty() ? "" : ", ") + k.key;
    throw std::invalid_argument("unknown family '" + key + "'; expected one of: " + all);
}

std::string ncc_family_key(NccFamily f)
{
    for (const auto& k : family_keys)
        if (k.f == f) return k.key;
    return "?";
}

NccEntry ncc_entry(NccFamily f, const std::vector<int>& params)
{
    NccEntry e;
    e.family = f;
    e.params = params;
    auto set = [&](const char* block, int row, TypeClass t) {
        e.block = block;
        e.row = row;
        e.type_class = t;
        e.is_complex = t == TypeClass::Complex;
        e.is_cayley = t == TypeClass::Cayley;
    };
    auto gc = [&](HermFamily hf, std::vector<int> ps, bool doubled) {
        e.gc = GcRef{hf, ps, doubled};
        auto h = hermitian_entry(hf, ps);
        e.gc_name = doubled ? h.h_name + "^2" : h.h_name;
    };

    switch (f) {
    // Complex type
    case NccFamily::SlC: {
        arity(params, 2, "sl_n(C)");
        int n = params[0], j = params[1];
        need(n >= 3 && j >= 1 && j < n, "sl_n(C) needs n >= 3, 1 <= j < n");
        set("complex", 1, TypeClass::Complex);
        e.g_name = "sl(" + str(n) + ",C)";
        gc(HermFamily::SU, {j, n - j}, true);
        e.r = 2 * prime(n, j);
        e.h_fix_name = pair_name("su", j, n - j);
        e.s = prime(n, j);
        e.restricted_kind = make_kind(Family::A, n - 1);
        e.euler_indices = {j};
        e.g1_name = "M(" + str(j) + "," + str(n - j) + ";C)";
        break;
    }
    case NccFamily::SpC: {
        arity(params, 1, "sp_2n(C)");
        int n = params[0];
        need(n >= 2, "sp_2n(C) needs n >= 2");
        set("complex", 2, TypeClass::Complex);
        e.g_name = "sp(" + str(2 * n) + ",C)";
        gc(HermFamily::SP, {n}, true);
        e.r = 2 * n;
        e.h_fix_name = "sp(" + str(2 * n) + ",R)";
        e.s = n;
        e.restricted_kind = make_kind(Family::C, n);
        e.euler_indices = {n};
        e.g1_name = "Sym(" + str(n) + ",C)";
        break;
    }
    case NccFamily::SoC: {
        arity(params, 1, "so_n(C)");
        int n = params[0];
        need(n > 4, "so_n(C) needs n > 4");
        set("complex", 3, TypeClass::Complex);
        e.g_name = "so(" + str(n) + ",C)";
        gc(HermFamily::SO2, {n - 2}, true);
        e.r = 4;
        e.h_fix_name = pair_name("so", 2, n - 2);
        e.s = 2;
        e.restricted_kind = make_kind(n % 2 ? Family::B : Family::D, n / 2);
        e.euler_indices = {1};
        e.g1_name = "C^" + str(n - 2);
        break;
    }
    case NccFamily::So2nC: {
        arity(params, 1, "so_2n(C)");
        int n = params[0];
        need(n >= 3, "so_2n(C) needs n >= 3");
        set("complex", 4, TypeClass::Complex);
        e.g_name = "so(" + str(2 * n) + ",C)";
        gc(HermFamily::SOSTAR, {n}, true);
        e.r = 2 * (n / 2);
        e.h_fix_name = "so*(" + str(2 * n) + ")";
        e.s = n / 2;
        e.restricted_kind = make_kind(Family::D, n);
        e.euler_indices = {n - 1, n};
        e.g1_name = "Skew(" + str(n) + ",C)";
        break;
    }
    case NccFamily::E6C:
        arity(params, 0, "e6(C)");
        set("complex", 5, TypeClass::Complex);
        e.g_name = "e6(C)";
        gc(HermFamily::E6_14, {}, true);
        e.r = 4;
        e.h_fix_name = "e6(-14)";
        e.s = 2;
        e.restricted_kind = make_kind(Family::E6, 6);
        e.euler_indices = {1, 6};
        e.g1_name = "M(1,2;O)_C";
        break;
    case NccFamily::E7C:
        arity(params, 0, "e7(C)");
        set("complex", 6, TypeClass::Complex);
        e.g_name = "e7(C)";
        gc(HermFamily::E7_25, {}, true);
        e.r = 6;
        e.h_fix_name = "e7(-25)";
        e.s = 3;
        e.restricted_kind = make_kind(Family::E7, 7);
        e.euler_indices = {7};
        e.g1_name = "Herm(3,O)_C";
        break;

    // Cayley type
    case NccFamily::SuRR: {
        arity(params, 1, "su(r,r)");
        int r = params[0];
        need(r >= 2, "su(r,r) needs r >= 2");
        set("Cayley", 1, TypeClass::Cayley);
        e.g_name = pair_name("su", r, r);
        gc(HermFamily::SU, {r, r}, false);
        e.r = r;
        e.h_fix_name = "R+sl(" + str(r) + ",C)";
        e.s = r;
        e.restricted_kind = make_kind(Family::C, r);
        e.euler_indices = {r};
        e.g1_name = "Herm(" + str(r) + ",C)";
        break;
    }
    case NccFamily::Sp2rR: {
        arity(params, 1, "sp_2r(R)");
        int r = params[0];
        need(r >= 2, "sp_2r(R) needs r >= 2");
        set("Cayley", 2, TypeClass::Cayley);
        e.g_name = "sp(" + str(2 * r) + ",R)";
        gc(HermFamily::SP, {r}, false);
        e.r = r;
        e.h_fix_name = "R+sl(" + str(r) + ",R)";
        e.s = r;
        e.restricted_kind = make_kind(Family::C, r);
        e.euler_indices = {r};
        e.g1_name = "Sym(" + str(r) + ",R)";
        break;
    }
    case NccFamily::So2d: {
        arity(params, 1, "so(2,d)");
        int d = params[0];
        need(d > 2, "so(2,d) needs d > 2");
        set("Cayley", 3, TypeClass::Cayley);
        e.g_name = pair_name("so", 2, d);
        gc(HermFamily::SO2, {d}, false);
        e.r = 2;
        e.h_fix_name = "R+" + pair_name("so", 1, d - 1);
        e.s = 2;
        e.restricted_kind = make_kind(Family::C, 2);
        e.euler_indices = {2};
        e.g1_name = "R^{1," + str(d - 1) + "}";
        break;
    }
    case NccFamily::SoStar4r: {
        arity(params, 1, "so*(4r)");
        int r = params[0];
        need(r >= 2, "so*(4r) needs r >= 2");
        set("Cayley", 4, TypeClass::Cayley);
        e.g_name = "so*(" + str(4 * r) + ")";
        gc(HermFamily::SOSTAR, {2 * r}, false);
        e.r = r;
        e.h_fix_name = "R+sl(" + str(r) + ",H)";
        e.s = r;
        e.restricted_kind = make_kind(Family::C, r);
        e.euler_indices = {r};
        e.g1_name = "Herm(" + str(r) + ",H)";
        break;
    }
    case NccFamily::E7_25:
        arity(params, 0, "e7(-25)");
        set("Cayley", 5, TypeClass::Cayley);
        e.g_name = "e7(-25)";
        gc(HermFamily::E7_25, {}, false);
        e.r = 3;
        e.h_fix_name = "R+e6(-26)";
        e.s = 3;
        e.restricted_kind = make_kind(Family::C, 3);
        e.euler_indices = {3};
        e.g1_name = "Herm(3,O)";
        break;

    // Split type
    case NccFamily::SlR: {
        arity(params, 2, "sl_n(R)");
        int n = params[0], j = params[1];
        need(n >= 3 && j >= 1 && j < n, "sl_n(R) needs n >= 3, 1 <= j < n");
        set("split", 1, TypeClass::Split);
        e.g_name = "sl(" + str(n) + ",R)";
        gc(HermFamily::SU, {j, n - j}, false);
        e.r = prime(n, j);
        e.h_fix_name = pair_name("so", j, n - j);
        e.s = prime(n, j);
        e.restricted_kind = make_kind(Family::A, n - 1);
        e.euler_indices = {j};
        e.g1_name = "M(" + str(j) + "," + str(n - j) + ";R)";
        break;
    }
    case NccFamily::SoNN: {
        arity(params, 1, "so(n,n)");
        int n = params[0];
        need(n >= 3, "so(n,n) needs n >= 3");
        set("split", 2, TypeClass::Split);
        e.g_name = pair_name("so", n, n);
        gc(HermFamily::SOSTAR, {n}, false);
        e.r = n / 2;
        e.h_fix_name = "so(" + str(n) + ",C)";
        e.s = n / 2;
        e.restricted_kind = make_kind(Family::D, n);
        e.euler_indices = {n - 1, n};
        e.g1_name = "Skew(" + str(n) + ",R)";
        break;
    }
    case NccFamily::SoPQ: {
        arity(params, 2, "so(p+1,q+1)");
        int p = params[0], q = params[1];
        need(p > 1 && p <= q, "so(p+1,q+1) needs 1 < p <= q");
        set("split", 3, TypeClass::Split);
        e.g_name = pair_name("so", p + 1, q + 1);
        gc(HermFamily::SO2, {p + q}, false);
        e.r = 2;
        e.h_fix_name = pair_name("so", 1, p) + "+" + pair_name("so", 1, q);
        e.s = 2;
        e.restricted_kind = make_kind(p < q ? Family::B : Family::D, p + 1);
        e.euler_indices = {1};
        e.g1_name = "R^{" + str(p) + "," + str(q) + "}";
        break;
    }
    case NccFamily::E6R:
        arity(params, 0, "e6(R)");
        set("split", 4, TypeClass::Split);
        e.g_name = "e6(R)";
        gc(HermFamily::E6_14, {}, false);
        e.r = 2;
        e.h_fix_name = "u(2,2;H)";
        e.s = 2;
        e.restricted_kind = make_kind(Family::E6, 6);
        e.euler_indices = {1, 6};
        e.g1_name = "M(1,2;O_split)";
        break;
    case NccFamily::E7R:
        arity(params, 0, "e7(R)");
        set("split", 5, TypeClass::Split);
        e.g_name = "e7(R)";
        gc(HermFamily::E7_25, {}, false);
        e.r = 3;
        e.h_fix_name = "sl(4,H)=su*(8)";
        e.s = 3;
        e.restricted_kind = make_kind(Family::E7, 7);
        e.euler_indices = {7};
        e.g1_name = "Herm(3,O_split)";
        break;

    // Non-split type
    case NccFamily::SlH: {
        arity(params, 2, "sl_n(H)");
        int n = params[0], j = params[1];
        need(n >= 2 && j >= 1 && j < n, "sl_n(H) needs n >= 2, 1 <= j < n");
        set("non-split", 1, TypeClass::NonSplit);
        e.g_name = "sl(" + str(n) + ",H)";
        gc(HermFamily::SU, {2 * j, 2 * n - 2 * j}, false);
        e.r = 2 * prime(n, j);
        e.h_fix_name = pair_name("u", j, n - j, ";H");
        e.s = prime(n, j);
        e.restricted_kind = make_kind(Family::A, n - 1);
        e.euler_indices = {j};
        e.g1_name = "M(" + str(j) + "," + str(n - j) + ";H)";
        break;
    }
    case NccFamily::UnnH: {
        arity(params, 1, "u(n,n;H)");
        int n = params[0];
        need(n >= 2, "u(n,n;H) needs n >= 2");
        set("non-split", 2, TypeClass::NonSplit);
        e.g_name = pair_name("u", n, n, ";H");
        gc(HermFamily::SP, {2 * n}, false);
        e.r = 2 * n;
        e.h_fix_name = "sp(" + str(2 * n) + ",C)";
        e.s = n;
        e.restricted_kind = make_kind(Family::C, n);
        e.euler_indices = {n};
        e.g1_name = "Aherm(" + str(n) + ",H)";
        break;
    }
    case NccFamily::So1d: {
        arity(params, 1, "so(1,d+1)");
        int d = params[0];
        need(d > 2, "so(1,d+1) needs d > 2");
        set("non-split", 3, TypeClass::NonSplit);
        e.g_name = pair_name("so", 1, d + 1);
        gc(HermFamily::SO2, {d}, false);
        e.r = 2;
        e.h_fix_name = pair_name("so", 1, d);
        e.s = 1;
        e.restricted_kind = make_kind(Family::A, 1);
        e.euler_indices = {1};
        e.g1_name = "R^" + str(d);
        break;
    }
    case NccFamily::E6_26:
        arity(params, 0, "e6(-26)");
        set("non-split", 4, TypeClass::NonSplit);
        e.g_name = "e6(-26)";
        gc(HermFamily::E6_14, {}, false);
        e.r = 2;
        e.h_fix_name = "f4(-20)";
        e.s = 1;
        e.restricted_kind = make_kind(Family::A, 2);
        e.euler_indices = {1, 2};
        e.g1_name = "M(1,2;O)";
        break;
    }
    return e;
}

std::vector<HermitianEntry> table1()
{
    std::vector<HermitianEntry> t;
    for (int p = 1; 2 * p <= 9; ++p)
        for (int q = p; p + q <= 9; ++q)
            if (p + q >= 3) t.push_back(hermitian_entry(HermFamily::SU, {p, q}));
    for (int n = 2; n <= 8; ++n) t.push_back(hermitian_entry(HermFamily::SP, {n}));
    for (int n = 3; n <= 15; ++n) t.push_back(hermitian_entry(HermFamily::SO2, {n}));
    for (int n = 3; n <= 8; ++n) t.push_back(hermitian_entry(HermFamily::SOSTAR, {n}));
    t.push_back(hermitian_entry(HermFamily::E6_14, {}));
    t.push_back(hermitian_entry(HermFamily::E7_25, {}));
    return t;
}

std::vector<HermitianEntry> table2()
{
    auto t = table1();
    std::erase_if(t, [](const HermitianEntry& e) { return !e.tube_type; });
    return t;
}

std::vector<NccEntry> table3()
{
    std::vector<NccEntry> t;
    auto add = [&](NccFamily f, std::vector<int> ps) { t.push_back(ncc_entry(f, ps)); };
    for (int n = 3; n <= 9; ++n)
        for (int j = 1; j < n; ++j) add(NccFamily::SlC, {n, j});
    for (int n = 2; n <= 8; ++n) add(NccFamily::SpC, {n});
    for (int n = 5; n <= 17; ++n) add(NccFamily::SoC, {n});
    for (int n = 3; n <= 8; ++n) add(NccFamily::So2nC, {n});
    add(NccFamily::E6C, {});
    add(NccFamily::E7C, {});

    for (int r = 2; r <= 8; ++r) add(NccFamily::SuRR, {r});
    for (int r = 2; r <= 8; ++r) add(NccFamily::Sp2rR, {r});
    for (int d = 3; d <= 15; ++d) add(NccFamily::So2d, {d});
    for (int r = 2; r <= 8; ++r) add(NccFamily::SoStar4r, {r});
    add(NccFamily::E7_25, {});

    for (int n = 3; n <= 9; ++n)
        for (int j = 1; j < n; ++j) add(NccFamily::SlR, {n, j});
    for (int n = 3; n <= 8; ++n) add(NccFamily::SoNN, {n});
    for (int p = 2; p <= 7; ++p)
        for (int q = p; p + q <= 15; ++q) add(NccFamily::SoPQ, {p, q});
    add(NccFamily::E6R, {});
    add(NccFamily::E7R, {});

    for (int n = 2; n <= 9; ++n)
        for (int j = 1; j < n; ++j) add(NccFamily::SlH, {n, j});
    for (int n = 2; n <= 8; ++n) add(NccFamily::UnnH, {n});
    for (int d = 3; d <= 15; ++d) add(NccFamily::So1d, {d});
    add(NccFamily::E6_26, {});
    return t;
}

int r0(const NccEntry& e) { return 2 * e.s - e.r; }
int r1(const NccEntry& e) { return e.r - e.s; }

TypeClass classify_type(const NccEntry& e)
{
    auto fail = [&](const std::string& why) {
        throw std::runtime_error("data integrity: " + e.g_name + ": " + why);
    };
    if (r0(e) < 0 || r1(e) < 0) fail("rank invariants r0, r1 must be nonnegative");
    if (e.is_complex && e.is_cayley) fail("both complex and Cayley");
    TypeClass t;
    if (e.is_complex) {
        if (e.r != 2 * e.s) fail("complex type needs r = 2s");
        t = TypeClass::Complex;
    } else if (e.is_cayley) {
        if (e.r != e.s) fail("Cayley type needs r = s");
        if (e.restricted_kind.family != Family::C) fail("Cayley type needs restricted type C");
        t = TypeClass::Cayley;
    } else if (e.r == e.s) {
        t = TypeClass::Split;
    } else if (e.r == 2 * e.s) {
        t = TypeClass::NonSplit;
    } else {
        fail("ranks fit no type class");
    }
    if (t != e.type_class) fail("stored class " + to_string(e.type_class) + " vs recomputed " + to_string(t));
    return t;
}

int gc_real_rank(const NccEntry& e)
{
    auto h = hermitian_entry(e.gc.family, e.gc.params);
    return h.restricted_kind.rank * (e.gc.doubled ? 2 : 1);
}

bool gc_tube_type(const NccEntry& e)
{
    return hermitian_entry(e.gc.family, e.gc.params).tube_type;
}

bool is_modular(const NccEntry& e)
{
    return gc_tube_type(e);
}

bool causal_euler_symmetric(const NccEntry& e)
{
    auto rs = build(e.restricted_kind);
    return is_symmetric(rs, euler_element(rs, e.euler_indices.front()));
}

bool minimal_space_causal(const NccEntry& e)
{
    return !causal_euler_symmetric(e);
}

Pi0Result pi0(const NccEntry& e)
{
    classify_type(e);
    switch (e.type_class) {
    case TypeClass::Complex: return {1, "complex type: connected"};
    case TypeClass::NonSplit: return {1, "non-split type: connected"};
    default: break;
    }
    if (e.r % 2) return {1, to_string(e.type_class) + " type, r odd: connected"};

    const auto& p = e.params;
    switch (e.family) {
    case NccFamily::So2d:
        if (p[0] % 2) return {2, "Cayley, r = 2, so(2,n) with n odd"};
        return {1, "Cayley, r = 2, so(2,n) with n even: connected (proof)"};
    case NccFamily::Sp2rR:
        if (e.r >= 4) return {2, "Cayley, sp(2r,R) with r >= 4 even"};
        return {1, "Cayley, sp(4,R): r = 2 is outside the r >= 4 case"};
    case NccFamily::SuRR: return {1, "Cayley, su(r,r), r even: connected (proof; not in the listed cases)"};
    case NccFamily::SoStar4r: return {1, "Cayley, so*(4r), r even: connected (proof; not in the listed cases)"};
    case NccFamily::SlR:
        if (2 * p[1] == p[0]) return {2, "split, sl(2n,R) with h = h_n and n even"};
        return {1, "split, sl(n,R) with h_j, j != n/2: not in the listed cases"};
    case NccFamily::SoPQ:
        if ((p[0] + p[1]) % 2) return {2, "split, so(p,q) with p,q > 2 and p+q odd"};
        return {1, "split, so(p,q) with p+q even: not in the listed cases"};
    case NccFamily::SoNN:
        if (p[0] % 2 == 0) return {2, "split, so(2n,2n)"};
        return {1, "split, so(n,n) with n odd: not in the listed cases"};
    case NccFamily::E6R: return {1, "split, e6(R), r = 2: absent from the listed cases, connected (proof-derived)"};
    default: break;
    }
    throw std::invalid_argument("pi0: unsupported entry " + e.g_name);
}

long cayley_center_order(int r)
{
    if (r < 1) throw std::domain_error("cayley_center_order needs r >= 1");
    return 1L << (r - 1);
}

}  // namespace ncc
