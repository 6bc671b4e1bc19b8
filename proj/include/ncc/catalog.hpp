#pragma once

#include "ncc/rootsys.hpp"

#include <string>
#include <vector>

namespace ncc {

// Simple hermitian Lie algebras.
enum class HermFamily { SU, SP, SO2, SOSTAR, E6_14, E7_25 };

struct HermitianEntry {
    HermFamily family = HermFamily::SU;
    std::vector<int> params;
    std::string h_name;
    RootSystemKind restricted_kind;    // Sigma(h, a_h)
    std::string complexification_name;
    RootSystemKind complexified_kind;  // Sigma(g, a), g = h_C
    std::vector<int> euler_indices;
    bool tube_type = false;
};

// su: {p, q} (unordered, p+q >= 3); sp: {n >= 2}; so2: {n >= 3}; sostar: {n >= 3}; e6/e7: {}.
// Throws std::invalid_argument for parameters outside the family.
HermitianEntry hermitian_entry(HermFamily f, const std::vector<int>& params);

enum class TypeClass { Complex, Cayley, Split, NonSplit };
std::string to_string(TypeClass t);

enum class NccFamily {
    SlC, SpC, SoC, So2nC, E6C, E7C,               // complex
    SuRR, Sp2rR, So2d, SoStar4r, E7_25,           // Cayley
    SlR, SoNN, SoPQ, E6R, E7R,                    // split
    SlH, UnnH, So1d, E6_26,                       // non-split
};

// The c-dual; `doubled` for h + h in the complex block.
struct GcRef {
    HermFamily family = HermFamily::SU;
    std::vector<int> params;
    bool doubled = false;
};

struct NccEntry {
    NccFamily family = NccFamily::SlC;
    std::vector<int> params;
    std::string g_name;
    std::string gc_name;
    std::string h_fix_name;
    std::string g1_name;
    RootSystemKind restricted_kind;  // Sigma(g, a)
    std::vector<int> euler_indices;
    TypeClass type_class = TypeClass::Complex;
    int r = 0;
    int s = 0;
    bool is_complex = false;
    bool is_cayley = false;
    GcRef gc;
    // Table coordinates for audit: block name and 1-based row inside the block.
    std::string block;
    int row = 0;
};

// slC, slR, slH: {n, j}; soPQ: {p, q}; one parameter otherwise (none for exceptional rows).
NccEntry ncc_entry(NccFamily f, const std::vector<int>& params);

// Parses the CLI family keys ("sl_n(R)" style keys are listed in the README).
NccFamily parse_ncc_family(const std::string& key);
std::string ncc_family_key(NccFamily f);

std::vector<HermitianEntry> table1();
std::vector<HermitianEntry> table2();
std::vector<NccEntry> table3();

// Recomputes the class from (is_complex, is_cayley, r, s); throws
// std::runtime_error when the stored data disagrees.
TypeClass classify_type(const NccEntry& e);

int r0(const NccEntry& e);  // 2s - r
int r1(const NccEntry& e);  // r - s

// rank_R(g^c), from the resolved hermitian entry.
int gc_real_rank(const NccEntry& e);

bool gc_tube_type(const NccEntry& e);
bool is_modular(const NccEntry& e);
// Symmetry of the causal Euler element on Sigma(g, a).
bool causal_euler_symmetric(const NccEntry& e);
bool minimal_space_causal(const NccEntry& e);

struct Pi0Result {
    int order = 1;
    std::string reason;
};
Pi0Result pi0(const NccEntry& e);

// |Z_2^{r-1}|; throws std::domain_error for r < 1.
long cayley_center_order(int r);

// "BC_2", "E_6"
std::string kind_label(const RootSystemKind& k);

}  // namespace ncc
