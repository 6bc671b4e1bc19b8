#pragma once

#include "ncc/catalog.hpp"
#include "ncc/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace ncc {

using Json = nlohmann::json;

Json to_json(const Rational& q);  // "num/den"
Json to_json(const RVector& v);   // array of "num/den"

Json to_json(const HermitianEntry& e, bool symmetric_column = false);
Json to_json(const NccEntry& e);

// {"table": n, "rows": [...]}; n in {1, 2, 3}.
Json table_json(int n);
std::string table_markdown(int n);

// Canonical text form: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

// | a | b |\n|---|---|\n rows
std::string markdown_table(const std::vector<std::string>& header,
                           const std::vector<std::vector<std::string>>& rows);

std::string euler_list(const std::vector<int>& idx);  // "h_1, h_6"

}  // namespace ncc
