#pragma once

#include "xmodcat/xmod.hpp"

#include <optional>
#include <string>
#include <vector>

namespace xmodcat {

// Parsed form of a group specification:
//   {"kind":"table","table":[[...]]}
//   {"kind":"perm","degree":k,"generators":[[...]]}
//   {"kind":"named","name":"S3"}
struct GroupSpec {
    std::string kind;
    std::vector<std::vector<int>> table;       // kind == "table"
    int degree = 0;                            // kind == "perm"
    std::vector<std::vector<int>> generators;  // kind == "perm"
    std::string name;                          // kind == "named"
};

// A crossed-module document: either a constructor form {"kind":"RG"|"DG",
// "group": <group-spec>} or explicit {"x1","x2","action","boundary"}.
struct XmodDocument {
    std::string name;
    bool constructor_form = false;
    std::string constructor_kind;  // "RG" | "DG"
    std::optional<GroupSpec> group;
    std::optional<GroupSpec> x1;
    std::optional<GroupSpec> x2;
    std::vector<std::vector<int>> action;
    std::vector<int> boundary;
};

// Structural validation only; throws ParseError with a JSON-path on schema or
// syntax violations.
XmodDocument parse_document(const std::string& text);

// Builds the groups and assembles the crossed module. Dimension/range
// mismatches of the action and boundary tables throw ParseError (RangeError
// with a path); group-law failures surface as InputError.
CrossedModule build_document(const XmodDocument& doc);

Group build_group_spec(const GroupSpec& spec, const std::string& path);

}  // namespace xmodcat
