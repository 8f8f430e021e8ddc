#include "xmodcat/document.hpp"

#include "xmodcat/errors.hpp"

#include "json.hpp"

namespace xmodcat {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string& path, const std::string& message) {
    throw ParseError("SchemaError", path, message);
}

[[noreturn]] void range_error(const std::string& path, const std::string& message) {
    throw ParseError("RangeError", path, message);
}

int require_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) schema_error(path, "expected an integer");
    return j.get<int>();
}

std::vector<std::vector<int>> require_int_matrix(const json& j, const std::string& path) {
    if (!j.is_array()) schema_error(path, "expected an array of arrays");
    std::vector<std::vector<int>> rows;
    for (size_t i = 0; i < j.size(); ++i) {
        const json& row = j[i];
        std::string row_path = path + "[" + std::to_string(i) + "]";
        if (!row.is_array()) schema_error(row_path, "expected an array");
        std::vector<int> r;
        for (size_t k = 0; k < row.size(); ++k)
            r.push_back(require_int(row[k], row_path + "[" + std::to_string(k) + "]"));
        rows.push_back(std::move(r));
    }
    return rows;
}

GroupSpec parse_group_spec(const json& j, const std::string& path) {
    if (!j.is_object()) schema_error(path, "expected an object");
    if (!j.contains("kind") || !j["kind"].is_string()) schema_error(path + ".kind", "missing kind");
    GroupSpec spec;
    spec.kind = j["kind"].get<std::string>();
    if (spec.kind == "table") {
        if (!j.contains("table")) schema_error(path + ".table", "missing table");
        spec.table = require_int_matrix(j["table"], path + ".table");
    } else if (spec.kind == "perm") {
        if (!j.contains("degree")) schema_error(path + ".degree", "missing degree");
        spec.degree = require_int(j["degree"], path + ".degree");
        if (!j.contains("generators")) schema_error(path + ".generators", "missing generators");
        spec.generators = require_int_matrix(j["generators"], path + ".generators");
    } else if (spec.kind == "named") {
        if (!j.contains("name") || !j["name"].is_string())
            schema_error(path + ".name", "missing name");
        spec.name = j["name"].get<std::string>();
    } else {
        schema_error(path + ".kind", "kind must be table, perm or named");
    }
    return spec;
}

}  // namespace

XmodDocument parse_document(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& err) {
        throw ParseError("SyntaxError", "$", err.what());
    }
    if (!j.is_object()) schema_error("$", "document must be a JSON object");
    XmodDocument doc;
    if (j.contains("name")) {
        if (!j["name"].is_string()) schema_error("$.name", "name must be a string");
        doc.name = j["name"].get<std::string>();
    }
    if (j.contains("kind")) {
        doc.constructor_form = true;
        if (!j["kind"].is_string()) schema_error("$.kind", "kind must be a string");
        doc.constructor_kind = j["kind"].get<std::string>();
        if (doc.constructor_kind != "RG" && doc.constructor_kind != "DG")
            schema_error("$.kind", "constructor kind must be RG or DG");
        if (!j.contains("group")) schema_error("$.group", "constructor form needs a group");
        doc.group = parse_group_spec(j["group"], "$.group");
        return doc;
    }
    for (const char* field : {"x1", "x2", "action", "boundary"})
        if (!j.contains(field)) schema_error(std::string("$.") + field, "missing field");
    doc.x1 = parse_group_spec(j["x1"], "$.x1");
    doc.x2 = parse_group_spec(j["x2"], "$.x2");
    doc.action = require_int_matrix(j["action"], "$.action");
    if (!j["boundary"].is_array()) schema_error("$.boundary", "expected an array");
    for (size_t i = 0; i < j["boundary"].size(); ++i)
        doc.boundary.push_back(
            require_int(j["boundary"][i], "$.boundary[" + std::to_string(i) + "]"));
    return doc;
}

Group build_group_spec(const GroupSpec& spec, const std::string& path) {
    if (spec.kind == "table") return group_from_table(spec.table);
    if (spec.kind == "perm") return group_from_permutations(spec.degree, spec.generators);
    if (spec.kind == "named") return named_group(spec.name);
    schema_error(path + ".kind", "unknown group kind");
}

CrossedModule build_document(const XmodDocument& doc) {
    if (doc.constructor_form) {
        Group g = build_group_spec(*doc.group, "$.group");
        CrossedModule x = doc.constructor_kind == "RG" ? make_RG(g) : make_DG(g);
        if (!doc.name.empty()) x.name = doc.name;
        return x;
    }
    CrossedModule x;
    x.x1 = build_group_spec(*doc.x1, "$.x1");
    x.x2 = build_group_spec(*doc.x2, "$.x2");
    x.name = doc.name;

    if (static_cast<int>(doc.action.size()) != x.x2.order)
        schema_error("$.action", "action must have |X2| = " + std::to_string(x.x2.order) + " rows");
    for (size_t m = 0; m < doc.action.size(); ++m) {
        if (static_cast<int>(doc.action[m].size()) != x.x1.order)
            schema_error("$.action[" + std::to_string(m) + "]",
                         "action row must have |X1| = " + std::to_string(x.x1.order) + " entries");
        for (size_t g = 0; g < doc.action[m].size(); ++g)
            if (doc.action[m][g] < 0 || doc.action[m][g] >= x.x2.order)
                range_error("$.action[" + std::to_string(m) + "][" + std::to_string(g) + "]",
                            "action entry out of range [0, |X2|)");
    }
    if (static_cast<int>(doc.boundary.size()) != x.x2.order)
        schema_error("$.boundary", "boundary must have length |X2| = " + std::to_string(x.x2.order));
    for (size_t m = 0; m < doc.boundary.size(); ++m)
        if (doc.boundary[m] < 0 || doc.boundary[m] >= x.x1.order)
            range_error("$.boundary[" + std::to_string(m) + "]",
                        "boundary entry out of range [0, |X1|)");

    x.action.domain_size = x.x2.order;
    x.action.group_order = x.x1.order;
    x.action.act = doc.action;
    x.boundary = doc.boundary;
    return x;
}

}  // namespace xmodcat
