#include "anyon/model_io.h"

#include <fstream>
#include <set>
#include <sstream>

#include "anyon/error.h"
#include "json.hpp"

namespace anyon {

namespace {

using nlohmann::json;

[[noreturn]] void schema_error(const std::string &field, const std::string &why) {
    fail(ErrorKind::parse_error, "field '" + field + "': " + why);
}

std::size_t label_at(const AnyonModel &m, const json &entry, std::size_t k, const std::string &field) {
    const json &v = entry[k];
    std::string where = field + "[" + std::to_string(k) + "]";
    if (!v.is_string()) {
        schema_error(where, "expected a label string");
    }
    auto idx = m.find(v.get<std::string>());
    if (!idx) {
        schema_error(where, "undeclared label '" + v.get<std::string>() + "'");
    }
    return *idx;
}

double number_at(const json &entry, std::size_t k, const std::string &field) {
    const json &v = entry[k];
    if (!v.is_number()) {
        schema_error(field + "[" + std::to_string(k) + "]", "expected a number");
    }
    return v.get<double>();
}

const json &array_member(const json &doc, const char *name, std::size_t arity) {
    const json &arr = doc.at(name);
    if (!arr.is_array()) {
        schema_error(name, "expected an array");
    }
    for (std::size_t i = 0; i < arr.size(); i++) {
        if (!arr[i].is_array() || arr[i].size() != arity) {
            schema_error(std::string(name) + "[" + std::to_string(i) + "]",
                         "expected an array of " + std::to_string(arity) + " elements");
        }
    }
    return arr;
}

}  // namespace

AnyonModel parse_model(const std::string &text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error &e) {
        fail(ErrorKind::parse_error, e.what());
    }
    if (!doc.is_object()) {
        schema_error("<root>", "expected an object");
    }
    static const std::set<std::string> known{"labels", "dual", "fusion", "r", "f"};
    for (const auto &[key, value] : doc.items()) {
        if (!known.contains(key)) {
            schema_error(key, "unknown field");
        }
    }
    for (const char *required : {"labels", "dual", "fusion", "r"}) {
        if (!doc.contains(required)) {
            schema_error(required, "missing");
        }
    }

    const json &labels = doc["labels"];
    if (!labels.is_array() || labels.empty()) {
        schema_error("labels", "expected a non-empty array of strings");
    }
    std::vector<std::string> names;
    for (std::size_t i = 0; i < labels.size(); i++) {
        if (!labels[i].is_string()) {
            schema_error("labels[" + std::to_string(i) + "]", "expected a string");
        }
        names.push_back(labels[i].get<std::string>());
    }
    AnyonModel m = AnyonModel::with_labels(std::move(names));

    const json &dual = doc["dual"];
    if (!dual.is_object()) {
        schema_error("dual", "expected an object");
    }
    for (const auto &[key, value] : dual.items()) {
        auto a = m.find(key);
        if (!a) {
            schema_error("dual." + key, "undeclared label");
        }
        if (!value.is_string() || !m.find(value.get<std::string>())) {
            schema_error("dual." + key, "expected a declared label");
        }
        m.dual[*a] = m.find(value.get<std::string>());
    }

    const json &fusion = array_member(doc, "fusion", 4);
    for (std::size_t i = 0; i < fusion.size(); i++) {
        std::string field = "fusion[" + std::to_string(i) + "]";
        const json &e = fusion[i];
        std::size_t a = label_at(m, e, 0, field);
        std::size_t b = label_at(m, e, 1, field);
        std::size_t c = label_at(m, e, 2, field);
        if (!e[3].is_number_integer() || e[3].get<long>() < 0) {
            schema_error(field + "[3]", "expected a non-negative integer");
        }
        m.set_N(a, b, c, e[3].get<int>());
    }

    const json &r = array_member(doc, "r", 5);
    for (std::size_t i = 0; i < r.size(); i++) {
        std::string field = "r[" + std::to_string(i) + "]";
        const json &e = r[i];
        RKey key{label_at(m, e, 0, field), label_at(m, e, 1, field), label_at(m, e, 2, field)};
        m.r_data[key] = Complex(number_at(e, 3, field), number_at(e, 4, field));
    }

    if (doc.contains("f")) {
        const json &f = array_member(doc, "f", 6);
        for (std::size_t i = 0; i < f.size(); i++) {
            std::string field = "f[" + std::to_string(i) + "]";
            const json &e = f[i];
            FKey key{label_at(m, e, 0, field), label_at(m, e, 1, field), label_at(m, e, 2, field),
                     label_at(m, e, 3, field)};
            m.f_data[key] = Complex(number_at(e, 4, field), number_at(e, 5, field));
        }
    }
    m.fill_trivial_f();
    return m;
}

AnyonModel load_model_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        fail(ErrorKind::parse_error, "cannot open model file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_model(buf.str());
}

std::string model_to_json(const AnyonModel &m) {
    json doc;
    doc["labels"] = m.labels;
    json dual = json::object();
    for (std::size_t a = 0; a < m.size(); a++) {
        if (a < m.dual.size() && m.dual[a]) {
            dual[m.labels[a]] = m.labels[*m.dual[a]];
        }
    }
    doc["dual"] = dual;
    json fusion = json::array();
    for (std::size_t a = 0; a < m.size(); a++) {
        for (std::size_t b = 0; b < m.size(); b++) {
            for (std::size_t c = 0; c < m.size(); c++) {
                if (m.N(a, b, c) != 0) {
                    fusion.push_back({m.labels[a], m.labels[b], m.labels[c], m.N(a, b, c)});
                }
            }
        }
    }
    doc["fusion"] = fusion;
    json r = json::array();
    for (const auto &[k, v] : m.r_data) {
        r.push_back({m.labels[k.a], m.labels[k.b], m.labels[k.c], v.real(), v.imag()});
    }
    doc["r"] = r;
    json f = json::array();
    for (const auto &[k, v] : m.f_data) {
        f.push_back({m.labels[k.a], m.labels[k.b], m.labels[k.c], m.labels[k.d], v.real(), v.imag()});
    }
    doc["f"] = f;
    return doc.dump(2);
}

}  // namespace anyon
