#include "twostep/algebra_io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "twostep/error.hpp"

namespace twostep {

using nlohmann::json;

namespace {

int require_int(const json& j, const char* field, int min_value) {
    if (!j.contains(field) || !j[field].is_number_integer())
        throw ParseError(std::string("field '") + field + "' must be an integer");
    int v = j[field].get<int>();
    if (v < min_value)
        throw ParseError(std::string("field '") + field + "' must be at least " + std::to_string(min_value));
    return v;
}

}  // namespace

AlgebraFile parse_algebra_file(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw ParseError("top level must be an object");
    if (!doc.contains("format_version") || !doc["format_version"].is_string() ||
        doc["format_version"].get<std::string>() != "1")
        throw ParseError("field 'format_version' must be the string \"1\"");
    const int q = require_int(doc, "q", 2);
    const int p = require_int(doc, "p", 1);
    if (!doc.contains("brackets") || !doc["brackets"].is_array())
        throw ParseError("field 'brackets' must be an array");

    StructureTensor t(q, p);
    std::set<std::pair<int, int>> seen;
    int record = 0;
    for (const json& b : doc["brackets"]) {
        ++record;
        std::string where = "brackets[" + std::to_string(record - 1) + "]";
        if (!b.is_object()) throw ParseError(where + " must be an object");
        int i = require_int(b, "i", 1);
        int j = require_int(b, "j", 1);
        if (i >= j) throw ParseError(where + ": requires i < j (got i=" + std::to_string(i) + ", j=" + std::to_string(j) + ")");
        if (j > q) throw ParseError(where + ": generator index " + std::to_string(j) + " exceeds q=" + std::to_string(q));
        if (!seen.insert({i, j}).second)
            throw ParseError(where + ": duplicate record for pair (" + std::to_string(i) + "," + std::to_string(j) + ")");
        if (!b.contains("coeffs") || !b["coeffs"].is_object())
            throw ParseError(where + ": field 'coeffs' must be an object");
        for (const auto& [key, value] : b["coeffs"].items()) {
            int k = 0;
            try {
                std::size_t used = 0;
                k = std::stoi(key, &used);
                if (used != key.size()) throw std::invalid_argument(key);
            } catch (const std::exception&) {
                throw ParseError(where + ": coefficient key '" + key + "' is not a center index");
            }
            if (k < 1 || k > p) throw ParseError(where + ": center index " + key + " out of range 1.." + std::to_string(p));
            if (!value.is_string())
                throw ParseError(where + ": coefficient for y" + key + " must be a rational string");
            Rational c;
            try {
                c = Rational::from_string(value.get<std::string>());
            } catch (const ParseError& e) {
                throw ParseError(where + ": " + e.what());
            }
            t.set(i, j, k, c);
        }
    }
    AlgebraFile out{validate(std::move(t)), std::nullopt, std::nullopt};
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) throw ParseError("field 'name' must be a string");
        out.name = doc["name"].get<std::string>();
    }
    if (doc.contains("notes")) {
        if (!doc["notes"].is_string()) throw ParseError("field 'notes' must be a string");
        out.notes = doc["notes"].get<std::string>();
    }
    return out;
}

AlgebraFile load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_algebra_file(buffer.str());
}

std::string serialize_algebra(const TwoStepAlgebra& alg, const std::optional<std::string>& name,
                              const std::optional<std::string>& notes) {
    json doc;
    doc["format_version"] = "1";
    doc["q"] = alg.q();
    doc["p"] = alg.p();
    if (name) doc["name"] = *name;
    if (notes) doc["notes"] = *notes;
    json brackets = json::array();
    for (int i = 1; i <= alg.q(); ++i) {
        for (int j = i + 1; j <= alg.q(); ++j) {
            json coeffs = json::object();
            for (int k = 1; k <= alg.p(); ++k) {
                const Rational& c = alg.tensor().at(i, j, k);
                if (!c.is_zero()) coeffs[std::to_string(k)] = c.str();
            }
            if (!coeffs.empty()) brackets.push_back({{"i", i}, {"j", j}, {"coeffs", coeffs}});
        }
    }
    doc["brackets"] = std::move(brackets);
    return doc.dump(2) + "\n";
}

void save_algebra_file(const std::string& path, const TwoStepAlgebra& alg, const std::optional<std::string>& name,
                       const std::optional<std::string>& notes) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << serialize_algebra(alg, name, notes);
}

std::string bracket_table(const TwoStepAlgebra& alg) {
    std::ostringstream os;
    bool first = true;
    for (int i = 1; i <= alg.q(); ++i) {
        for (int j = i + 1; j <= alg.q(); ++j) {
            bool any = false;
            std::ostringstream rhs;
            for (int k = 1; k <= alg.p(); ++k) {
                const Rational& c = alg.tensor().at(i, j, k);
                if (c.is_zero()) continue;
                if (any) rhs << (c.sign() < 0 ? " - " : " + ");
                else if (c.sign() < 0) rhs << "-";
                Rational mag = c.abs();
                if (mag != Rational(1)) rhs << mag.str() << "*";
                rhs << alg.center_label(k);
                any = true;
            }
            if (!any) continue;
            if (!first) os << ", ";
            os << "[" << alg.generator_label(i) << "," << alg.generator_label(j) << "] = " << rhs.str();
            first = false;
        }
    }
    return os.str();
}

}  // namespace twostep
