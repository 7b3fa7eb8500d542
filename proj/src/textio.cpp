#include "quiverdt/textio.hpp"

#include "quiverdt/error.hpp"

#include <json.hpp>

#include <cstddef>
#include <utility>
#include <vector>

namespace quiverdt {

namespace {

// shared renderer for sums of c * var^k, highest power first
std::string term_sum_text(const std::vector<std::pair<mpq_class, int>>& terms,
                          const std::string& var) {
    if (terms.empty()) return "0";
    std::string out;
    for (size_t i = 0; i < terms.size(); ++i) {
        const mpq_class& c = terms[i].first;
        int k = terms[i].second;
        bool negative = c < 0;
        mpq_class mag = negative ? mpq_class(-c) : c;
        if (i == 0)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        if (k == 0) {
            out += mag.get_str();
        } else {
            if (mag != 1) out += mag.get_str() + "*";
            out += var;
            if (k != 1) out += "^" + std::to_string(k);
        }
    }
    return out;
}

std::vector<std::pair<mpq_class, int>> poly_terms(const Poly& p) {
    std::vector<std::pair<mpq_class, int>> terms;
    for (int k = p.degree(); k >= 0; --k)
        if (p.coeff(k) != 0) terms.push_back({p.coeff(k), k});
    return terms;
}

}  // namespace

std::string poly_text(const Poly& p) { return term_sum_text(poly_terms(p), "t"); }

std::string ratfun_text(const RatFun& f) {
    if (f.is_polynomial()) return poly_text(f.as_polynomial());
    return poly_text(f.num()) + " / (" + poly_text(f.den()) + ")";
}

std::string cyclo_text(const Cyclo& c) {
    if (c.is_rational()) return c.to_rational().get_str();
    std::vector<std::pair<mpq_class, int>> terms;
    const std::vector<mpq_class>& coords = c.coords();
    for (int k = static_cast<int>(coords.size()) - 1; k >= 0; --k)
        if (coords[static_cast<size_t>(k)] != 0)
            terms.push_back({coords[static_cast<size_t>(k)], k});
    return term_sum_text(terms, "z" + std::to_string(c.modulus()));
}

std::string partition_text(const Partition& p) {
    if (p.length() == 0) return "0";
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += "+";
        out += std::to_string(p.parts()[static_cast<size_t>(i)]);
    }
    return out;
}

std::string multipartition_text(const MultiPartition& m) {
    std::string out = "[";
    for (size_t i = 0; i < m.arity(); ++i) {
        if (i) out += "|";
        out += partition_text(m.component(i));
    }
    return out + "]";
}

std::string type_text(const TypeOmega& w) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, mult] : w.support()) {
        if (!first) out += ", ";
        first = false;
        out += "(d=" + std::to_string(key.first) + "," + multipartition_text(key.second) +
               "):" + std::to_string(mult);
    }
    return out + "}";
}

DimVector parse_dims(const std::string& s) {
    DimVector v;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t comma = s.find(',', pos);
        std::string item = s.substr(pos, comma == std::string::npos ? comma : comma - pos);
        size_t a = item.find_first_not_of(" \t");
        size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos)
            throw input_error("cannot parse dimension vector '" + s + "': empty entry");
        item = item.substr(a, b - a + 1);
        if (item.find_first_not_of("0123456789") != std::string::npos || item.size() > 6)
            throw input_error("cannot parse dimension vector '" + s + "': bad entry '" +
                              item + "'");
        v.push_back(std::stoi(item));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (v.empty()) throw input_error("empty dimension vector");
    return v;
}

Quiver quiver_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("quiver file is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arrows"))
        throw input_error("quiver JSON needs an object with 'vertices' and 'arrows'");
    if (!j["vertices"].is_number_integer() || j["vertices"].get<long>() < 0 ||
        j["vertices"].get<long>() > 64)
        throw input_error("'vertices' must be an integer between 0 and 64");
    int n = j["vertices"].get<int>();
    if (!j["arrows"].is_array()) throw input_error("'arrows' must be an array of pairs");
    std::vector<std::pair<int, int>> arrows;
    for (const auto& a : j["arrows"]) {
        if (!a.is_array() || a.size() != 2 || !a[0].is_number_integer() ||
            !a[1].is_number_integer())
            throw input_error("each arrow must be a pair [tail, head] of integers");
        long i = a[0].get<long>(), k = a[1].get<long>();
        if (i < 1 || i > n || k < 1 || k > n)
            throw input_error("arrow [" + std::to_string(i) + ", " + std::to_string(k) +
                              "] leaves the vertex range 1.." + std::to_string(n));
        arrows.push_back({static_cast<int>(i - 1), static_cast<int>(k - 1)});
    }
    return Quiver(n, arrows);
}

std::string quiver_to_json_text(const Quiver& g) {
    nlohmann::json j;
    j["vertices"] = g.vertices();
    j["arrows"] = nlohmann::json::array();
    for (const auto& [i, k] : g.arrows()) j["arrows"].push_back({i + 1, k + 1});
    return j.dump(2) + "\n";
}

}  // namespace quiverdt
