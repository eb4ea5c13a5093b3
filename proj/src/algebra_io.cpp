#include "newstein/algebra_io.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace newstein {

using Json = nlohmann::ordered_json;

std::string algebra_to_json(const LieAlgebra& alg) {
    Json doc;
    doc["name"] = alg.name();
    doc["dimension"] = alg.dimension();
    Json labels = Json::array();
    for (const auto& l : alg.labels()) labels.push_back(l.name());
    doc["labels"] = labels;
    Json constants = Json::array();
    for (const auto& [key, v] : alg.constants()) {
        Json entry;
        entry["i"] = key.first;
        entry["j"] = key.second;
        Json terms = Json::array();
        for (const auto& [k, x] : v) {
            Json t;
            t["k"] = k;
            t["coeff"] = to_string(x);
            terms.push_back(t);
        }
        entry["terms"] = terms;
        constants.push_back(entry);
    }
    doc["constants"] = constants;
    return doc.dump(1) + "\n";
}

LieAlgebra algebra_from_json(const std::string& text) {
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument(std::string("algebra file: ") + e.what());
    }
    try {
        const int n = doc.at("dimension").get<int>();
        std::vector<BasisLabel> labels;
        for (const auto& l : doc.at("labels")) labels.push_back(BasisLabel::parse(l.get<std::string>()));
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("algebra file: label count differs from dimension");
        StructureConstants sc;
        for (const auto& c : doc.at("constants")) {
            const int i = c.at("i").get<int>();
            const int j = c.at("j").get<int>();
            if (sc.count({i, j})) throw std::invalid_argument("algebra file: repeated constant key");
            SparseVector v;
            for (const auto& t : c.at("terms"))
                v.emplace_back(t.at("k").get<int>(), parse_scalar(t.at("coeff").get<std::string>()));
            sc[{i, j}] = std::move(v);
        }
        return LieAlgebra(doc.at("name").get<std::string>(), std::move(labels), std::move(sc));
    } catch (const Json::exception& e) {
        throw std::invalid_argument(std::string("algebra file: ") + e.what());
    }
}

void write_algebra_file(const std::string& path, const LieAlgebra& alg) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << algebra_to_json(alg);
    if (!out) throw std::runtime_error("write failed: " + path);
}

LieAlgebra read_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return algebra_from_json(ss.str());
}

}  // namespace newstein
