#include "bcgrass/json_io.hpp"

#include <json.hpp>

namespace bcgrass {

namespace {

using json = nlohmann::ordered_json;

json partition_json(const Partition& la) { return json(la.parts()); }

json term_list(const std::map<Partition, Rat>& terms) {
    json arr = json::array();
    for (const auto& [la, c] : terms) {
        json t;
        t["partition"] = partition_json(la);
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    return arr;
}

}  // namespace

std::string to_json_string(const SymF& f) {
    json j;
    j["kind"] = "symf";
    j["basis"] = std::string(1, basis_letter(f.basis()));
    j["terms"] = term_list(f.terms());
    return j.dump();
}

std::string to_json_string(const BCForm& f) {
    json j;
    j["kind"] = "bcform";
    j["n"] = f.n();
    j["r"] = f.r();
    json arr = json::array();
    for (const auto& [key, c] : f.terms()) {
        json t;
        t["omega"] = key.omega;
        t["p"] = key.p;
        t["coeff"] = c.str();
        arr.push_back(std::move(t));
    }
    j["terms"] = std::move(arr);
    return j.dump();
}

std::string to_json_string(const ArakelovElem& x) {
    json j;
    j["kind"] = "arakelov";
    j["r"] = x.r();
    j["s"] = x.s();
    j["geom"] = term_list(x.geom());
    j["arch"] = term_list(x.arch());
    return j.dump();
}

std::string to_json_string(const IdentityReport& rep) {
    json j;
    j["identity"] = rep.identity;
    json params;
    for (const auto& [name, value] : rep.params) params[name] = value;
    j["params"] = std::move(params);
    j["lhs"] = rep.lhs.str();
    j["rhs"] = rep.rhs.str();
    j["holds"] = rep.holds;
    return j.dump();
}

}  // namespace bcgrass
