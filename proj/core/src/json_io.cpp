#include "amalg/json_io.hpp"

#include <algorithm>

#include "amalg/errors.hpp"

namespace amalg::io {

namespace {

std::vector<LabelPair> pairsFromJson(const json& j, const std::string& key) {
    std::vector<LabelPair> pairs;
    if (!j.contains(key)) return pairs;
    if (!j[key].is_array()) throw InvalidInput("\"" + key + "\" must be an array of pairs");
    for (const auto& p : j[key]) {
        if (!p.is_array() || p.size() != 2 || !p[0].is_string() || !p[1].is_string())
            throw InvalidInput("\"" + key + "\" entries must be [label, label]");
        pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
    return pairs;
}

json pairsToJson(const std::vector<LabelPair>& pairs) {
    json arr = json::array();
    for (const auto& [x, y] : pairs) arr.push_back(json::array({x, y}));
    return arr;
}

std::map<std::string, std::string> labelMapFromJson(const json& j, const std::string& key) {
    std::map<std::string, std::string> m;
    if (!j.contains(key)) return m;
    if (!j[key].is_object()) throw InvalidInput("\"" + key + "\" must be an object");
    for (auto it = j[key].begin(); it != j[key].end(); ++it) {
        if (!it.value().is_string()) throw InvalidInput("\"" + key + "\" values must be labels");
        m.emplace(it.key(), it.value().get<std::string>());
    }
    return m;
}

}  // namespace

json toJson(const Structure& s) {
    json j;
    j["universe"] = s.universe();
    j["leq"] = pairsToJson(s.leq().pairs());
    j["ll"] = pairsToJson(s.ll().pairs());
    json ops = json::object();
    for (const auto& name : s.opNames()) {
        json table = json::object();
        for (const auto& x : s.universe()) table[x] = s.applyOp(name, x);
        ops[name] = table;
    }
    j["ops"] = ops;
    return j;
}

Structure structureFromJson(const json& j) {
    if (!j.is_object()) throw InvalidInput("structure must be a JSON object");
    if (!j.contains("universe") || !j["universe"].is_array())
        throw InvalidInput("structure needs a \"universe\" array");
    std::vector<std::string> universe;
    for (const auto& l : j["universe"]) {
        if (!l.is_string()) throw InvalidInput("universe entries must be strings");
        universe.push_back(l.get<std::string>());
    }
    std::map<std::string, OpTable> ops;
    if (j.contains("ops")) {
        if (!j["ops"].is_object()) throw InvalidInput("\"ops\" must be an object");
        for (auto it = j["ops"].begin(); it != j["ops"].end(); ++it) {
            OpTable table;
            if (!it.value().is_object())
                throw InvalidInput("op \"" + it.key() + "\" must map labels to labels");
            for (auto v = it.value().begin(); v != it.value().end(); ++v) {
                if (!v.value().is_string())
                    throw InvalidInput("op \"" + it.key() + "\" values must be labels");
                table.emplace(v.key(), v.value().get<std::string>());
            }
            ops.emplace(it.key(), std::move(table));
        }
    }
    return Structure(std::move(universe), pairsFromJson(j, "leq"), pairsFromJson(j, "ll"), ops);
}

json toJson(const Theory& t) {
    json j;
    auto props = [](const RelProps& p) {
        json arr = json::array();
        if (p.reflexive) arr.push_back(2);
        if (p.antireflexive) arr.push_back(4);
        if (p.antisymmetric) arr.push_back(5);
        return arr;
    };
    j["P"] = props(t.P);
    j["Q"] = props(t.Q);
    json n = json::array();
    if (t.finer) n.push_back("F");
    if (t.coarser) n.push_back("C");
    if (t.a1) n.push_back("A1");
    if (t.a2) n.push_back("A2");
    j["N"] = n;
    json extras = json::array();
    if (t.urquhart) extras.push_back("U");
    if (t.unionOfChains) extras.push_back("unionOfChains");
    if (t.maxAntichain > 0) extras.push_back(json{{"maxAntichain", t.maxAntichain}});
    j["extras"] = extras;
    json opSig = json::object();
    for (const auto& [name, sig] : t.opSig) {
        json arr = json::array();
        if (sig.leq) arr.push_back("LEQ");
        if (sig.ll) arr.push_back("LL");
        opSig[name] = arr;
    }
    j["opSig"] = opSig;
    if (!t.transitive) j["transitive"] = false;
    return j;
}

Theory theoryFromJson(const json& j) {
    if (!j.is_object()) throw InvalidInput("theory must be a JSON object");
    Theory t;
    auto props = [&](const std::string& key) {
        RelProps p;
        if (!j.contains(key)) return p;
        if (!j[key].is_array()) throw InvalidInput("\"" + key + "\" must be an array");
        for (const auto& e : j[key]) {
            if (!e.is_number_integer()) throw InvalidInput("\"" + key + "\" entries must be 2, 4 or 5");
            switch (e.get<int>()) {
                case 2: p.reflexive = true; break;
                case 4: p.antireflexive = true; break;
                case 5: p.antisymmetric = true; break;
                default: throw InvalidInput("\"" + key + "\" entries must be 2, 4 or 5");
            }
        }
        if (p.reflexive && p.antireflexive)
            throw InvalidInput("\"" + key + "\" cannot demand both reflexive and antireflexive");
        return p;
    };
    t.P = props("P");
    t.Q = props("Q");
    if (j.contains("N")) {
        if (!j["N"].is_array()) throw InvalidInput("\"N\" must be an array");
        for (const auto& e : j["N"]) {
            std::string s = e.is_string() ? e.get<std::string>() : "";
            if (s == "F") t.finer = true;
            else if (s == "C") t.coarser = true;
            else if (s == "A1") t.a1 = true;
            else if (s == "A2") t.a2 = true;
            else throw InvalidInput("unknown N token");
        }
    }
    if (j.contains("extras")) {
        if (!j["extras"].is_array()) throw InvalidInput("\"extras\" must be an array");
        for (const auto& e : j["extras"]) {
            if (e.is_string()) {
                std::string s = e.get<std::string>();
                if (s == "U") t.urquhart = true;
                else if (s == "unionOfChains") t.unionOfChains = true;
                else throw InvalidInput("unknown extras token \"" + s + "\"");
            } else if (e.is_object() && e.contains("maxAntichain") &&
                       e["maxAntichain"].is_number_integer()) {
                int k = e["maxAntichain"].get<int>();
                if (k <= 0) throw InvalidInput("maxAntichain must be positive");
                t.maxAntichain = k;
            } else {
                throw InvalidInput("unknown extras entry");
            }
        }
    }
    if (j.contains("opSig")) {
        if (!j["opSig"].is_object()) throw InvalidInput("\"opSig\" must be an object");
        for (auto it = j["opSig"].begin(); it != j["opSig"].end(); ++it) {
            OpSig sig;
            if (!it.value().is_array()) throw InvalidInput("opSig entries must be arrays");
            for (const auto& e : it.value()) {
                std::string s = e.is_string() ? e.get<std::string>() : "";
                if (s == "LEQ") sig.leq = true;
                else if (s == "LL") sig.ll = true;
                else throw InvalidInput("opSig entries must be \"LEQ\" or \"LL\"");
            }
            if (!sig.leq && !sig.ll)
                throw InvalidInput("opSig for \"" + it.key() + "\" must not be empty");
            t.opSig.emplace(it.key(), sig);
        }
    }
    if (j.contains("transitive")) {
        if (!j["transitive"].is_boolean()) throw InvalidInput("\"transitive\" must be a boolean");
        t.transitive = j["transitive"].get<bool>();
    }
    return t;
}

json toJson(const BinRel& r) {
    json j;
    j["universe"] = r.universe();
    j["pairs"] = pairsToJson(r.pairs());
    return j;
}

BinRel binRelFromJson(const json& j) {
    if (!j.is_object() || !j.contains("universe") || !j["universe"].is_array())
        throw InvalidInput("relation needs a \"universe\" array");
    std::vector<std::string> universe;
    for (const auto& l : j["universe"]) universe.push_back(l.get<std::string>());
    return BinRel(std::move(universe), pairsFromJson(j, "pairs"));
}

json toJson(const VFormation& v) {
    json j;
    j["A"] = toJson(v.A);
    j["B"] = toJson(v.B);
    j["C"] = toJson(v.C);
    return j;
}

VFormation vformationFromJson(const json& j) {
    if (!j.is_object() || !j.contains("A") || !j.contains("B") || !j.contains("C"))
        throw InvalidInput("V-formation needs \"A\", \"B\" and \"C\"");
    return VFormation{structureFromJson(j["A"]), structureFromJson(j["B"]),
                      structureFromJson(j["C"])};
}

json toJson(const construct::Amalgam& w) {
    json j = toJson(w.D);
    j["iota"] = w.iota;
    j["kappa"] = w.kappa;
    return j;
}

construct::Amalgam amalgamFromJson(const json& j) {
    construct::Amalgam w;
    w.D = structureFromJson(j);
    w.iota = labelMapFromJson(j, "iota");
    w.kappa = labelMapFromJson(j, "kappa");
    if (w.iota.empty() || w.kappa.empty())
        throw InvalidInput("amalgam needs \"iota\" and \"kappa\" label maps");
    return w;
}

json toJson(const Report& r) {
    json j;
    j["ok"] = r.ok();
    json vs = json::array();
    for (const auto& v : r.violations) {
        json e;
        e["axiom"] = v.axiom;
        e["witness"] = v.witness;
        vs.push_back(e);
    }
    j["violations"] = vs;
    return j;
}

json toJson(const oracle::SearchResult& r) {
    json j;
    j["outcome"] = r.isWitness() ? "witness" : "exhausted";
    json stats;
    stats["nodesVisited"] = r.stats.nodesVisited;
    stats["bound"] = {{"allowIdentification", r.stats.bound.allowIdentification},
                      {"extraElements", r.stats.bound.extraElements}};
    if (r.stats.bound.timeBudgetSeconds > 0)
        stats["bound"]["timeBudgetSeconds"] = r.stats.bound.timeBudgetSeconds;
    j["statistics"] = stats;
    if (r.isWitness()) j["amalgam"] = toJson(*r.amalgam);
    return j;
}

json toJson(const fixtures::FixtureOutcome& o) {
    json j;
    j["name"] = o.name;
    auto name = [](fixtures::Expected e) {
        return e == fixtures::Expected::WITNESS ? "WITNESS" : "EXHAUSTED";
    };
    j["expected"] = name(o.expected);
    j["actual"] = name(o.actual);
    j["match"] = o.match;
    j["result"] = toJson(o.result);
    return j;
}

std::string modeName(construct::AmalgamMode m) { return construct::to_string(m); }

construct::AmalgamMode modeFromName(const std::string& name) {
    if (name == "ap") return construct::AmalgamMode::AP;
    if (name == "sap") return construct::AmalgamMode::SAP;
    if (name == "super") return construct::AmalgamMode::SUPER;
    throw InvalidInput("unknown level \"" + name + "\" (want ap, sap or super)");
}

}  // namespace amalg::io
