#include "report.hpp"

#include <sstream>

namespace twostep::cli {

using nlohmann::json;

json empty_machine_report(const std::string& command, const std::string& subject) {
    json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["subject"] = subject;
    doc["signature"] = nullptr;
    doc["fingerprint"] = nullptr;
    doc["verdict"] = nullptr;
    doc["matches"] = json::array();
    doc["caveats"] = json::array();
    doc["notes"] = json::array();
    return doc;
}

json fingerprint_json(const Fingerprint& f) {
    json doc;
    doc["q"] = f.q;
    doc["p"] = f.p;
    doc["n"] = f.q + f.p;
    doc["related_sequence"] = f.related;
    doc["generator_relation_sequence"] = f.generator_relation;
    doc["center_related_sequence"] = f.center_related ? json(*f.center_related) : json(nullptr);
    doc["weighted_center_related_sequence"] =
        f.weighted_center_related ? json(*f.weighted_center_related) : json(nullptr);
    doc["girth"] = f.girth ? json(*f.girth) : json(nullptr);
    doc["three_uniform"] = f.uniform3;
    return doc;
}

json witness_json(const BlockDiagonalWitness& w) {
    json doc;
    doc["s_subset"] = w.s_subset;
    doc["t_subset"] = w.t_subset;
    auto matrix_json = [](const RatMatrix& m) {
        json rows = json::array();
        for (int r = 0; r < m.rows(); ++r) {
            json row = json::array();
            for (int c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
            rows.push_back(std::move(row));
        }
        return rows;
    };
    doc["generator_change"] = matrix_json(w.change.S);
    doc["center_change"] = matrix_json(w.change.C);
    return doc;
}

json pencil_json(const PencilReport& r) {
    json doc;
    doc["generic_rank"] = r.generic_rank;
    doc["min_pair_sum"] = r.min_pair_sum;
    json drops = json::array();
    for (const PencilDropPoint& d : r.drop_points) {
        json e;
        e["modulus"] = d.modulus ? json(d.modulus->str()) : json("infinity");
        e["rank"] = d.rank;
        e["multiplicity"] = d.multiplicity;
        e["modulus_irreducible"] = d.modulus_irreducible;
        drops.push_back(std::move(e));
    }
    doc["drop_points"] = std::move(drops);
    return doc;
}

json verdict_json(const DecomposabilityVerdict& v) {
    json doc;
    switch (v.status) {
        case Decomposability::Decomposable: doc["status"] = "decomposable"; break;
        case Decomposability::Indecomposable: doc["status"] = "indecomposable"; break;
        case Decomposability::Inconclusive: doc["status"] = "inconclusive"; break;
    }
    doc["witness"] = v.witness ? witness_json(*v.witness) : json(nullptr);
    doc["pencil"] = v.pencil ? pencil_json(*v.pencil) : json(nullptr);
    if (v.marginal) {
        doc["marginal_rank"] = v.marginal->marginal_rank;
        doc["q"] = v.marginal->q;
    } else {
        doc["marginal_rank"] = nullptr;
        doc["q"] = nullptr;
    }
    doc["notes"] = v.notes;
    return doc;
}

json matches_json(const std::vector<CatalogMatch>& matches) {
    json arr = json::array();
    for (const CatalogMatch& m : matches) {
        json e;
        e["id"] = m.entry->id;
        e["t_name"] = m.entry->t_name;
        e["strength"] = m.strength == MatchStrength::Exact ? "exact" : "partial";
        arr.push_back(std::move(e));
    }
    return arr;
}

std::string sequence_text(const std::vector<int>& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

std::string fingerprint_text(const Fingerprint& f) {
    std::ostringstream os;
    os << "q = " << f.q << ", p = " << f.p << ", n = " << f.q + f.p << "\n";
    os << "related sequence:                 " << sequence_text(f.related) << "\n";
    os << "generator relation sequence:      " << sequence_text(f.generator_relation) << "\n";
    if (f.center_related) {
        os << "center related sequence:          " << sequence_text(*f.center_related) << "\n";
        os << "weighted center related sequence: " << sequence_text(*f.weighted_center_related) << "\n";
    } else {
        os << "center related sequence:          withheld (not 3-uniform)\n";
        os << "weighted center related sequence: withheld (not 3-uniform)\n";
    }
    os << "girth:                            " << (f.girth ? std::to_string(*f.girth) : "none (acyclic)") << "\n";
    return os.str();
}

std::vector<std::string> standard_caveats(const Fingerprint& f) {
    std::vector<std::string> caveats;
    caveats.push_back(
        "hypergraph connectivity and the invariant sequences are computed on the basis as given; "
        "connectivity is basis-dependent");
    caveats.push_back(
        "sequence invariance presumes an H-msg basis with all root spaces of dimension one "
        "(Leger-Luks)");
    if (!f.uniform3) {
        caveats.push_back("not 3-uniform; center sequences withheld");
    }
    caveats.push_back("catalog rank values are literature metadata, never computed here");
    return caveats;
}

}  // namespace twostep::cli
