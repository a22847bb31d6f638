#include "cli_app.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "report.hpp"
#include "twostep/algebra_io.hpp"
#include "twostep/catalog.hpp"
#include "twostep/decompose.hpp"
#include "twostep/error.hpp"
#include "twostep/free_algebra.hpp"
#include "twostep/hypergraph.hpp"

namespace twostep::cli {

using nlohmann::json;

namespace {

void emit(const Report& report, const GlobalOptions& opt, std::ostream& out) {
    if (opt.machine) {
        out << report.machine.dump(2) << "\n";
    } else {
        out << report.text;
    }
}

int guard(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const InternalError& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const UnresolvedTie& e) {
        err << "error: " << e.what() << "\n";
        return kInternal;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const std::exception& e) {
        err << "unexpected error: " << e.what() << "\n";
        return kInternal;
    }
}

std::string subject_name(const AlgebraFile& file, const std::string& path) {
    return file.name.value_or(path);
}

std::string components_text(const TwoStepAlgebra& alg) {
    auto comps = components(build_hypergraph(alg));
    std::ostringstream os;
    for (std::size_t c = 0; c < comps.size(); ++c) {
        if (c) os << " / ";
        os << "{";
        bool first = true;
        bool saw_center = false;
        for (const HVertex& v : comps[c]) {
            if (v.center && !saw_center) {
                os << (first ? "" : "|");
                saw_center = true;
                first = true;
            }
            if (!first) os << ",";
            os << (v.center ? alg.center_label(v.index) : alg.generator_label(v.index));
            first = false;
        }
        os << "}";
    }
    return os.str();
}

json oracle_json(const OracleResult& r) {
    json doc;
    doc["witness"] = r.witness ? witness_json(*r.witness) : json(nullptr);
    doc["trials_used"] = r.trials_used;
    doc["seed"] = r.seed;
    doc["notes"] = r.notes;
    return doc;
}

}  // namespace

int cmd_validate(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        AlgebraFile file = load_algebra_file(path);
        Report report;
        report.machine = empty_machine_report("validate", subject_name(file, path));
        const TwoStepAlgebra& alg = file.algebra;
        report.machine["signature"] = {{"q", alg.q()}, {"p", alg.p()}, {"n", alg.n()}};
        std::ostringstream text;
        text << "valid: q = " << alg.q() << ", p = " << alg.p() << ", n = " << alg.n() << "\n";
        report.text = text.str();
        emit(report, opt, out);
        return kOk;
    });
}

int cmd_invariants(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        AlgebraFile file = load_algebra_file(path);
        Fingerprint f = fingerprint(file.algebra);
        Report report;
        report.machine = empty_machine_report("invariants", subject_name(file, path));
        report.machine["signature"] = {{"q", f.q}, {"p", f.p}, {"n", f.q + f.p}};
        report.machine["fingerprint"] = fingerprint_json(f);
        auto caveats = standard_caveats(f);
        for (const std::string& c : caveats) report.machine["caveats"].push_back(c);
        std::ostringstream text;
        text << "invariants of " << subject_name(file, path) << "\n" << fingerprint_text(f);
        text << "caveats:\n";
        for (const std::string& c : caveats) text << "  - " << c << "\n";
        report.text = text.str();
        emit(report, opt, out);
        return kOk;
    });
}

int cmd_decompose(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        AlgebraFile file = load_algebra_file(path);
        const TwoStepAlgebra& alg = file.algebra;
        DecomposabilityVerdict verdict = decide(alg);
        Report report;
        report.machine = empty_machine_report("decompose", subject_name(file, path));
        report.machine["signature"] = {{"q", alg.q()}, {"p", alg.p()}, {"n", alg.n()}};
        report.machine["verdict"] = verdict_json(verdict);
        std::ostringstream text;
        switch (verdict.status) {
            case Decomposability::Decomposable:
                text << "Decomposable: ";
                if (verdict.marginal) {
                    text << "marginal rank " << verdict.marginal->marginal_rank << " < q=" << alg.q();
                } else {
                    text << "hypergraph components " << components_text(alg);
                }
                break;
            case Decomposability::Indecomposable:
                text << "Indecomposable: pencil min-pair-sum " << verdict.pencil->min_pair_sum
                     << " > q=" << alg.q();
                break;
            case Decomposability::Inconclusive:
                text << "Inconclusive: " << verdict.notes;
                break;
        }
        text << "\n";
        if (opt.oracle_budget) {
            OracleOptions oracle_opt;
            oracle_opt.budget = *opt.oracle_budget;
            oracle_opt.seed = opt.seed;
            OracleResult oracle = brute_force_oracle(alg, oracle_opt);
            report.machine["verdict"]["oracle"] = oracle_json(oracle);
            text << "oracle (budget " << oracle_opt.budget << ", seed " << oracle_opt.seed << "): "
                 << (oracle.witness ? "verified witness found" : "no witness found") << " (" << oracle.notes
                 << ")\n";
        }
        Fingerprint f = fingerprint(alg);
        auto caveats = standard_caveats(f);
        for (const std::string& c : caveats) report.machine["caveats"].push_back(c);
        text << "caveats:\n";
        for (const std::string& c : caveats) text << "  - " << c << "\n";
        report.text = text.str();
        emit(report, opt, out);
        return kOk;
    });
}

int cmd_dual(int q, const std::string& relations, const std::optional<std::string>& out_path, bool primal,
             const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        RelationIdeal ideal = parse_relation(q, relations);
        PairBasis basis(q);
        PresentedAlgebra result = primal ? quotient(q, ideal) : quotient(q, orthogonal_complement(ideal));
        const int dim_primal = q + basis.size() - ideal.dim();
        const int dim_dual = q + ideal.dim();
        std::string text = serialize_algebra(result.algebra);
        if (out_path) {
            std::ofstream file(*out_path);
            if (!file) throw Error("cannot write '" + *out_path + "'");
            file << text;
        }
        Report report;
        report.machine = empty_machine_report("dual", relations);
        report.machine["signature"] = {{"q", result.algebra.q()}, {"p", result.algebra.p()}, {"n", result.algebra.n()}};
        report.machine["notes"].push_back({{"dim_ideal", ideal.dim()},
                                           {"dim_primal", dim_primal},
                                           {"dim_dual", dim_dual},
                                           {"emitted", primal ? "primal" : "dual"}});
        if (opt.machine) {
            report.machine["notes"].back()["algebra"] = json::parse(text);
            out << report.machine.dump(2) << "\n";
        } else {
            err << "dim I = " << ideal.dim() << "; dim N^" << q << "/I = " << dim_primal << "; dim dual = "
                << dim_dual << "; emitting the " << (primal ? "primal quotient" : "dual (complement quotient)")
                << "\n";
            if (!out_path) out << text;
        }
        return kOk;
    });
}

int cmd_catalog_list(const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        Report report;
        report.machine = empty_machine_report("catalog", "list");
        std::ostringstream text;
        for (const CatalogEntry& e : catalog()) {
            text << e.id << "\t" << e.t_name << "\tn=" << e.algebra.n() << " p=" << e.algebra.p()
                 << " q=" << e.algebra.q() << " r=" << e.rank_r << "\n";
            report.machine["matches"].push_back({{"id", e.id},
                                                 {"t_name", e.t_name},
                                                 {"n", e.algebra.n()},
                                                 {"p", e.algebra.p()},
                                                 {"q", e.algebra.q()},
                                                 {"rank", e.rank_r}});
        }
        report.machine["notes"].push_back("rank values are literature metadata, never computed");
        text << "(" << catalog().size() << " entries; rank values are literature metadata, never computed)\n";
        report.text = text.str();
        emit(report, opt, out);
        return kOk;
    });
}

int cmd_catalog_show(const std::string& id, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        const CatalogEntry& e = catalog_entry(id);
        Fingerprint f = fingerprint(e.algebra);
        Report report;
        report.machine = empty_machine_report("catalog", id);
        report.machine["signature"] = {{"q", e.algebra.q()}, {"p", e.algebra.p()}, {"n", e.algebra.n()}};
        report.machine["fingerprint"] = fingerprint_json(f);
        report.machine["matches"].push_back({{"id", e.id},
                                             {"t_name", e.t_name},
                                             {"rank", e.rank_r},
                                             {"root_spaces_all_dim1", e.root_spaces_all_dim1},
                                             {"hmsg_related_sequence", e.hmsg_related_sequence},
                                             {"provenance", e.provenance},
                                             {"brackets", bracket_table(e.algebra)}});
        for (const std::string& c : standard_caveats(f)) report.machine["caveats"].push_back(c);
        std::ostringstream text;
        text << e.id << " = " << e.t_name << "\n";
        text << "brackets: " << bracket_table(e.algebra) << "\n";
        text << "rank " << e.rank_r << " (literature metadata, not computed)\n";
        text << "root spaces all dimension one: " << (e.root_spaces_all_dim1 ? "yes" : "no") << "\n";
        text << "H-msg related sequence: " << sequence_text(e.hmsg_related_sequence) << "\n";
        text << fingerprint_text(f);
        text << "provenance: " << e.provenance << "\n";
        report.text = text.str();
        emit(report, opt, out);
        return kOk;
    });
}

namespace {

std::string file_stem(const std::string& id) {
    std::string stem;
    for (char c : id) {
        if (std::isalnum(static_cast<unsigned char>(c))) {
            stem.push_back(c);
        } else if (c == ',' || c == '_') {
            stem.push_back('_');
        }
        // braces, carets and the rest drop out
    }
    return stem;
}

}  // namespace

int cmd_catalog_export(const std::string& dir, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        std::filesystem::create_directories(dir);
        json index = json::array();
        for (const CatalogEntry& e : catalog()) {
            std::string file = file_stem(e.id) + ".json";
            save_algebra_file((std::filesystem::path(dir) / file).string(), e.algebra, e.id, e.provenance);
            index.push_back({{"id", e.id},
                             {"t_name", e.t_name},
                             {"file", file},
                             {"n", e.algebra.n()},
                             {"p", e.algebra.p()},
                             {"q", e.algebra.q()},
                             {"rank", e.rank_r},
                             {"provenance", e.provenance}});
        }
        std::ofstream index_file(std::filesystem::path(dir) / "index.json");
        if (!index_file) throw Error("cannot write catalog index");
        index_file << index.dump(2) << "\n";
        Report report;
        report.machine = empty_machine_report("catalog", "export");
        report.machine["notes"].push_back({{"directory", dir}, {"entries", catalog().size()}});
        report.text = "exported " + std::to_string(catalog().size()) + " entries to " + dir + "\n";
        emit(report, opt, out);
        return kOk;
    });
}

int cmd_classify(const std::string& path, const GlobalOptions& opt, std::ostream& out, std::ostream& err) {
    return guard(err, [&] {
        AlgebraFile file = load_algebra_file(path);
        Fingerprint f = fingerprint(file.algebra);
        auto matches = match(file.algebra);
        Report report;
        report.machine = empty_machine_report("classify", subject_name(file, path));
        report.machine["signature"] = {{"q", f.q}, {"p", f.p}, {"n", f.q + f.p}};
        report.machine["fingerprint"] = fingerprint_json(f);
        report.machine["matches"] = matches_json(matches);
        auto caveats = standard_caveats(f);
        caveats.push_back("matches are invariant-level only, never isomorphism proofs");
        for (const std::string& c : caveats) report.machine["caveats"].push_back(c);
        std::ostringstream text;
        text << "classification of " << subject_name(file, path) << "\n" << fingerprint_text(f);
        bool covered = false;
        for (const CatalogEntry& e : catalog()) {
            if (e.algebra.q() == f.q && e.algebra.p() == f.p) covered = true;
        }
        if (!covered) {
            text << "no catalog coverage for (q,p) = (" << f.q << "," << f.p << ")\n";
            report.machine["notes"].push_back("no catalog coverage for this signature");
        } else if (matches.empty()) {
            text << "no catalog entry matches the computed invariants\n";
        } else {
            for (const CatalogMatch& m : matches) {
                text << (m.strength == MatchStrength::Exact ? "Exact" : "Partial") << " match: " << m.entry->id
                     << " / " << m.entry->t_name << "\n";
            }
        }
        text << "caveats:\n";
        for (const std::string& c : caveats) text << "  - " << c << "\n";
        report.text = text.str();
        emit(report, opt, out);
        return kOk;
    });
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact constructor, analyzer and classifier for two-step nilpotent Lie algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    GlobalOptions opt;
    app.add_flag("--machine", opt.machine, "emit the machine-readable report only");
    app.add_option("--seed", opt.seed, "seed for randomized searches");
    int budget = 0;
    auto* budget_opt = app.add_option("--oracle-budget", budget, "enable the decomposition oracle with this trial budget");

    std::string path;
    auto* validate_cmd = app.add_subcommand("validate", "check an algebra file");
    validate_cmd->add_option("file", path, "algebra file")->required();
    auto* invariants_cmd = app.add_subcommand("invariants", "print the invariant sequences");
    invariants_cmd->add_option("file", path, "algebra file")->required();
    auto* decompose_cmd = app.add_subcommand("decompose", "run the decomposability pipeline");
    decompose_cmd->add_option("file", path, "algebra file")->required();
    auto* classify_cmd = app.add_subcommand("classify", "match against the n = 8, 9 catalog");
    classify_cmd->add_option("file", path, "algebra file")->required();

    auto* dual_cmd = app.add_subcommand("dual", "quotient of the orthogonal complement of a relation ideal");
    int q = 0;
    std::string relations, relations_file;
    std::string dual_out;
    bool primal = false;
    dual_cmd->add_option("-q,--generators", q, "generator count of the free algebra")->required();
    auto* rel_opt = dual_cmd->add_option("--relations", relations, "relation ideal expression");
    auto* rel_file_opt = dual_cmd->add_option("--relations-file", relations_file, "file holding the expression");
    rel_opt->excludes(rel_file_opt);
    dual_cmd->add_option("-o,--output", dual_out, "write the algebra file here instead of stdout");
    dual_cmd->add_flag("--primal", primal, "emit N^q/I itself instead of N^q/I-perp");

    auto* catalog_cmd = app.add_subcommand("catalog", "browse or export the shipped catalog");
    catalog_cmd->require_subcommand(1);
    auto* list_cmd = catalog_cmd->add_subcommand("list", "one line per entry");
    std::string show_id, export_dir;
    auto* show_cmd = catalog_cmd->add_subcommand("show", "full record of one entry");
    show_cmd->add_option("id", show_id, "catalog id, e.g. N^{8,3}_4")->required();
    auto* export_cmd = catalog_cmd->add_subcommand("export", "write every entry as an algebra file plus index");
    export_cmd->add_option("dir", export_dir, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends.
            std::ostringstream help;
            int code = app.exit(e, out, err);
            return code == 0 ? kOk : kUsage;
        }
        app.exit(e, out, err);
        return kUsage;
    }

    if (budget_opt->count() > 0) opt.oracle_budget = budget;

    if (*validate_cmd) return cmd_validate(path, opt, out, err);
    if (*invariants_cmd) return cmd_invariants(path, opt, out, err);
    if (*decompose_cmd) return cmd_decompose(path, opt, out, err);
    if (*classify_cmd) return cmd_classify(path, opt, out, err);
    if (*dual_cmd) {
        std::string expr = relations;
        if (rel_file_opt->count() > 0) {
            std::ifstream in(relations_file);
            if (!in) {
                err << "error: cannot open '" << relations_file << "'\n";
                return kBadInput;
            }
            std::ostringstream buffer;
            buffer << in.rdbuf();
            expr = buffer.str();
        } else if (rel_opt->count() == 0) {
            err << "error: one of --relations or --relations-file is required\n";
            return kUsage;
        }
        std::optional<std::string> out_path;
        if (!dual_out.empty()) out_path = dual_out;
        return cmd_dual(q, expr, out_path, primal, opt, out, err);
    }
    if (*catalog_cmd) {
        if (*list_cmd) return cmd_catalog_list(opt, out, err);
        if (*show_cmd) return cmd_catalog_show(show_id, opt, out, err);
        if (*export_cmd) return cmd_catalog_export(export_dir, opt, out, err);
    }
    err << "error: no command selected\n";
    return kUsage;
}

}  // namespace twostep::cli
