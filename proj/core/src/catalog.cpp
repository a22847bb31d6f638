#include "twostep/catalog.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "twostep/error.hpp"

namespace twostep {

namespace {

struct Bracket {
    int i, j, k;  // [x_i, x_j] = y_k, coefficient 1
};

TwoStepAlgebra make_algebra(int q, int p, std::initializer_list<Bracket> brackets) {
    StructureTensor t(q, p);
    for (const Bracket& b : brackets) {
        int i = b.i, j = b.j;
        Rational c = 1;
        if (i > j) {
            std::swap(i, j);
            c = -1;
        }
        t.add_bracket(i, j, b.k, c);
    }
    return validate(std::move(t));
}

// Comparison key for the fourth nomenclature index. Entries whose root spaces
// are not all one-dimensional sort after every dimension-one entry; the
// sequence tiers follow in the documented order. Absent optional values sort
// first.
struct NameKey {
    bool root_dim_above_one;
    std::vector<int> hmsg;
    std::vector<int> generator_relation;
    std::vector<int> center_related;           // empty when withheld
    std::vector<int> weighted_center_related;  // empty when withheld
    int girth;                                 // -1 when acyclic

    auto tie() const {
        return std::tie(root_dim_above_one, hmsg, generator_relation, center_related,
                        weighted_center_related, girth);
    }
    friend bool operator<(const NameKey& a, const NameKey& b) { return a.tie() < b.tie(); }
    friend bool operator==(const NameKey& a, const NameKey& b) { return a.tie() == b.tie(); }
};

NameKey name_key(const CatalogEntry& e) {
    Fingerprint f = fingerprint(e.algebra);
    NameKey key;
    key.root_dim_above_one = !e.root_spaces_all_dim1;
    key.hmsg = e.hmsg_related_sequence;
    key.generator_relation = f.generator_relation;
    key.center_related = f.center_related.value_or(std::vector<int>{});
    key.weighted_center_related = f.weighted_center_related.value_or(std::vector<int>{});
    key.girth = f.girth.value_or(-1);
    return key;
}

std::string format_t_name(int n, int p, int r, int i, bool singleton) {
    std::ostringstream os;
    os << "T^{" << n << "," << p << "}_";
    if (singleton) {
        os << r;
    } else {
        os << "{" << r << "," << i << "}";
    }
    return os.str();
}

}  // namespace

std::map<std::string, std::string> assign_t_names(std::span<const CatalogEntry> entries) {
    std::map<std::pair<std::pair<int, int>, int>, std::vector<const CatalogEntry*>> groups;
    for (const CatalogEntry& e : entries) {
        groups[{{e.algebra.n(), e.algebra.p()}, e.rank_r}].push_back(&e);
    }
    std::map<std::string, std::string> names;
    for (auto& [key, members] : groups) {
        const auto [np, r] = key;
        if (members.size() == 1) {
            names[members.front()->id] = format_t_name(np.first, np.second, r, 0, true);
            continue;
        }
        std::vector<std::pair<NameKey, const CatalogEntry*>> keyed;
        keyed.reserve(members.size());
        for (const CatalogEntry* e : members) keyed.emplace_back(name_key(*e), e);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 0; i + 1 < keyed.size(); ++i) {
            if (keyed[i].first == keyed[i + 1].first) {
                throw UnresolvedTie({keyed[i].second->id, keyed[i + 1].second->id});
            }
        }
        for (std::size_t i = 0; i < keyed.size(); ++i) {
            names[keyed[i].second->id] =
                format_t_name(np.first, np.second, r, static_cast<int>(i) + 1, false);
        }
    }
    return names;
}

namespace {

struct RawEntry {
    const char* id;
    int q, p, rank;
    bool dim1;
    std::vector<int> hmsg;
    std::initializer_list<Bracket> brackets;
    const char* provenance;
};

std::vector<CatalogEntry> build_catalog() {
    // Bracket tables as printed in the sources, two deliberate repairs noted
    // in the provenance strings.
    const RawEntry raw[] = {
        {"N^{8,2}_1", 6, 2, 4, true, {1, 1, 1, 1, 1, 1},
         {{1, 2, 1}, {3, 4, 2}, {5, 6, 1}, {5, 6, 2}},
         "RZ11; dual of Ga73 Theorem 7.14 ideal I_1"},
        {"N^{8,2}_2", 6, 2, 4, true, {1, 1, 1, 1, 2, 2},
         {{5, 2, 1}, {6, 1, 1}, {5, 3, 2}, {6, 4, 2}},
         "RZ11; dual of Ga73 Theorem 7.14 ideal I_10"},
        {"N^{8,2}_3", 6, 2, 4, true, {1, 1, 1, 1, 2, 2},
         {{1, 2, 1}, {6, 5, 1}, {3, 6, 2}, {5, 4, 2}},
         "RZ11; dual of Ga73 Theorem 7.14 ideal I_3"},
        {"N^{8,2}_4", 6, 2, 4, true, {1, 1, 1, 1, 2, 2},
         {{1, 2, 1}, {3, 6, 1}, {5, 4, 1}, {6, 5, 2}},
         "RZ11; dual of Ga73 Theorem 7.14 ideal I_4"},
        {"N^{8,2}_5", 6, 2, 3, true, {1, 1, 2, 2, 2, 2},
         {{1, 6, 1}, {3, 4, 1}, {5, 2, 1}, {6, 3, 2}, {4, 5, 2}},
         "RZ11; dual of Ga73 Theorem 7.14 ideal I_5; root-space dimensions not discussed "
         "in the source (rank-singleton class)"},

        {"N^{8,3}_1", 5, 3, 4, true, {1, 1, 2, 2, 2},
         {{1, 2, 1}, {3, 4, 1}, {3, 5, 2}, {4, 5, 3}},
         "RZ17a Theorem 1; same class as YD13 under a different order and basis"},
        {"N^{8,3}_2", 5, 3, 4, true, {1, 1, 2, 2, 2},
         {{1, 5, 1}, {4, 2, 1}, {5, 3, 2}, {3, 4, 3}},
         "RZ17a Theorem 1"},
        {"N^{8,3}_3", 5, 3, 4, false, {1, 1, 2, 2, 2},
         {{5, 3, 1}, {3, 4, 1}, {1, 5, 2}, {2, 4, 3}},
         "RZ17a Theorem 1; the root space attached to x3 has dimension 2"},
        {"N^{8,3}_4", 5, 3, 4, true, {1, 1, 2, 2, 2},
         {{1, 5, 1}, {3, 4, 1}, {5, 3, 2}, {2, 4, 3}},
         "RZ17a Theorem 1"},
        {"N^{8,3}_5", 5, 3, 4, true, {1, 1, 1, 2, 3},
         {{1, 4, 1}, {5, 2, 1}, {3, 5, 2}, {4, 5, 3}},
         "RZ17a Theorem 1"},
        {"N^{8,3}_6", 5, 3, 3, true, {1, 2, 2, 2, 3},
         {{1, 2, 1}, {5, 4, 1}, {2, 5, 2}, {4, 3, 2}, {3, 5, 3}},
         "RZ17a Theorem 1"},
        {"N^{8,3}_7", 5, 3, 3, false, {1, 2, 2, 2, 3},
         {{1, 2, 1}, {5, 3, 1}, {2, 5, 2}, {5, 4, 2}, {3, 4, 3}},
         "RZ17a Theorem 1; rank printed there as 4, repaired to 3 (the source states the "
         "N^{8,3}_{6..10} maximal tori have equal dimension, and the matching YD13 entry "
         "has rank 3); the root space attached to x5 has dimension 2"},
        {"N^{8,3}_8", 5, 3, 3, true, {1, 1, 2, 3, 3},
         {{1, 5, 1}, {3, 4, 1}, {3, 5, 2}, {2, 4, 2}, {4, 5, 3}},
         "RZ17a Theorem 1"},
        {"N^{8,3}_9", 5, 3, 3, true, {1, 2, 2, 2, 3},
         {{1, 5, 1}, {3, 2, 1}, {3, 5, 2}, {2, 4, 2}, {4, 5, 3}},
         "RZ17a Theorem 1"},
        {"N^{8,3}_10", 5, 3, 3, true, {2, 2, 2, 2, 2},
         {{1, 2, 1}, {3, 5, 1}, {2, 3, 2}, {4, 5, 2}, {1, 4, 3}},
         "RZ17a Theorem 1; final bracket printed as [x1,x5]=y3, repaired to [x1,x4]=y3 "
         "(the printed table gives related sequence (1,2,2,2,3), contradicting the "
         "stated H-msg sequence (2,2,2,2,2) and making the entry indistinguishable "
         "from N^{8,3}_9; the repair restores the stated 5-cycle invariants)"},
        {"N^{8,3}_11", 5, 3, 2, true, {2, 2, 2, 3, 3},
         {{1, 5, 1}, {4, 2, 1}, {1, 4, 2}, {5, 3, 2}, {4, 5, 3}, {2, 3, 3}},
         "RZ17a Theorem 1; the unique rank-2 class for n = 8, p = 3"},

        {"N^{8,4}_1", 4, 4, 4, true, {2, 2, 2, 2},
         {{1, 2, 1}, {2, 3, 2}, {3, 4, 3}, {4, 1, 4}},
         "YD13 (also XR10); fourth bracket printed as '= y5' with p = 4, stored as y4 "
         "(validation and the Ga73 Theorem 7.12 duality cross-check force it)"},
        {"N^{8,4}_2", 4, 4, 4, true, {1, 2, 2, 3},
         {{2, 4, 1}, {3, 4, 2}, {2, 3, 3}, {1, 4, 4}},
         "YD13 (also XR10); fourth bracket printed as '= y5' with p = 4, stored as y4"},
        {"N^{8,4}_3", 4, 4, 3, true, {2, 2, 3, 3},
         {{3, 4, 1}, {1, 3, 2}, {2, 4, 2}, {1, 4, 3}, {2, 3, 4}},
         "YD13 (also XR10); root-space dimensions not discussed in the source "
         "(rank-singleton class)"},

        {"N^{9,2}_1", 7, 2, 5, true, {1, 1, 1, 1, 1, 1, 2},
         {{1, 2, 1}, {4, 5, 1}, {6, 7, 1}, {3, 7, 2}},
         "RZ17"},
        {"N^{9,2}_2", 7, 2, 5, true, {1, 1, 1, 1, 1, 1, 2},
         {{2, 7, 1}, {4, 5, 1}, {1, 3, 2}, {6, 7, 2}},
         "RZ17"},
        {"N^{9,2}_3", 7, 2, 4, true, {1, 1, 1, 1, 2, 2, 2},
         {{1, 2, 1}, {3, 7, 1}, {5, 6, 1}, {4, 6, 2}, {5, 7, 2}},
         "RZ17"},
        {"N^{9,2}_4", 7, 2, 4, true, {1, 1, 1, 1, 2, 2, 2},
         {{7, 2, 1}, {4, 5, 1}, {6, 1, 1}, {7, 3, 2}, {5, 6, 2}},
         "RZ17"},
        {"N^{9,2}_5", 7, 2, 3, true, {1, 1, 2, 2, 2, 2, 2},
         {{1, 7, 1}, {3, 4, 1}, {5, 6, 1}, {7, 3, 2}, {4, 5, 2}, {6, 2, 2}},
         "RZ17; H-msg sequence printed as (2,2,2,2,2,1,1), stored nondecreasing"},

        {"N^{9,5}_1", 4, 5, 4, true, {2, 2, 3, 3},
         {{1, 3, 1}, {1, 4, 2}, {2, 3, 3}, {2, 4, 4}, {3, 4, 5}},
         "WR11; equals N^4/I_1 for the Ga73 Theorem 5.2 ideal I_1"},
        {"N^{9,5}_2", 4, 5, 4, true, {3, 3, 3, 3},
         {{1, 2, 1}, {1, 3, 2}, {2, 4, 2}, {1, 4, 3}, {2, 3, 4}, {3, 4, 5}},
         "WR11; equals N^4/I_2 for the Ga73 Theorem 5.2 ideal I_2"},
    };

    std::vector<CatalogEntry> entries;
    entries.reserve(std::size(raw));
    for (const RawEntry& r : raw) {
        CatalogEntry e{r.id, make_algebra(r.q, r.p, r.brackets), r.rank, r.dim1, r.hmsg, "", r.provenance};
        CatalogMeta meta;
        meta.q = r.q;
        meta.p = r.p;
        meta.n = r.q + r.p;
        meta.rank_r = r.rank;
        meta.source_label = r.id;
        e.algebra = e.algebra.with_meta(meta);
        entries.push_back(std::move(e));
    }
    auto names = assign_t_names(entries);
    for (CatalogEntry& e : entries) {
        e.t_name = names.at(e.id);
        CatalogMeta meta = *e.algebra.meta();
        meta.t_name = e.t_name;
        e.algebra = e.algebra.with_meta(std::move(meta));
    }
    return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> entries = build_catalog();
    return entries;
}

const CatalogEntry& catalog_entry(const std::string& id) {
    // Accept both "N^{8,3}_11" and the braced "N^{8,3}_{11}" spelling.
    auto normalize = [](const std::string& s) {
        std::string out;
        for (char c : s)
            if (c != '{' && c != '}' && c != ' ') out.push_back(c);
        return out;
    };
    const std::string wanted = normalize(id);
    for (const CatalogEntry& e : catalog()) {
        if (normalize(e.id) == wanted) return e;
    }
    throw UnknownId(id);
}

namespace {

const char* kSequenceCaveat =
    " (sequence-based distinction presumes an H-msg basis with all root spaces of dimension one)";

std::string seq_str(const std::vector<int>& s) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << ")";
    return os.str();
}

}  // namespace

std::vector<CatalogMatch> match(const TwoStepAlgebra& alg) {
    Fingerprint f = fingerprint(alg);
    std::vector<CatalogMatch> out;
    for (const CatalogEntry& e : catalog()) {
        if (e.algebra.q() != alg.q() || e.algebra.p() != alg.p()) continue;
        Fingerprint g = fingerprint(e.algebra);
        if (f.related != g.related || f.generator_relation != g.generator_relation || f.girth != g.girth) continue;
        if (f.uniform3 && g.uniform3) {
            if (f.center_related != g.center_related || f.weighted_center_related != g.weighted_center_related)
                continue;
            out.push_back({&e, MatchStrength::Exact});
        } else if (!f.uniform3 && !g.uniform3) {
            // Both sides withhold center sequences, so the comparison covered
            // everything either side can compute.
            out.push_back({&e, MatchStrength::Exact});
        } else {
            out.push_back({&e, MatchStrength::Partial});
        }
    }
    return out;
}

DistinguishResult distinguish(const TwoStepAlgebra& a, const TwoStepAlgebra& b) {
    if (a.q() != b.q() || a.p() != b.p()) {
        return {true, "signatures differ: (" + std::to_string(a.q()) + "," + std::to_string(a.p()) + ") vs (" +
                          std::to_string(b.q()) + "," + std::to_string(b.p()) + ")"};
    }
    Fingerprint fa = fingerprint(a), fb = fingerprint(b);
    if (fa.related != fb.related) {
        return {true, "related sequences differ: " + seq_str(fa.related) + " vs " + seq_str(fb.related) +
                          kSequenceCaveat};
    }
    if (fa.generator_relation != fb.generator_relation) {
        return {true, "generator relation sequences differ: " + seq_str(fa.generator_relation) + " vs " +
                          seq_str(fb.generator_relation) + kSequenceCaveat};
    }
    if (fa.uniform3 && fb.uniform3) {
        if (*fa.center_related != *fb.center_related) {
            return {true, "center related sequences differ: " + seq_str(*fa.center_related) + " vs " +
                              seq_str(*fb.center_related) + kSequenceCaveat};
        }
        if (*fa.weighted_center_related != *fb.weighted_center_related) {
            return {true, "weighted center related sequences differ: " + seq_str(*fa.weighted_center_related) +
                              " vs " + seq_str(*fb.weighted_center_related) + kSequenceCaveat};
        }
    }
    if (fa.girth != fb.girth) {
        auto girth_str = [](const std::optional<int>& g) {
            return g ? std::to_string(*g) : std::string("none");
        };
        return {true, "girths differ: " + girth_str(fa.girth) + " vs " + girth_str(fb.girth) + kSequenceCaveat};
    }
    return {false, "all computable invariants agree; the comparison is inconclusive"};
}

namespace {

std::vector<RelationIdeal> parse_all(int q, std::initializer_list<const char*> exprs) {
    std::vector<RelationIdeal> out;
    out.reserve(exprs.size());
    for (const char* e : exprs) out.push_back(parse_relation(q, e));
    return out;
}

}  // namespace

const std::vector<RelationIdeal>& gauger_ideals_q6() {
    static const std::vector<RelationIdeal> ideals = parse_all(6, {
        "[u1,u2]+[u5,u6]; [u3,u4]+[u5,u6]",
        "[u1,u2]+[u3,u4]; [u5,u6]",
        "[u1,u4]+[u2,u3]; [u2,u4]+[u5,u6]",
        "[u1,u4]+[u2,u3]+[u5,u6]; [u2,u4]",
        "[u1,u6]+[u2,u5]+[u3,u4]; [u2,u6]+[u3,u5]",
        "[u1,u2]; [u3,u4]",
        "[u1,u4]+[u2,u3]; [u2,u4]",
        "[u1,u2]+[u5,u6]; [u4,u6]",
        "[u5,u6]; [u4,u6]",
        "[u1,u3]+[u4,u6]; [u2,u3]+[u5,u6]",
        "[u2,u6]+[u3,u5]; [u3,u6]+[u4,u5]",
    });
    return ideals;
}

const std::vector<RelationIdeal>& gauger_ideals_q4_two() {
    static const std::vector<RelationIdeal> ideals = parse_all(4, {
        "[u1,u2]; [u3,u4]",
        "[u1,u4]+[u2,u3]; [u2,u4]",
        "[u2,u4]; [u3,u4]",
    });
    return ideals;
}

const std::vector<RelationIdeal>& gauger_ideals_q4_one() {
    static const std::vector<RelationIdeal> ideals = parse_all(4, {
        "[u1,u2]",
        "[u1,u2]+[u3,u4]",
    });
    return ideals;
}

const std::vector<FixtureAlgebra>& gt99_decomposable_examples() {
    static const std::vector<FixtureAlgebra> fixtures = [] {
        std::vector<FixtureAlgebra> out;
        out.push_back({"GT99 Table 2 No. 91",
                       make_algebra(5, 3, {{1, 4, 2}, {1, 5, 3}, {2, 3, 1}}),
                       "GT99 Table 2 No. 91 (n = 8, p = 3); decomposable"});
        out.push_back({"GT99 Table 2 No. 82",
                       make_algebra(5, 4, {{1, 2, 2}, {1, 3, 3}, {2, 3, 4}, {4, 5, 1}}),
                       "GT99 Table 2 No. 82 (n = 9, p = 4); decomposable"});
        out.push_back({"GT99 Table 8 No. 44",
                       make_algebra(6, 3, {{1, 2, 3}, {1, 5, 1}, {2, 6, 1}, {3, 4, 2}}),
                       "GT99 Table 8 No. 44; the table describes the n = 9, p = 4 case but the "
                       "printed brackets use six generators and three center elements "
                       "(signature (6,3), still n = 9); stored as printed; decomposable"});
        return out;
    }();
    return fixtures;
}

}  // namespace twostep
