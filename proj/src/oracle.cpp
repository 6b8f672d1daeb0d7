#include "roughdp/oracle.hpp"

#include <array>
#include <random>

#include "json.hpp"
#include "roughdp/approx.hpp"

namespace roughdp {

bool axiom_check(const SetFamily& family) {
    const int n = family.width();
    if (!family.contains(ElementSet::empty_set(n))) return false;
    if (!family.contains(ElementSet::full_set(n))) return false;
    for (const auto& a : family) {
        for (const auto& b : family) {
            if (!family.contains(a.unite(b))) return false;
            if (!family.contains(a.intersect(b))) return false;
        }
    }
    return true;
}

ElementSet enum_lower(const SetFamily& open_family, const ElementSet& s) {
    ElementSet acc = ElementSet::empty_set(s.width());
    for (const auto& v : open_family) {
        if (v.is_subset_of(s)) acc = acc.unite(v);
    }
    return acc;
}

ElementSet enum_upper(const SetFamily& closed_family, const ElementSet& s) {
    ElementSet acc = ElementSet::full_set(s.width());
    for (const auto& w : closed_family) {
        if (s.is_subset_of(w)) acc = acc.intersect(w);
    }
    return acc;
}

std::pair<ElementSet, ElementSet> pawlak_neighborhood_ops(const Universe& universe,
                                                          const BinaryRelation& relation,
                                                          const ElementSet& s) {
    auto nbrs = right_neighborhoods(universe, relation);
    ElementSet lo = ElementSet::empty_set(universe.size());
    ElementSet up = ElementSet::empty_set(universe.size());
    for (int x = 0; x < universe.size(); ++x) {
        if (nbrs[static_cast<size_t>(x)].is_subset_of(s)) lo = lo.with(x);
        if (nbrs[static_cast<size_t>(x)].intersects(s)) up = up.with(x);
    }
    return {lo, up};
}

std::string finding_to_json(const AuditFinding& f) {
    nlohmann::ordered_json j;
    j["property_id"] = f.property_id;
    j["seed"] = f.seed;
    j["n"] = f.n;
    auto rel = nlohmann::json::array();
    for (auto [a, b] : f.relation) rel.push_back({a, b});
    j["relation"] = rel;
    auto indices = [&](std::uint64_t bits) {
        auto arr = nlohmann::json::array();
        for (int i = 0; i < f.n; ++i) {
            if ((bits >> i) & 1u) arr.push_back(i);
        }
        return arr;
    };
    j["S"] = indices(f.subject_bits);
    if (f.other_bits) {
        j["N"] = indices(*f.other_bits);
    } else {
        j["N"] = nullptr;
    }
    j["lhs"] = indices(f.lhs_bits);
    j["rhs"] = indices(f.rhs_bits);
    return j.dump();
}

const std::vector<std::string>& guaranteed_law_ids() {
    static const std::vector<std::string> ids{
        "theorem1",        "prop3",           "prop4",
        "prop5",           "prop6",           "edge_decomposition",
        "accuracy_monotone", "class_chain",   "lemma1",
        "oracle_agreement", "point_closure",
    };
    return ids;
}

const std::vector<std::string>& audited_law_ids() {
    static const std::vector<std::string> ids{"theorem2", "theorem3"};
    return ids;
}

namespace {

struct LawContext {
    const ApproximationSpace& space;
    const AuditConfig& config;
    std::uint64_t seed;
    AuditReport& report;
    long instances = 0;

    // Definitional approximations for every subset, computed once per
    // space; the pair loops below would otherwise rescan the families
    // O(4^n) times.
    std::vector<std::array<std::uint64_t, 3>> lo_memo, up_memo;

    void precompute() {
        const int n = space.width();
        const std::uint64_t top = ElementSet::mask_for(n);
        lo_memo.resize(static_cast<size_t>(top) + 1);
        up_memo.resize(static_cast<size_t>(top) + 1);
        for (std::uint64_t m = 0; m <= top; ++m) {
            ElementSet s(m, n);
            for (Tier t : kAllTiers) {
                auto i = static_cast<size_t>(t);
                lo_memo[m][i] = enum_lower(open_family(t), s).bits();
                up_memo[m][i] = enum_upper(closed_family(t), s).bits();
            }
        }
    }

    bool selected(const std::string& id) const {
        if (config.laws.empty()) return true;
        for (const auto& l : config.laws) {
            if (l == id) return true;
        }
        return false;
    }

    const SetFamily& open_family(Tier tier) const {
        switch (tier) {
            case Tier::Tau: return space.topo.opens();
            case Tier::Pre: return space.families.preopen;
            case Tier::DeltaPre: return space.families.deltap_open;
        }
        throw Error("bad tier");
    }

    const SetFamily& closed_family(Tier tier) const {
        switch (tier) {
            case Tier::Tau: return space.topo.closeds();
            case Tier::Pre: return space.families.preclosed;
            case Tier::DeltaPre: return space.families.deltap_closed;
        }
        throw Error("bad tier");
    }

    ElementSet olower(const ElementSet& s, Tier tier) const {
        return ElementSet(lo_memo[s.bits()][static_cast<size_t>(tier)], s.width());
    }
    ElementSet oupper(const ElementSet& s, Tier tier) const {
        return ElementSet(up_memo[s.bits()][static_cast<size_t>(tier)], s.width());
    }

    void finding(bool guaranteed, const std::string& id, const ElementSet& s,
                 std::optional<std::uint64_t> other, const ElementSet& lhs,
                 const ElementSet& rhs) {
        AuditFinding f;
        f.property_id = id;
        f.seed = seed;
        f.n = space.width();
        f.relation = space.topo.relation().pairs();
        f.subject_bits = s.bits();
        f.other_bits = other;
        f.lhs_bits = lhs.bits();
        f.rhs_bits = rhs.bits();
        (guaranteed ? report.guaranteed_violations : report.audited_findings)
            .push_back(std::move(f));
    }

    void require(const std::string& id, const ElementSet& s, std::optional<std::uint64_t> other,
                 bool ok, const ElementSet& lhs, const ElementSet& rhs) {
        ++instances;
        if (!ok) finding(true, id, s, other, lhs, rhs);
    }

    // Id assembled only on failure; the pair loops call this O(4^n) times.
    void require(const char* id, const char* suffix, const ElementSet& s,
                 std::optional<std::uint64_t> other, bool ok, const ElementSet& lhs,
                 const ElementSet& rhs) {
        ++instances;
        if (!ok) finding(true, std::string(id) + suffix, s, other, lhs, rhs);
    }
};

const char* tier_suffix(Tier t) {
    switch (t) {
        case Tier::Tau: return "_tau";
        case Tier::Pre: return "_p";
        case Tier::DeltaPre: return "_dp";
    }
    return "_?";
}

void check_unary_laws(LawContext& ctx) {
    const ApproximationSpace& space = ctx.space;
    const int n = space.width();
    const ElementSet full = ElementSet::full_set(n);
    const std::uint64_t top = ElementSet::mask_for(n);

    for (std::uint64_t m = 0; m <= top; ++m) {
        ElementSet s(m, n);
        ElementSet lt = ctx.olower(s, Tier::Tau), ut = ctx.oupper(s, Tier::Tau);
        ElementSet lp = ctx.olower(s, Tier::Pre), up = ctx.oupper(s, Tier::Pre);
        ElementSet ld = ctx.olower(s, Tier::DeltaPre), ud = ctx.oupper(s, Tier::DeltaPre);

        if (ctx.selected("theorem1")) {
            bool chain = lt.is_subset_of(lp) && lp.is_subset_of(ld) && ld.is_subset_of(s) &&
                         s.is_subset_of(ud) && ud.is_subset_of(up) && up.is_subset_of(ut);
            ctx.require("theorem1_chain", s, std::nullopt, chain, lt, ut);
        }

        for (Tier t : kAllTiers) {
            ElementSet lo = ctx.olower(s, t), uo = ctx.oupper(s, t);
            std::string suffix = std::string("_") + tier_name(t);
            if (ctx.selected("prop4")) {
                ctx.require("prop4_bounds" + suffix, s, std::nullopt,
                            lo.is_subset_of(s) && s.is_subset_of(uo), lo, uo);
            }
            if (ctx.selected("prop5")) {
                ElementSet dual = ctx.oupper(s.complement(), t).complement();
                ctx.require("prop5_duality" + suffix, s, std::nullopt, lo == dual, lo, dual);
                ctx.require("prop5_lower_idempotent" + suffix, s, std::nullopt,
                            ctx.olower(lo, t) == lo, ctx.olower(lo, t), lo);
                ctx.require("prop5_upper_idempotent" + suffix, s, std::nullopt,
                            ctx.oupper(uo, t) == uo, ctx.oupper(uo, t), uo);
                ctx.require("prop5_lower_of_lower_in_upper" + suffix, s, std::nullopt,
                            ctx.olower(lo, t).is_subset_of(ctx.oupper(lo, t)),
                            ctx.olower(lo, t), ctx.oupper(lo, t));
                ctx.require("prop5_lower_of_upper_in_upper" + suffix, s, std::nullopt,
                            ctx.olower(uo, t).is_subset_of(ctx.oupper(uo, t)),
                            ctx.olower(uo, t), ctx.oupper(uo, t));
            }
            if (ctx.selected("edge_decomposition")) {
                ElementSet b = uo.difference(lo);
                ElementSet edges = s.difference(lo).unite(uo.difference(s));
                ctx.require("edge_decomposition" + suffix, s, std::nullopt, b == edges, b, edges);
            }
            if (ctx.selected("oracle_agreement")) {
                ctx.require("oracle_agreement_lower" + suffix, s, std::nullopt,
                            lower(space, s, t) == lo, lower(space, s, t), lo);
                ctx.require("oracle_agreement_upper" + suffix, s, std::nullopt,
                            upper(space, s, t) == uo, upper(space, s, t), uo);
            }
        }

        if (ctx.selected("prop3")) {
            bool p_exact = lp == up;
            bool dp_exact = ld == ud;
            ctx.require("prop3_exactness", s, std::nullopt, !p_exact || dp_exact, lp, up);
        }

        if (ctx.selected("accuracy_monotone") && !s.empty()) {
            Rational at(lt.count(), ut.count());
            Rational ap(lp.count(), up.count());
            Rational ad(ld.count(), ud.count());
            ctx.require("accuracy_monotone", s, std::nullopt, at <= ap && ap <= ad, lt, ut);
        }

        if (ctx.selected("class_chain")) {
            auto cat = [&](const ElementSet& lo, const ElementSet& uo) {
                return (lo.empty() ? 2 : 0) + (uo.is_full() ? 1 : 0);
            };
            // encoding: 0 = RD, 1 = EUD, 2 = IUD, 3 = TUD
            int ct = cat(lt, ut), cp = cat(lp, up), cd = cat(ld, ud);
            bool ok = true;
            int chain[3] = {ct, cp, cd};
            for (int i = 0; i < 2; ++i) {
                if (chain[i] == 0 && chain[i + 1] != 0) ok = false;
                if (chain[i + 1] != 0 && chain[i + 1] != chain[i]) ok = false;
            }
            ctx.require("class_chain", s, std::nullopt, ok, lt, ut);
        }

        if (ctx.selected("lemma1")) {
            ElementSet pcl = p_closure_delta(space.topo, s);
            ElementSet pint = p_interior_delta(space.topo, s);
            ctx.require("lemma1_closure_form", s, std::nullopt, pcl == ud, pcl, ud);
            ctx.require("lemma1_interior_form", s, std::nullopt, pint == ld, pint, ld);
            ElementSet cl_intd = space.topo.closure(delta_interior(space.topo, s));
            ElementSet int_cld = space.topo.interior(delta_closure(space.topo, s));
            ElementSet lhs3 = ctx.oupper(ld, Tier::DeltaPre);
            ElementSet rhs3 = pint.unite(cl_intd);
            ctx.require("lemma1_closure_of_interior", s, std::nullopt, lhs3 == rhs3, lhs3, rhs3);
            ElementSet lhs4 = ctx.olower(ud, Tier::DeltaPre);
            ElementSet rhs4 = pcl.intersect(int_cld);
            ctx.require("lemma1_interior_of_closure", s, std::nullopt, lhs4 == rhs4, lhs4, rhs4);
        }
    }

    if (ctx.selected("point_closure")) {
        for (int c = 0; c < n; ++c) {
            ElementSet uc = ctx.oupper(ElementSet::empty_set(n).with(c), Tier::DeltaPre);
            for (int d = 0; d < n; ++d) {
                ElementSet udp = ctx.oupper(ElementSet::empty_set(n).with(d), Tier::DeltaPre);
                bool mutual = uc.contains(d) && udp.contains(c);
                ctx.require("point_closure_lemma", ElementSet::empty_set(n).with(c),
                            ElementSet::empty_set(n).with(d).bits(), !mutual || uc == udp, uc,
                            udp);
            }
        }
    }
    (void)full;
}

void check_binary_laws(LawContext& ctx) {
    const ApproximationSpace& space = ctx.space;
    const int n = space.width();
    const std::uint64_t top = ElementSet::mask_for(n);

    if (ctx.selected("prop4")) {
        // Monotonicity over all nested pairs via submask enumeration.
        for (std::uint64_t nm = 0; nm <= top; ++nm) {
            ElementSet big(nm, n);
            std::array<ElementSet, 3> lob{ctx.olower(big, Tier::Tau), ctx.olower(big, Tier::Pre),
                                          ctx.olower(big, Tier::DeltaPre)};
            std::array<ElementSet, 3> upb{ctx.oupper(big, Tier::Tau), ctx.oupper(big, Tier::Pre),
                                          ctx.oupper(big, Tier::DeltaPre)};
            std::uint64_t sm = nm;
            while (true) {
                ElementSet small(sm, n);
                for (Tier t : kAllTiers) {
                    auto i = static_cast<size_t>(t);
                    ctx.require("prop4_lower_monotone", tier_suffix(t), small, nm,
                                ctx.olower(small, t).is_subset_of(lob[i]),
                                ctx.olower(small, t), lob[i]);
                    ctx.require("prop4_upper_monotone", tier_suffix(t), small, nm,
                                ctx.oupper(small, t).is_subset_of(upb[i]),
                                ctx.oupper(small, t), upb[i]);
                }
                if (sm == 0) break;
                sm = (sm - 1) & nm;
            }
        }
    }

    for (std::uint64_t ms = 0; ms <= top; ++ms) {
        ElementSet s(ms, n);
        bool s_dp_exact = ctx.olower(s, Tier::DeltaPre) == ctx.oupper(s, Tier::DeltaPre);
        ElementSet cl_s = space.topo.closure(s);
        ElementSet int_s = space.topo.interior(s);
        for (std::uint64_t mn = 0; mn <= top; ++mn) {
            ElementSet other(mn, n);
            if (ctx.selected("prop6")) {
                for (Tier t : kAllTiers) {
                    ElementSet lu = ctx.olower(s.unite(other), t);
                    ElementSet li = ctx.olower(s.intersect(other), t);
                    ElementSet uu = ctx.oupper(s.unite(other), t);
                    ElementSet ui = ctx.oupper(s.intersect(other), t);
                    ctx.require("prop6_lower_union", tier_suffix(t), s, mn,
                                ctx.olower(s, t).unite(ctx.olower(other, t)).is_subset_of(lu),
                                ctx.olower(s, t).unite(ctx.olower(other, t)), lu);
                    ctx.require("prop6_lower_intersection", tier_suffix(t), s, mn,
                                li.is_subset_of(ctx.olower(s, t).intersect(ctx.olower(other, t))),
                                li, ctx.olower(s, t).intersect(ctx.olower(other, t)));
                    ctx.require("prop6_upper_union", tier_suffix(t), s, mn,
                                ctx.oupper(s, t).unite(ctx.oupper(other, t)).is_subset_of(uu),
                                ctx.oupper(s, t).unite(ctx.oupper(other, t)), uu);
                    ctx.require("prop6_upper_intersection", tier_suffix(t), s, mn,
                                ui.is_subset_of(ctx.oupper(s, t).intersect(ctx.oupper(other, t))),
                                ui, ctx.oupper(s, t).intersect(ctx.oupper(other, t)));
                }
            }
            if (ctx.selected("theorem2") && s_dp_exact) {
                ElementSet lhs1 = ctx.olower(s.unite(other), Tier::DeltaPre);
                ElementSet rhs1 =
                    ctx.olower(s, Tier::DeltaPre).unite(ctx.olower(other, Tier::DeltaPre));
                ++ctx.instances;
                if (lhs1 != rhs1) {
                    ctx.finding(false, "theorem2_lower_union", s, mn, lhs1, rhs1);
                }
                ElementSet lhs2 = ctx.oupper(s.intersect(other), Tier::DeltaPre);
                ElementSet rhs2 =
                    ctx.oupper(s, Tier::DeltaPre).intersect(ctx.oupper(other, Tier::DeltaPre));
                ++ctx.instances;
                if (lhs2 != rhs2) {
                    ctx.finding(false, "theorem2_upper_intersection", s, mn, lhs2, rhs2);
                }
            }
            if (ctx.selected("theorem3")) {
                ElementSet lhs1 = ctx.oupper(cl_s.unite(other), Tier::DeltaPre);
                ElementSet rhs1 = cl_s.unite(ctx.oupper(other, Tier::DeltaPre));
                ++ctx.instances;
                if (lhs1 != rhs1) {
                    ctx.finding(false, "theorem3_upper_closure", s, mn, lhs1, rhs1);
                }
                ElementSet lhs2 = ctx.olower(int_s.intersect(other), Tier::DeltaPre);
                ElementSet rhs2 = int_s.intersect(ctx.olower(other, Tier::DeltaPre));
                ++ctx.instances;
                if (lhs2 != rhs2) {
                    ctx.finding(false, "theorem3_lower_interior", s, mn, lhs2, rhs2);
                }
            }
        }
    }
}

Universe generic_universe(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
    return Universe(std::move(labels));
}

BinaryRelation relation_from_mask(std::uint64_t bits, int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if ((bits >> (i * n + j)) & 1u) pairs.emplace_back(i, j);
        }
    }
    return BinaryRelation(std::move(pairs), n);
}

}  // namespace

long audit_space(const ApproximationSpace& space, const AuditConfig& config, std::uint64_t seed,
                 AuditReport& report) {
    LawContext ctx{space, config, seed, report};
    ctx.precompute();
    check_unary_laws(ctx);
    check_binary_laws(ctx);
    return ctx.instances;
}

AuditReport audit(const AuditConfig& config) {
    AuditReport report;
    if (config.n > config.enum_cap) {
        throw CapExceeded("audit size " + std::to_string(config.n) + " exceeds the cap of " +
                          std::to_string(config.enum_cap));
    }
    if (config.mode == AuditConfig::Mode::Exhaustive) {
        if (config.n < 1 || config.n > 4) {
            throw CapExceeded("exhaustive relation enumeration supports n in [1, 4]");
        }
        const std::uint64_t relation_count = std::uint64_t{1} << (config.n * config.n);
        for (std::uint64_t bits = 0; bits < relation_count; ++bits) {
            auto space = ApproximationSpace::build(generic_universe(config.n),
                                                   relation_from_mask(bits, config.n),
                                                   config.enum_cap);
            report.instances_checked += audit_space(space, config, 0, report);
            ++report.spaces_checked;
        }
    } else {
        if (config.n < 2) throw Error("sample mode needs n >= 2");
        std::mt19937_64 rng(config.seed);
        const double probs[3] = {0.2, 0.5, 0.8};
        for (int i = 0; i < config.space_count; ++i) {
            int n = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(config.n - 1));
            double p = probs[i % 3];
            std::vector<std::pair<int, int>> pairs;
            for (int a = 0; a < n; ++a) {
                for (int b = 0; b < n; ++b) {
                    double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                    if (u < p) pairs.emplace_back(a, b);
                }
            }
            auto space = ApproximationSpace::build(
                generic_universe(n), BinaryRelation(std::move(pairs), n), config.enum_cap);
            report.instances_checked += audit_space(space, config, config.seed, report);
            ++report.spaces_checked;
        }
    }
    return report;
}

}  // namespace roughdp
