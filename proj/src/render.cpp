#include "roughdp/render.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include "json.hpp"

namespace roughdp {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json set_json(const Universe& u, const ElementSet& s) {
    auto arr = ordered_json::array();
    for (int i : s.indices()) arr.push_back(u.label(i));
    return arr;
}

ordered_json family_json(const Universe& u, const SetFamily& fam) {
    auto arr = ordered_json::array();
    for (const auto& s : fam) arr.push_back(set_json(u, s));
    return arr;
}

std::string family_line(const Universe& u, const SetFamily& fam) {
    std::string out;
    for (const auto& s : fam) {
        if (!out.empty()) out += " ";
        out += format_set(u, s);
    }
    return out;
}

// Left-aligned columns, two-space gutters.
std::string table_text(const std::vector<std::vector<std::string>>& rows) {
    std::vector<size_t> widths;
    for (const auto& row : rows) {
        if (row.size() > widths.size()) widths.resize(row.size(), 0);
        for (size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
    }
    std::ostringstream out;
    for (const auto& row : rows) {
        for (size_t c = 0; c < row.size(); ++c) {
            out << row[c];
            if (c + 1 < row.size()) out << std::string(widths[c] - row[c].size() + 2, ' ');
        }
        out << "\n";
    }
    return out.str();
}

const SetFamily& family_by_kind(const ApproximationSpace& space, const std::string& kind) {
    if (kind == "tau") return space.topo.opens();
    if (kind == "pre") return space.families.preopen;
    if (kind == "deltap") return space.families.deltap_open;
    throw ParseError("unknown family kind '" + kind + "' (expected tau|pre|deltap)");
}

std::string rational_str(const std::optional<Rational>& r) {
    return r ? r->str() : "undefined";
}

}  // namespace

std::string format_set(const Universe& universe, const ElementSet& s) {
    std::string out = "{";
    bool first = true;
    for (int i : s.indices()) {
        if (!first) out += ",";
        out += universe.label(i);
        first = false;
    }
    out += "}";
    return out;
}

std::vector<AccuracyRow> accuracy_table(const ApproximationSpace& space, bool paper_rows,
                                        int enum_cap) {
    const int n = space.width();
    if (n > enum_cap) {
        throw CapExceeded("accuracy table over " + std::to_string(n) +
                          " elements exceeds the cap of " + std::to_string(enum_cap));
    }
    std::vector<ElementSet> subjects;
    for (std::uint64_t m = 1; m < ElementSet::mask_for(n); ++m) {
        ElementSet s(m, n);
        if (paper_rows && s.count() > 3) continue;
        subjects.push_back(s);
    }
    std::sort(subjects.begin(), subjects.end(), [](const ElementSet& a, const ElementSet& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a.indices() < b.indices();
    });
    std::vector<AccuracyRow> rows;
    rows.reserve(subjects.size());
    for (const auto& s : subjects) {
        rows.push_back(AccuracyRow{s, accuracy(space, s, Tier::Tau), accuracy(space, s, Tier::Pre),
                                   accuracy(space, s, Tier::DeltaPre)});
    }
    return rows;
}

std::string render_topology(const ApproximationSpace& space, Format format) {
    const Universe& u = space.universe();
    if (format == Format::Json) {
        ordered_json j;
        j["universe"] = u.labels();
        j["subbase"] = family_json(u, space.topo.subbase());
        j["base"] = family_json(u, space.topo.base());
        j["opens"] = family_json(u, space.topo.opens());
        j["closeds"] = family_json(u, space.topo.closeds());
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "subbase (" << space.topo.subbase().size() << "): "
        << family_line(u, space.topo.subbase()) << "\n";
    out << "base    (" << space.topo.base().size() << "): " << family_line(u, space.topo.base())
        << "\n";
    out << "opens   (" << space.topo.opens().size() << "): " << family_line(u, space.topo.opens())
        << "\n";
    out << "closeds (" << space.topo.closeds().size() << "): "
        << family_line(u, space.topo.closeds()) << "\n";
    return out.str();
}

std::string render_families(const ApproximationSpace& space, const std::string& kind,
                            Format format) {
    const Universe& u = space.universe();
    const SetFamily& fam = family_by_kind(space, kind);
    if (format == Format::Json) {
        ordered_json j;
        j["kind"] = kind;
        j["count"] = fam.size();
        j["members"] = family_json(u, fam);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << kind << " (" << fam.size() << "): " << family_line(u, fam) << "\n";
    return out.str();
}

std::string render_approx(const ApproximationSpace& space, const ElementSet& s,
                          const std::vector<Tier>& tiers, Format format) {
    const Universe& u = space.universe();
    if (format == Format::Json) {
        ordered_json j;
        j["set"] = set_json(u, s);
        auto arr = ordered_json::array();
        for (Tier t : tiers) {
            auto a = approximate(space, s, t);
            auto c = classify(space, s, t);
            ordered_json row;
            row["tier"] = tier_name(t);
            row["lower"] = set_json(u, a.lower);
            row["upper"] = set_json(u, a.upper);
            row["accuracy"] = a.accuracy ? ordered_json(a.accuracy->str()) : ordered_json(nullptr);
            row["class"] = category_name(c.category);
            row["exact"] = c.exact;
            arr.push_back(std::move(row));
        }
        j["tiers"] = arr;
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"tier", "lower", "upper", "accuracy", "class", "exact"});
    for (Tier t : tiers) {
        auto a = approximate(space, s, t);
        auto c = classify(space, s, t);
        rows.push_back({tier_name(t), format_set(u, a.lower), format_set(u, a.upper),
                        rational_str(a.accuracy), category_name(c.category),
                        c.exact ? "yes" : "no"});
    }
    return "set " + format_set(u, s) + "\n" + table_text(rows);
}

std::string render_accuracy_table(const ApproximationSpace& space,
                                  const std::vector<AccuracyRow>& rows, Format format) {
    const Universe& u = space.universe();
    if (format == Format::Json) {
        ordered_json j;
        j["universe"] = u.labels();
        auto arr = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["set"] = set_json(u, r.subject);
            row["alpha_tau"] = r.tau.str();
            row["alpha_p"] = r.pre.str();
            row["alpha_dp"] = r.deltap.str();
            arr.push_back(std::move(row));
        }
        j["rows"] = arr;
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> text;
    text.push_back({"set", "alpha_tau", "alpha_p", "alpha_dp"});
    for (const auto& r : rows) {
        text.push_back({format_set(u, r.subject), r.tau.str(), r.pre.str(), r.deltap.str()});
    }
    return table_text(text);
}

std::string render_regions(const ApproximationSpace& space, const RegionReport& report,
                           Format format) {
    const Universe& u = space.universe();
    if (format == Format::Json) {
        ordered_json j;
        j["set"] = set_json(u, report.subject);
        ordered_json areas;
        for (int i = 1; i <= 24; ++i) {
            areas[region_name(i)] = set_json(u, report.areas[static_cast<size_t>(i - 1)]);
        }
        j["areas"] = areas;
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"area", "name", "value"});
    for (int i = 1; i <= 24; ++i) {
        rows.push_back({std::to_string(i), region_name(i),
                        format_set(u, report.areas[static_cast<size_t>(i - 1)])});
    }
    return "set " + format_set(u, report.subject) + "\n" + table_text(rows);
}

std::string render_classify(const ApproximationSpace& space, const ElementSet& s, Format format) {
    return render_approx(space, s, {Tier::Tau, Tier::Pre, Tier::DeltaPre}, format);
}

std::string render_inclusion(const ApproximationSpace& space, const ElementSet& s,
                             const ElementSet& n, const std::vector<Tier>& tiers, Format format) {
    const Universe& u = space.universe();
    if (format == Format::Json) {
        ordered_json j;
        j["set"] = set_json(u, s);
        j["in"] = set_json(u, n);
        auto arr = ordered_json::array();
        for (Tier t : tiers) {
            auto inc = rough_inclusion(space, s, n, t);
            ordered_json row;
            row["tier"] = tier_name(t);
            row["bottom"] = inc.bottom;
            row["top"] = inc.top;
            row["full"] = inc.full;
            arr.push_back(std::move(row));
        }
        j["tiers"] = arr;
        return j.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> rows;
    rows.push_back({"tier", "bottom", "top", "full"});
    for (Tier t : tiers) {
        auto inc = rough_inclusion(space, s, n, t);
        rows.push_back({tier_name(t), inc.bottom ? "yes" : "no", inc.top ? "yes" : "no",
                        inc.full ? "yes" : "no"});
    }
    return "set " + format_set(u, s) + " in " + format_set(u, n) + "\n" + table_text(rows);
}

std::string render_partition(const ApproximationSpace& space, const SetFamily& blocks,
                             Format format) {
    const Universe& u = space.universe();
    if (format == Format::Json) {
        ordered_json j;
        j["blocks"] = family_json(u, blocks);
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "blocks (" << blocks.size() << "): " << family_line(u, blocks) << "\n";
    return out.str();
}

std::string render_audit_report(const AuditReport& report, Format format) {
    if (format == Format::Json) {
        ordered_json j;
        j["spaces_checked"] = report.spaces_checked;
        j["instances_checked"] = report.instances_checked;
        j["guaranteed_violations"] = report.guaranteed_violations.size();
        j["audited_findings"] = report.audited_findings.size();
        return j.dump(2) + "\n";
    }
    std::ostringstream out;
    out << "spaces checked:        " << report.spaces_checked << "\n";
    out << "instances checked:     " << report.instances_checked << "\n";
    out << "guaranteed violations: " << report.guaranteed_violations.size() << "\n";
    out << "audited findings:      " << report.audited_findings.size() << "\n";
    return out.str();
}

}  // namespace roughdp
