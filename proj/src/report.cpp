#include "strata/report.hpp"

#include <sstream>

#include "json.hpp"

namespace strata {

namespace {

using Json = nlohmann::ordered_json;

Json json_int(const Int& v) {
    if (v >= 0 && fits_u64(v) && to_u64(v) <= (std::uint64_t(1) << 53)) return to_u64(v);
    return v.get_str();  // too large for lossless JSON numbers
}

Json component_json(const ComponentReport& cr) {
    Json j;
    j["kind"] = to_string(cr.descriptor.kind);
    if (cr.descriptor.kind == ComponentKind::Torus) j["d"] = cr.descriptor.rotation;
    if (cr.descriptor.kind == ComponentKind::Spin) j["parity"] = cr.descriptor.parity;
    if (cr.descriptor.torus_spin) j["spin"] = *cr.descriptor.torus_spin;
    j["hyperelliptic"] = to_string(cr.descriptor.hyperelliptic);
    if (cr.skipped) {
        j["skipped"] = cr.skip_reason;
        return j;
    }
    j["closed_form_count"] = json_int(cr.closed_form);
    j["oracle_index"] = json_int(cr.oracle_index);
    if (cr.closure_order) j["closure_order"] = json_int(*cr.closure_order);
    j["oracle_mode"] = cr.oracle_mode;
    j["match"] = cr.match;
    if (!cr.generator_names.empty()) j["generators"] = cr.generator_names;
    if (!cr.partial.empty()) {
        Json parts = Json::array();
        for (const auto& p : cr.partial) {
            Json e;
            Json marks = Json::array();
            for (int m : p.marked) marks.push_back(m + 1);  // 1-based outside
            e["marked"] = marks;
            e["count"] = json_int(p.count);
            parts.push_back(e);
        }
        j["partial"] = parts;
    }
    return j;
}

}  // namespace

Report analyze(const Signature& sig, const AnalyzeOptions& opts) {
    Report r;
    r.signature_text = format_signature(sig);
    r.valid = true;
    r.signature = sig;
    r.genus = sig.genus();
    r.h = separatrix_counts(sig);
    r.preds = predicates(sig);

    for (const ComponentDescriptor& c : components(sig)) {
        ComponentReport cr;
        cr.descriptor = c;
        if (c.hyperelliptic == HypFlag::Unknown) {
            cr.skipped = true;
            cr.skip_reason = "unknown hyperelliptic status";
            r.components.push_back(std::move(cr));
            continue;
        }
        cr.closed_form = closed_form_count(c);
        GeneratorSet gs = generator_set(c);
        std::vector<GroupElement> gens;
        gens.reserve(gs.generators.size());
        for (auto& g : gs.generators) {
            gens.push_back(g.value);
            if (opts.list_generators) cr.generator_names.push_back(g.name);
        }
        SubgroupBasis mon = subgroup_from_generators(gs.group.spec, gens);
        cr.oracle_index = mon.index();
        Int order = gs.group.spec.order();
        if (fits_u64(order) && to_u64(order) <= opts.oracle_bound) {
            BruteForceClosure closure(gs.group.spec, gens, opts.oracle_bound);
            cr.closure_order = closure.size();
            cr.oracle_mode = "hnf+closure";
            cr.match = (cr.closed_form == cr.oracle_index) && (*cr.closure_order * cr.oracle_index == order);
        } else {
            cr.oracle_mode = "hnf-only";
            cr.match = (cr.closed_form == cr.oracle_index);
        }
        if (!cr.match) r.all_match = false;
        if (!opts.marked.empty()) {
            cr.partial.push_back({opts.marked, partial_component_count(c, opts.marked)});
        }
        r.components.push_back(std::move(cr));
    }
    return r;
}

Report analyze_text(const std::string& signature_text, const AnalyzeOptions& opts) {
    ValidationResult v = parse_signature(signature_text);
    if (!v.ok()) {
        Report r;
        r.signature_text = signature_text;
        r.valid = false;
        r.errors = v.errors;
        return r;
    }
    return analyze(*v.signature, opts);
}

std::string csv_header() {
    return "signature,genus,kind,d,parity,hyperelliptic,closed_form,oracle_index,closure_order,oracle_mode,match";
}

namespace {

std::string render_text(const Report& r) {
    std::ostringstream os;
    if (!r.valid) {
        os << "signature " << r.signature_text << ": invalid\n";
        for (const auto& e : r.errors) os << "  error: " << e << "\n";
        return os.str();
    }
    os << "signature H(" << r.signature_text << ")  genus " << r.genus << "\n";
    os << "  separatrix counts:";
    for (int h : r.h) os << " " << h;
    os << "\n  stratum components: " << r.components.size() << "\n";
    for (size_t i = 0; i < r.components.size(); ++i) {
        const ComponentReport& cr = r.components[i];
        os << "  [" << (i + 1) << "] " << cr.descriptor.label()
           << "  hyperelliptic=" << to_string(cr.descriptor.hyperelliptic);
        if (cr.skipped) {
            os << "  skipped (" << cr.skip_reason << ")\n";
            continue;
        }
        os << "  closed-form " << cr.closed_form.get_str() << "  oracle " << cr.oracle_index.get_str() << " ("
           << cr.oracle_mode;
        if (cr.closure_order) os << ", subgroup order " << cr.closure_order->get_str();
        os << ")  " << (cr.match ? "match" : "MISMATCH") << "\n";
        for (const auto& p : cr.partial) {
            os << "      marked {";
            for (size_t k = 0; k < p.marked.size(); ++k) os << (k ? "," : "") << (p.marked[k] + 1);
            os << "} -> " << p.count.get_str() << "\n";
        }
    }
    os << (r.all_match ? "all counts match\n" : "COUNT MISMATCH\n");
    return os.str();
}

std::string render_csv(const Report& r) {
    std::ostringstream os;
    if (!r.valid) return os.str();
    for (const ComponentReport& cr : r.components) {
        os << '"' << r.signature_text << "\"," << r.genus << "," << to_string(cr.descriptor.kind) << ",";
        if (cr.descriptor.kind == ComponentKind::Torus) os << cr.descriptor.rotation;
        os << ",";
        if (cr.descriptor.kind == ComponentKind::Spin) os << cr.descriptor.parity;
        os << "," << to_string(cr.descriptor.hyperelliptic) << ",";
        if (!cr.skipped) {
            os << cr.closed_form.get_str() << "," << cr.oracle_index.get_str() << ",";
            if (cr.closure_order) os << cr.closure_order->get_str();
            os << "," << cr.oracle_mode << "," << (cr.match ? "true" : "false");
        } else {
            os << ",,,skipped,";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string render_report(const Report& r, OutputFormat fmt) {
    if (fmt == OutputFormat::Text) return render_text(r);
    if (fmt == OutputFormat::Csv) return render_csv(r);
    Json j;
    j["schema"] = kSchema;
    j["signature"] = r.signature_text;
    j["valid"] = r.valid;
    if (!r.valid) {
        j["errors"] = r.errors;
        return j.dump() + "\n";
    }
    j["degrees"] = r.signature->degrees();
    j["genus"] = r.genus;
    j["separatrix_counts"] = r.h;
    Json preds;
    preds["has_simple_pole"] = r.preds.has_simple_pole;
    preds["poles_are_exactly_two_simple"] = r.preds.poles_are_exactly_two_simple;
    preds["all_degrees_even"] = r.preds.all_degrees_even;
    preds["odd_degree_count"] = r.preds.odd_degree_count;
    preds["hyperelliptic_type"] = r.preds.is_hyperelliptic_type;
    preds["even_type"] = r.preds.is_even_type;
    j["predicates"] = preds;
    j["stratum_component_count"] = r.components.size();
    Json comps = Json::array();
    for (const ComponentReport& cr : r.components) comps.push_back(component_json(cr));
    j["components"] = comps;
    j["all_match"] = r.all_match;
    return j.dump() + "\n";
}

int report_exit_code(const Report& r) {
    if (!r.valid) return 2;
    return r.all_match ? 0 : 1;
}

}  // namespace strata
