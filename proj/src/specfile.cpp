#include "ainov/specfile.hpp"

#include <algorithm>
#include <set>

#include "json.hpp"

namespace ainov {

using nlohmann::json;

namespace {

std::pair<int, int> line_col(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& require(const json& j, const char* key, const char* where) {
    auto it = j.find(key);
    if (it == j.end())
        throw SpecError(std::string("missing \"") + key + "\" in " + where + " section");
    return *it;
}

Rat rat_field(const json& j, const char* where) {
    if (!j.is_string()) throw SpecError(std::string(where) + ": rationals must be \"p/q\" strings");
    try {
        return rat_from_string(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        throw SpecError(std::string(where) + ": " + e.what());
    }
}

RatMatrix rat_matrix(const json& j, const char* where) {
    if (!j.is_array()) throw SpecError(std::string(where) + ": expected a matrix (array of rows)");
    RatMatrix m;
    for (const auto& row : j) {
        if (!row.is_array()) throw SpecError(std::string(where) + ": expected a matrix row");
        RatVector r;
        for (const auto& v : row) r.push_back(rat_field(v, where));
        m.push_back(std::move(r));
    }
    return m;
}

}  // namespace

SpecFile parse_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        auto [line, col] = line_col(text, e.byte > 0 ? e.byte - 1 : 0);
        throw SpecError(std::string("JSON parse error: ") + e.what(), line, col);
    }
    if (!doc.is_object()) throw SpecError("spec document must be a JSON object");

    SpecFile spec;
    spec.format_version = doc.value("format_version", 1);
    if (spec.format_version != 1)
        throw SpecError("unsupported format_version " + std::to_string(spec.format_version));

    const json& ring = require(doc, "ring", "document");
    Rat energy = rat_field(require(ring, "energy_cutoff", "ring"), "ring.energy_cutoff");
    if (!require(ring, "arity_cutoff", "ring").is_number_integer())
        throw SpecError("ring.arity_cutoff must be an integer");
    int arity = ring["arity_cutoff"].get<int>();
    if (energy <= 0) throw SpecError("ring.energy_cutoff must be positive");
    if (arity < 0) throw SpecError("ring.arity_cutoff must be nonnegative");
    spec.cutoffs = Cutoffs(arity, energy);

    std::set<std::string> labels;
    if (doc.contains("module")) {
        const json& mod = doc["module"];
        const json& basis = require(mod, "basis", "module");
        if (!basis.is_array() || basis.empty()) throw SpecError("module section has no basis");
        for (const auto& b : basis) {
            std::string label = require(b, "label", "module.basis").get<std::string>();
            if (!require(b, "degree", "module.basis").is_number_integer())
                throw SpecError("basis degree must be an integer");
            int degree = b["degree"].get<int>();
            if (!labels.insert(label).second) throw SpecError("duplicate basis label: " + label);
            spec.basis.emplace_back(label, degree);
        }
    }
    auto check_label = [&](const std::string& label, const char* where) {
        if (!labels.count(label))
            throw SpecError(std::string(where) + ": reference to undeclared label \"" + label + "\"");
    };

    if (doc.contains("ops")) {
        if (!doc["ops"].is_array()) throw SpecError("ops section must be an array");
        for (const auto& op : doc["ops"]) {
            SpecFile::OpEntry entry;
            if (!require(op, "arity", "ops").is_number_integer())
                throw SpecError("op arity must be an integer");
            entry.arity = op["arity"].get<int>();
            const json& inputs = require(op, "inputs", "ops");
            if (!inputs.is_array()) throw SpecError("op inputs must be an array of labels");
            for (const auto& in : inputs) {
                std::string label = in.get<std::string>();
                check_label(label, "ops.inputs");
                entry.inputs.push_back(label);
            }
            if (static_cast<int>(entry.inputs.size()) != entry.arity)
                throw SpecError("op input count disagrees with its arity");
            const json& output = require(op, "output", "ops");
            if (!output.is_object()) throw SpecError("op output must be an object label → scalar");
            for (auto it = output.begin(); it != output.end(); ++it) {
                check_label(it.key(), "ops.output");
                if (!it.value().is_string()) throw SpecError("op output scalars must be strings");
                try {
                    Nov::parse(it.value().get<std::string>(), energy);
                } catch (const std::invalid_argument& e) {
                    throw SpecError(std::string("ops.output scalar: ") + e.what());
                }
                entry.output.emplace_back(it.key(), it.value().get<std::string>());
            }
            spec.ops.push_back(std::move(entry));
        }
    }

    if (doc.contains("pairing")) {
        const json& pj = doc["pairing"];
        PairingSection pairing;
        if (!require(pj, "n", "pairing").is_number_integer())
            throw SpecError("pairing.n must be an integer");
        pairing.n = pj["n"].get<int>();
        const json& entries = require(pj, "entries", "pairing");
        if (!entries.is_array()) throw SpecError("pairing.entries must be an array");
        for (const auto& e : entries) {
            std::string x = require(e, "x", "pairing.entries").get<std::string>();
            std::string y = require(e, "y", "pairing.entries").get<std::string>();
            std::string scalar = require(e, "scalar", "pairing.entries").get<std::string>();
            check_label(x, "pairing.entries");
            check_label(y, "pairing.entries");
            try {
                Nov::parse(scalar, energy);
            } catch (const std::invalid_argument& ex) {
                throw SpecError(std::string("pairing scalar: ") + ex.what());
            }
            pairing.entries.emplace_back(x, y, scalar);
        }
        spec.pairing = std::move(pairing);
    }

    if (doc.contains("geometry")) {
        const json& gj = doc["geometry"];
        GeometrySection geo;
        if (gj.contains("metric")) {
            RatMatrix m = rat_matrix(gj["metric"], "geometry.metric");
            if (m.size() != 4) throw SpecError("geometry.metric must be 4x4");
            for (const auto& row : m)
                if (row.size() != 4) throw SpecError("geometry.metric must be 4x4");
            geo.metric = std::move(m);
        }
        if (gj.contains("form")) {
            const json& fj = gj["form"];
            if (!fj.is_array() || fj.size() != 6)
                throw SpecError("geometry.form must have 6 components (e12,e13,e14,e23,e24,e34)");
            TwoForm w;
            for (int i = 0; i < 6; ++i) w[i] = rat_field(fj[i], "geometry.form");
            geo.form = w;
        }
        if (gj.contains("plane")) {
            const json& pj = gj["plane"];
            const json& vectors = require(pj, "vectors", "geometry.plane");
            if (!vectors.is_array() || vectors.size() != 4)
                throw SpecError("geometry.plane.vectors must contain 4 vectors");
            FourPlane plane;
            for (int a = 0; a < 4; ++a) {
                if (!vectors[a].is_array() || vectors[a].size() != 8)
                    throw SpecError("plane vectors live in R^8 (x1,y1,...,x4,y4)");
                plane.span[a].clear();
                for (const auto& c : vectors[a]) plane.span[a].push_back(rat_field(c, "plane"));
            }
            plane.positively_oriented = pj.value("positively_oriented", true);
            geo.plane = std::move(plane);
        }
        if (gj.contains("lattice")) {
            RatMatrix m = rat_matrix(gj["lattice"], "geometry.lattice");
            IntMatrix F;
            for (const auto& row : m) {
                std::vector<Int> r;
                for (const auto& v : row) {
                    if (!rat_is_integer(v)) throw SpecError("geometry.lattice entries must be integers");
                    r.push_back(Int(v.get_num()));
                }
                F.push_back(std::move(r));
            }
            geo.lattice = std::move(F);
        }
        spec.geometry = std::move(geo);
    }
    return spec;
}

std::string serialize_spec(const SpecFile& spec) {
    json doc;
    doc["format_version"] = spec.format_version;
    doc["ring"] = {{"energy_cutoff", rat_to_string(spec.cutoffs.energy)},
                   {"arity_cutoff", spec.cutoffs.max_arity}};
    if (!spec.basis.empty()) {
        json basis = json::array();
        for (const auto& [label, degree] : spec.basis)
            basis.push_back({{"label", label}, {"degree", degree}});
        doc["module"] = {{"basis", basis}};
    }
    if (!spec.ops.empty()) {
        json ops = json::array();
        auto sorted = spec.ops;
        std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
            if (a.arity != b.arity) return a.arity < b.arity;
            return a.inputs < b.inputs;
        });
        for (const auto& entry : sorted) {
            json output = json::object();
            for (const auto& [label, scalar] : entry.output) output[label] = scalar;
            ops.push_back({{"arity", entry.arity}, {"inputs", entry.inputs}, {"output", output}});
        }
        doc["ops"] = ops;
    }
    if (spec.pairing) {
        json entries = json::array();
        auto sorted = spec.pairing->entries;
        std::sort(sorted.begin(), sorted.end());
        for (const auto& [x, y, scalar] : sorted)
            entries.push_back({{"x", x}, {"y", y}, {"scalar", scalar}});
        doc["pairing"] = {{"n", spec.pairing->n}, {"entries", entries}};
    }
    if (spec.geometry) {
        json geo = json::object();
        auto matrix_json = [](const RatMatrix& m) {
            json rows = json::array();
            for (const auto& row : m) {
                json r = json::array();
                for (const auto& v : row) r.push_back(rat_to_string(v));
                rows.push_back(r);
            }
            return rows;
        };
        if (spec.geometry->metric) geo["metric"] = matrix_json(*spec.geometry->metric);
        if (spec.geometry->form) {
            json f = json::array();
            for (const auto& v : *spec.geometry->form) f.push_back(rat_to_string(v));
            geo["form"] = f;
        }
        if (spec.geometry->plane) {
            json vectors = json::array();
            for (const auto& v : spec.geometry->plane->span) {
                json r = json::array();
                for (const auto& c : v) r.push_back(rat_to_string(c));
                vectors.push_back(r);
            }
            geo["plane"] = {{"vectors", vectors},
                            {"positively_oriented", spec.geometry->plane->positively_oriented}};
        }
        if (spec.geometry->lattice) {
            json rows = json::array();
            for (const auto& row : *spec.geometry->lattice) {
                json r = json::array();
                for (const auto& v : row) r.push_back(v.get_str());
                rows.push_back(r);
            }
            geo["lattice"] = rows;
        }
        doc["geometry"] = geo;
    }
    return doc.dump(2) + "\n";
}

ModulePtr build_module(const SpecFile& spec) {
    if (spec.basis.empty()) throw SpecError("spec has no module section");
    return std::make_shared<GradedModule>(spec.basis);
}

AInftyStructure build_structure(const SpecFile& spec) {
    ModulePtr M = build_module(spec);
    AInftyStructure S(M, spec.cutoffs);
    const Rat& E = spec.cutoffs.energy;
    for (const auto& entry : spec.ops) {
        if (entry.arity > spec.cutoffs.max_arity)
            throw SpecError("op arity " + std::to_string(entry.arity) + " exceeds ring.arity_cutoff");
        std::vector<LabelId> inputs;
        for (const auto& label : entry.inputs) inputs.push_back(M->id(label));
        Element out(M, E);
        for (const auto& [label, scalar] : entry.output)
            out.add_term(M->id(label), Nov::parse(scalar, E));
        try {
            S.op_mut(entry.arity).add_to_entry(inputs, out);
        } catch (const std::invalid_argument& e) {
            throw SpecError(std::string("ops entry: ") + e.what());
        }
    }
    // Run the set_op validations (m₀ gappedness, shifts).
    std::vector<int> arities;
    for (const auto& [k, m] : S.ops()) arities.push_back(k);
    for (int k : arities) {
        MultilinearMap m = S.op(k);
        try {
            S.set_op(k, std::move(m));
        } catch (const std::invalid_argument& e) {
            throw SpecError(std::string("ops validation: ") + e.what());
        }
    }
    return S;
}

std::optional<CyclicPairing> build_pairing(const SpecFile& spec, const ModulePtr& module) {
    if (!spec.pairing) return std::nullopt;
    CyclicPairing Q(module, spec.pairing->n, spec.cutoffs.energy);
    for (const auto& [x, y, scalar] : spec.pairing->entries) {
        try {
            Q.set_entry(module->id(x), module->id(y), Nov::parse(scalar, spec.cutoffs.energy));
        } catch (const std::invalid_argument& e) {
            throw SpecError(std::string("pairing entry (") + x + "," + y + "): " + e.what());
        }
    }
    return Q;
}

SpecFile spec_from_structure(const AInftyStructure& S, const CyclicPairing* Q) {
    SpecFile spec;
    spec.cutoffs = S.cutoffs();
    const auto& M = *S.module();
    for (LabelId i = 0; i < M.rank(); ++i) spec.basis.emplace_back(M.label(i), M.degree(i));
    for (const auto& [k, m] : S.ops()) {
        for (const auto& [inputs, out] : m.entries()) {
            SpecFile::OpEntry entry;
            entry.arity = k;
            for (LabelId id : inputs) entry.inputs.push_back(M.label(id));
            for (const auto& [id, c] : out.terms()) entry.output.emplace_back(M.label(id), c.to_string());
            spec.ops.push_back(std::move(entry));
        }
    }
    if (Q) {
        PairingSection pairing;
        pairing.n = Q->n();
        for (const auto& [key, value] : Q->entries()) {
            if (key.first > key.second) continue;  // one canonical entry per unordered pair
            pairing.entries.emplace_back(M.label(key.first), M.label(key.second), value.to_string());
        }
        spec.pairing = std::move(pairing);
    }
    return spec;
}

Element parse_element(const std::string& json_text, const ModulePtr& module, const Rat& cutoff) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SpecError(std::string("element literal parse error: ") + e.what());
    }
    if (!doc.is_object()) throw SpecError("element literal must be an object label → scalar");
    Element out(module, cutoff);
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        if (!module->has_label(it.key()))
            throw SpecError("element literal references unknown label \"" + it.key() + "\"");
        if (!it.value().is_string()) throw SpecError("element literal scalars must be strings");
        try {
            out.add_term(module->id(it.key()), Nov::parse(it.value().get<std::string>(), cutoff));
        } catch (const std::invalid_argument& e) {
            throw SpecError(std::string("element literal scalar: ") + e.what());
        }
    }
    return out;
}

}  // namespace ainov
