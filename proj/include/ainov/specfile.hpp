#pragma once

#include <optional>

#include "ainov/calibrated.hpp"
#include "ainov/cyclic.hpp"

namespace ainov {

/// Input-file error with position information for parse failures
/// (line/column are 0 for semantic errors detected after parsing).
struct SpecError : std::runtime_error {
    int line{0};
    int column{0};
    SpecError(const std::string& message, int line_ = 0, int column_ = 0)
        : std::runtime_error(message), line(line_), column(column_) {}
};

struct PairingSection {
    int n{0};
    // Entries (x, y, scalar text), one per unordered pair, canonical order.
    std::vector<std::tuple<std::string, std::string, std::string>> entries;
};

struct GeometrySection {
    std::optional<RatMatrix> metric;   // 4×4
    std::optional<TwoForm> form;
    std::optional<FourPlane> plane;
    std::optional<IntMatrix> lattice;
};

/// Parsed spec document. Restricted JSON: rationals are "p/q" strings, all
/// Novikov scalars use the canonical textual rendering, labels are declared
/// in the module section before use.
struct SpecFile {
    int format_version{1};
    Cutoffs cutoffs;
    std::vector<std::pair<std::string, int>> basis;  // empty: no module section
    struct OpEntry {
        int arity{0};
        std::vector<std::string> inputs;
        std::vector<std::pair<std::string, std::string>> output;  // label → scalar text
    };
    std::vector<OpEntry> ops;
    std::optional<PairingSection> pairing;
    std::optional<GeometrySection> geometry;
};

/// Parse and validate (duplicate labels, dangling references, negative
/// energies). Parse errors carry line/column.
SpecFile parse_spec(const std::string& text);

/// Canonical serialization: sorted keys, two-space indent, trailing newline.
/// parse(serialize(parse(t))) equals parse(t), and serializer output is byte
/// stable.
std::string serialize_spec(const SpecFile& spec);

/// Builders into library objects. These throw SpecError on semantic misuse
/// (missing module, unknown labels, bad degrees).
ModulePtr build_module(const SpecFile& spec);
AInftyStructure build_structure(const SpecFile& spec);
std::optional<CyclicPairing> build_pairing(const SpecFile& spec, const ModulePtr& module);

/// Spec document for a structure (with optional pairing), in canonical form.
SpecFile spec_from_structure(const AInftyStructure& S, const CyclicPairing* Q = nullptr);

/// Element literal {"label": "scalar", ...} used by --b/--x flags.
Element parse_element(const std::string& json_text, const ModulePtr& module, const Rat& cutoff);

}  // namespace ainov
