// Regenerates the shipped fixture files in canonical serialized form.
// Usage: make_fixtures <output-dir>

#include <fstream>
#include <iostream>

#include "json.hpp"

#include "ainov/models.hpp"
#include "ainov/specfile.hpp"

using namespace ainov;

namespace {

void write(const std::string& dir, const std::string& name, const std::string& content) {
    std::ofstream out(dir + "/" + name, std::ios::binary);
    out << content;
    std::cout << name << " (" << content.size() << " bytes)\n";
}

void write_spec(const std::string& dir, const std::string& name, const SpecFile& spec) {
    write(dir, name, serialize_spec(spec));
}

std::string geometry_doc(const std::function<void(nlohmann::json&)>& fill) {
    nlohmann::json doc;
    doc["format_version"] = 1;
    doc["ring"] = {{"energy_cutoff", "3"}, {"arity_cutoff", 2}};
    nlohmann::json geo = nlohmann::json::object();
    fill(geo);
    doc["geometry"] = geo;
    return doc.dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: make_fixtures <output-dir>\n";
        return 1;
    }
    std::string dir = argv[1];
    const Cutoffs cut6(6, Rat(3));
    const Cutoffs cut4(4, Rat(3));

    // The H*(T^4) exterior model with its trace pairing.
    CyclicStructure t4 = frobenius_cyclic(models::exterior_algebra(4), 4, cut6);
    write_spec(dir, "ext4_t4.json", spec_from_structure(t4.S, &t4.Q));

    // Single-constant-negated mutant of the same model.
    {
        AInftyStructure S = t4.S;
        auto M = S.module();
        MultilinearMap m2 = S.op(2);
        std::vector<LabelId> key{M->id("e1"), M->id("e2")};
        m2.set_entry(key, -m2.entry(key));
        S.set_op(2, std::move(m2));
        write_spec(dir, "ext4_t4_mutant.json", spec_from_structure(S, &t4.Q));
    }

    // The curved (u,v) toy, no pairing.
    write_spec(dir, "uv_toy.json", spec_from_structure(models::uv_toy(cut4)));

    // Definite surface-like models.
    CyclicStructure s2 = frobenius_cyclic(models::graded_surface_like(0, {{Rat(1)}}), 4, cut4);
    write_spec(dir, "definite_s2.json", spec_from_structure(s2.S, &s2.Q));
    CyclicStructure b2 = frobenius_cyclic(models::graded_surface_like(2, {{Rat(1)}}), 4, Cutoffs(5, Rat(3)));
    write_spec(dir, "definite_b2.json", spec_from_structure(b2.S, &b2.Q));

    // Completion of the curved toy: nonzero m0, hyperbolic degree-2 block.
    CyclicStructure uvc = cyclic_completion(models::uv_toy(cut4), 4);
    write_spec(dir, "curved_completion.json", spec_from_structure(uvc.S, &uvc.Q));

    // Geometry fixtures.
    write(dir, "hodge_diag4.json", geometry_doc([](nlohmann::json& geo) {
              geo["metric"] = {{"4", "0", "0", "0"},
                               {"0", "1", "0", "0"},
                               {"0", "0", "1", "0"},
                               {"0", "0", "0", "1"}};
              geo["form"] = {"1", "0", "0", "0", "0", "0"};
          }));
    write(dir, "cayley_slag.json", geometry_doc([](nlohmann::json& geo) {
              geo["plane"] = {{"vectors",
                               {{"1", "0", "0", "0", "0", "0", "0", "0"},
                                {"0", "0", "1", "0", "0", "0", "0", "0"},
                                {"0", "0", "0", "0", "1", "0", "0", "0"},
                                {"0", "0", "0", "0", "0", "0", "1", "0"}}},
                              {"positively_oriented", true}};
          }));
    write(dir, "cayley_complex_plane.json", geometry_doc([](nlohmann::json& geo) {
              geo["plane"] = {{"vectors",
                               {{"1", "0", "0", "0", "0", "0", "0", "0"},
                                {"0", "1", "0", "0", "0", "0", "0", "0"},
                                {"0", "0", "1", "0", "0", "0", "0", "0"},
                                {"0", "0", "0", "1", "0", "0", "0", "0"}}},
                              {"positively_oriented", true}};
          }));
    auto matrix = [](std::vector<std::vector<std::string>> rows) {
        nlohmann::json out = nlohmann::json::array();
        for (const auto& row : rows) {
            nlohmann::json r = nlohmann::json::array();
            for (const auto& v : row) r.push_back(v);
            out.push_back(r);
        }
        return out;
    };
    write(dir, "lattice_2111.json", geometry_doc([&](nlohmann::json& geo) {
              geo["lattice"] = matrix({{"2", "1"}, {"1", "1"}});
          }));
    write(dir, "lattice_indefinite.json", geometry_doc([&](nlohmann::json& geo) {
              geo["lattice"] = matrix({{"1", "0"}, {"0", "-1"}});
          }));

    // Deliberately malformed fixture: negative energy exponent.
    {
        nlohmann::json doc;
        doc["format_version"] = 1;
        doc["ring"] = {{"energy_cutoff", "3"}, {"arity_cutoff", 2}};
        doc["module"] = {{"basis", {{{"label", "u"}, {"degree", 1}}, {{"label", "v"}, {"degree", 2}}}}};
        doc["ops"] = {{{"arity", 0}, {"inputs", nlohmann::json::array()},
                       {"output", {{"v", "1*T^(-1/2)"}}}}};
        write(dir, "bad_negative_energy.json", doc.dump(2) + "\n");
    }
    return 0;
}
