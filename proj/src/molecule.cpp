#include "morse/molecule.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace morse {

namespace {

void require_positive(double v, const std::string& mol, const char* field) {
    if (!std::isfinite(v) || v <= 0.0)
        throw std::domain_error("molecule '" + mol + "': " + field +
                                " must be positive and finite");
}

}  // namespace

void validate_molecule(const MoleculeParams& mol) {
    if (mol.name.empty())
        throw std::domain_error("molecule: name must be non-empty");
    require_positive(mol.D_eV, mol.name, "well_depth_D (D_eV)");
    require_positive(mol.alpha, mol.name, "alpha");
    require_positive(mol.eps_eV, mol.name, "energy_scale_eps (eps_eV)");
    require_positive(mol.r0_angstrom, mol.name, "r0 (r0_angstrom)");
}

namespace io {

const MoleculeParams* MoleculeFile::find(const std::string& name) const {
    for (const auto& m : entries)
        if (m.name == name) return &m;
    return nullptr;
}

const MoleculeParams& MoleculeFile::require(const std::string& name) const {
    const MoleculeParams* m = find(name);
    if (!m) throw std::domain_error("unknown molecule '" + name + "'");
    return *m;
}

MoleculeFile builtin_registry() {
    MoleculeFile f;
    f.source_path = "<builtin>";
    MoleculeParams h2;
    h2.name = "H2";
    h2.D_eV = 4.7446;
    h2.alpha = 1.4405;
    h2.eps_eV = 7.5416e-3;
    h2.r0_angstrom = 0.7416;  // literature value; physics enters via eps_eV
    h2.provenance = "built-in; r0 external literature value";
    f.entries.push_back(h2);
    return f;
}

namespace {

void validate_file(const MoleculeFile& f) {
    std::set<std::string> seen;
    for (const auto& m : f.entries) {
        validate_molecule(m);
        if (!seen.insert(m.name).second)
            throw std::runtime_error(f.source_path + ": duplicate molecule name '" +
                                     m.name + "'");
    }
}

double get_number(const nlohmann::json& j, const std::string& mol, const char* key) {
    if (!j.contains(key) || !j[key].is_number())
        throw std::runtime_error("molecule '" + mol + "': missing or non-numeric field '" +
                                 std::string(key) + "'");
    return j[key].get<double>();
}

}  // namespace

MoleculeFile load_molecules(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error(path + ": cannot open for reading");

    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw std::runtime_error(path + ": JSON parse error: " + e.what());
    }

    MoleculeFile f;
    f.source_path = path;
    if (!j.contains("schema_version") || !j["schema_version"].is_number_integer())
        throw std::runtime_error(path + ": missing integer 'schema_version'");
    f.schema_version = j["schema_version"].get<int>();
    if (f.schema_version != 1)
        throw std::runtime_error(path + ": unsupported schema_version " +
                                 std::to_string(f.schema_version));
    if (!j.contains("molecules") || !j["molecules"].is_array())
        throw std::runtime_error(path + ": missing array 'molecules'");

    for (const auto& e : j["molecules"]) {
        MoleculeParams m;
        if (!e.contains("name") || !e["name"].is_string())
            throw std::runtime_error(path + ": molecule entry without string 'name'");
        m.name = e["name"].get<std::string>();
        m.D_eV = get_number(e, m.name, "D_eV");
        m.alpha = get_number(e, m.name, "alpha");
        m.eps_eV = get_number(e, m.name, "eps_eV");
        m.r0_angstrom = get_number(e, m.name, "r0_angstrom");
        if (e.contains("provenance")) m.provenance = e["provenance"].get<std::string>();
        f.entries.push_back(std::move(m));
    }

    try {
        validate_file(f);
    } catch (const std::domain_error& e) {
        throw std::runtime_error(path + ": " + e.what());
    }
    return f;
}

void save_molecules(const MoleculeFile& file, const std::string& path) {
    nlohmann::json j;
    j["schema_version"] = file.schema_version;
    j["molecules"] = nlohmann::json::array();
    for (const auto& m : file.entries) {
        j["molecules"].push_back({{"name", m.name},
                                  {"D_eV", m.D_eV},
                                  {"alpha", m.alpha},
                                  {"eps_eV", m.eps_eV},
                                  {"r0_angstrom", m.r0_angstrom},
                                  {"provenance", m.provenance}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error(path + ": cannot open for writing");
    out << j.dump(2) << "\n";
}

void merge_into(MoleculeFile& dst, const MoleculeFile& src) {
    for (const auto& m : src.entries) {
        if (dst.find(m.name))
            throw std::runtime_error("merge: duplicate molecule name '" + m.name +
                                     "' (from " + src.source_path + ")");
        validate_molecule(m);
        dst.entries.push_back(m);
    }
}

MoleculeFile effective_registry() {
    MoleculeFile f = builtin_registry();
    if (const char* extra = std::getenv("MORSE_MOLECULES")) {
        if (extra[0] != '\0') merge_into(f, load_molecules(extra));
    }
    return f;
}

}  // namespace io
}  // namespace morse
