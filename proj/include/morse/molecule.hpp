#pragma once

#include <string>
#include <vector>

namespace morse {

// Physical inputs for one diatomic species. Energies in eV, lengths in
// Angstrom. eps_eV = hbar^2/(2 m r0^2) is the energy scale that makes the
// radial equation dimensionless; r0 enters the physics only through eps_eV
// and the 1/r0 factor of the wavefunction normalization.
struct MoleculeParams {
    std::string name;
    double D_eV = 0.0;         // well depth
    double alpha = 0.0;        // dimensionless range parameter
    double eps_eV = 0.0;       // hbar^2 / (2 m r0^2)
    double r0_angstrom = 0.0;  // equilibrium separation
    std::string provenance;

    // dimensionless well depth d = D / eps
    double depth() const { return D_eV / eps_eV; }
};

// Throws std::domain_error naming the offending field.
void validate_molecule(const MoleculeParams& mol);

namespace io {

struct MoleculeFile {
    std::vector<MoleculeParams> entries;
    std::string source_path;
    int schema_version = 1;

    const MoleculeParams* find(const std::string& name) const;
    // Throws std::domain_error "unknown molecule ..." when absent.
    const MoleculeParams& require(const std::string& name) const;
};

// The only parameter set shipped by default (H2).
MoleculeFile builtin_registry();

// JSON schema:
//   { "schema_version": 1,
//     "molecules": [ { "name": str, "D_eV": num, "alpha": num,
//                      "eps_eV": num, "r0_angstrom": num,
//                      "provenance": str } ] }
MoleculeFile load_molecules(const std::string& path);
void save_molecules(const MoleculeFile& file, const std::string& path);

// Appends src entries to dst; duplicate names are an error naming the
// duplicate.
void merge_into(MoleculeFile& dst, const MoleculeFile& src);

// builtin registry plus the optional MORSE_MOLECULES file, when set.
MoleculeFile effective_registry();

}  // namespace io
}  // namespace morse
