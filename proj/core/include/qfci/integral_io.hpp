#pragma once

#include <filesystem>
#include <iosfwd>

#include "qfci/hamiltonian.hpp"

namespace qfci {

// Standard FCIDUMP: namelist header (&FCI NORB=..., NELEC=..., MS2=...,
// closed by "/" or "&END"), then records "value i j k l" with 1-based
// spatial-orbital indices in the chemist (ij|kl) convention. The 0 0 0 0
// record carries the core energy. Spatial integrals are expanded onto
// interleaved spin orbitals and converted to the physicist convention,
// unfolding the 8-fold permutational symmetry.
MolecularHamiltonian parse_fcidump(std::istream& in);

// Complex-integral format for relativistic (Kramers-pair) Hamiltonians:
//   CHAM norb=<spin orbitals> nelec=<n> [core=<energy>]
//   h p q re im
//   g p q r s re im
// 0-based spin-orbital/bispinor indices, physicist convention, 4-fold
// symmetry (g_pqrs = g_qpsr = conj(g_rspq)) unfolded and verified.
MolecularHamiltonian parse_cham(std::istream& in);

// Round-trip serialization of any MolecularHamiltonian in the CHAM format
// with 17 significant digits (bit-exact for IEEE doubles).
void write_cham(std::ostream& out, const MolecularHamiltonian& h);

// Dispatches on the leading token ("&FCI..." vs "CHAM").
MolecularHamiltonian parse_hamiltonian_file(const std::filesystem::path& path);

}  // namespace qfci
