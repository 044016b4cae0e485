#include "qfci/integral_io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "qfci/errors.hpp"

namespace qfci {

namespace {

// Fortran writers emit D exponents; normalize before strtod.
double parse_real(std::string token, const std::string& context)
{
    for (char& c : token) {
        if (c == 'D' || c == 'd') c = 'e';
    }
    std::size_t pos = 0;
    double value = 0.0;
    try {
        value = std::stod(token, &pos);
    } catch (const std::exception&) {
        throw ParseError("bad numeric value '" + token + "' in " + context);
    }
    if (pos != token.size()) {
        throw ParseError("trailing characters in numeric value '" + token + "' in " + context);
    }
    return value;
}

std::string upper(std::string s)
{
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    return s;
}

struct FcidumpHeader {
    int norb = -1;
    int nelec = -1;
    int ms2 = 0;
};

// Reads the &FCI namelist, consuming lines up to and including the
// terminator. Array-valued keys (ORBSYM) are skipped.
FcidumpHeader parse_namelist(std::istream& in, int& line_no)
{
    std::string text;
    std::string line;
    bool terminated = false;
    while (std::getline(in, line)) {
        ++line_no;
        std::string u = upper(line);
        auto slash = u.find('/');
        auto amp_end = u.find("&END");
        if (slash != std::string::npos || amp_end != std::string::npos) {
            text += line.substr(0, std::min(slash, amp_end));
            terminated = true;
            break;
        }
        text += line;
        text += ' ';
    }
    if (!terminated) {
        throw ParseError("FCIDUMP header not terminated by '/' or '&END' (read " +
                         std::to_string(line_no) + " lines)");
    }
    const std::string where = " in header (lines 1-" + std::to_string(line_no) + ")";

    std::string u = upper(text);
    auto start = u.find("&FCI");
    if (start == std::string::npos) throw ParseError("missing &FCI at line 1");
    u = u.substr(start + 4);
    for (char& c : u) {
        if (c == ',') c = ' ';
    }

    FcidumpHeader header;
    std::istringstream hs(u);
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        std::string key = eq == std::string::npos ? tok : tok.substr(0, eq);
        std::string val = eq == std::string::npos ? "" : tok.substr(eq + 1);
        if (val.empty() && (key == "NORB" || key == "NELEC" || key == "MS2")) {
            throw ParseError("FCIDUMP key " + key + " has no value" + where);
        }
        try {
            if (key == "NORB") header.norb = std::stoi(val);
            else if (key == "NELEC") header.nelec = std::stoi(val);
            else if (key == "MS2") header.ms2 = std::stoi(val);
        } catch (const std::exception&) {
            throw ParseError("bad value for FCIDUMP key " + key + where);
        }
    }
    if (header.norb <= 0) throw ParseError("missing or invalid NORB" + where);
    if (header.nelec < 0) throw ParseError("missing NELEC" + where);
    return header;
}

}  // namespace

MolecularHamiltonian parse_fcidump(std::istream& in)
{
    int line_no = 0;
    FcidumpHeader header = parse_namelist(in, line_no);
    const int norb = header.norb;

    double core = 0.0;
    std::map<std::pair<int, int>, double> h_spatial;            // 0-based
    std::map<std::array<int, 4>, double> g_chemist;             // 0-based (ij|kl)

    std::string line;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string vtok;
        if (!(ls >> vtok)) continue;  // blank line
        long i = 0, j = 0, k = 0, l = 0;
        if (!(ls >> i >> j >> k >> l)) {
            throw ParseError("malformed integral record at line " + std::to_string(line_no));
        }
        const std::string ctx = "line " + std::to_string(line_no);
        double value = parse_real(vtok, ctx);
        for (long idx : {i, j, k, l}) {
            if (idx < 0 || idx > norb) {
                throw ValidationError("orbital index " + std::to_string(idx) +
                                      " out of range at " + ctx);
            }
        }
        if (i == 0 && j == 0 && k == 0 && l == 0) {
            core = value;
        } else if (k == 0 && l == 0) {
            if (i == 0 || j == 0) {
                throw ValidationError("one-electron record with zero index at " + ctx);
            }
            h_spatial[{int(i) - 1, int(j) - 1}] = value;
            h_spatial[{int(j) - 1, int(i) - 1}] = value;
        } else {
            if (i == 0 || j == 0 || k == 0 || l == 0) {
                throw ValidationError("two-electron record with zero index at " + ctx);
            }
            const int a = int(i) - 1, b = int(j) - 1, c = int(k) - 1, d = int(l) - 1;
            // 8-fold symmetry of real chemist integrals
            const std::array<std::array<int, 4>, 8> perms{{{a, b, c, d},
                                                           {b, a, c, d},
                                                           {a, b, d, c},
                                                           {b, a, d, c},
                                                           {c, d, a, b},
                                                           {d, c, a, b},
                                                           {c, d, b, a},
                                                           {d, c, b, a}}};
            for (const auto& p : perms) g_chemist[p] = value;
        }
    }

    MolecularHamiltonian out;
    out.n_spin_orbitals = 2 * norb;
    out.n_electrons = header.nelec;
    out.core_energy = core;
    out.is_relativistic = false;

    for (const auto& [ij, value] : h_spatial) {
        for (int spin = 0; spin < 2; ++spin) {
            out.set_one_body(2 * ij.first + spin, 2 * ij.second + spin, {value, 0.0});
        }
    }
    // chemist (ij|kl) -> physicist <PQ|RS> = (PR|QS) with matching spins on
    // the (P,R) and (Q,S) legs
    for (const auto& [ijkl, value] : g_chemist) {
        const auto [i, j, k, l] = ijkl;
        for (int s1 = 0; s1 < 2; ++s1) {
            for (int s2 = 0; s2 < 2; ++s2) {
                out.set_two_body(2 * i + s1, 2 * k + s2, 2 * j + s1, 2 * l + s2,
                                 {value, 0.0});
            }
        }
    }
    out.validate();
    return out;
}

namespace {

struct KeyValues {
    int norb = -1;
    int nelec = 0;
    double core = 0.0;
};

KeyValues parse_cham_header(const std::string& line)
{
    std::istringstream hs(line);
    std::string magic;
    hs >> magic;
    if (magic != "CHAM") throw ParseError("missing CHAM header");
    KeyValues kv;
    std::string tok;
    while (hs >> tok) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad CHAM header token '" + tok + "'");
        std::string key = tok.substr(0, eq);
        std::string val = tok.substr(eq + 1);
        if (key == "norb") kv.norb = std::stoi(val);
        else if (key == "nelec") kv.nelec = std::stoi(val);
        else if (key == "core") kv.core = parse_real(val, "CHAM header");
        else throw ParseError("unknown CHAM header key '" + key + "'");
    }
    if (kv.norb <= 0) throw ParseError("CHAM header missing norb");
    return kv;
}

constexpr double kSymmetryTol = 1e-10;

void place(std::map<std::array<int, 4>, Complex>& g, const std::array<int, 4>& key,
           Complex value, bool explicit_record)
{
    auto it = g.find(key);
    if (it == g.end()) {
        g[key] = value;
        return;
    }
    if (std::abs(it->second - value) > kSymmetryTol) {
        throw ValidationError("two-electron symmetry violation at g(" +
                              std::to_string(key[0]) + "," + std::to_string(key[1]) + "," +
                              std::to_string(key[2]) + "," + std::to_string(key[3]) + ")");
    }
    if (explicit_record) it->second = value;
}

}  // namespace

MolecularHamiltonian parse_cham(std::istream& in)
{
    std::string line;
    int line_no = 0;
    do {
        if (!std::getline(in, line)) throw ParseError("empty CHAM input");
        ++line_no;
    } while (line.find_first_not_of(" \t\r\n") == std::string::npos);

    KeyValues kv = parse_cham_header(line);

    MolecularHamiltonian out;
    out.n_spin_orbitals = kv.norb;
    out.n_electrons = kv.nelec;
    out.core_energy = kv.core;
    out.is_relativistic = true;

    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string tag;
        if (!(ls >> tag)) continue;
        const std::string ctx = "line " + std::to_string(line_no);
        if (tag == "h") {
            int p = 0, q = 0;
            std::string re, im;
            if (!(ls >> p >> q >> re >> im)) {
                throw ParseError("malformed h record at " + ctx);
            }
            Complex v{parse_real(re, ctx), parse_real(im, ctx)};
            auto it = out.h.find({p, q});
            if (it != out.h.end() && std::abs(it->second - v) > kSymmetryTol) {
                throw ValidationError("one-electron Hermiticity violation at " + ctx);
            }
            out.h[{p, q}] = v;
            auto partner = out.h.find({q, p});
            if (partner == out.h.end()) {
                out.h[{q, p}] = std::conj(v);
            } else if (std::abs(partner->second - std::conj(v)) > kSymmetryTol) {
                throw ValidationError("one-electron Hermiticity violation at " + ctx);
            }
        } else if (tag == "g") {
            int p = 0, q = 0, r = 0, s = 0;
            std::string re, im;
            if (!(ls >> p >> q >> r >> s >> re >> im)) {
                throw ParseError("malformed g record at " + ctx);
            }
            Complex v{parse_real(re, ctx), parse_real(im, ctx)};
            place(out.g, {p, q, r, s}, v, true);
            place(out.g, {q, p, s, r}, v, false);                // particle exchange
            place(out.g, {r, s, p, q}, std::conj(v), false);     // Hermiticity
            place(out.g, {s, r, q, p}, std::conj(v), false);
        } else {
            throw ParseError("unknown record tag '" + tag + "' at " + ctx);
        }
    }
    out.validate(kSymmetryTol);
    return out;
}

void write_cham(std::ostream& out, const MolecularHamiltonian& h)
{
    char buf[128];
    std::snprintf(buf, sizeof buf, "CHAM norb=%d nelec=%d core=%.17g\n",
                  h.n_spin_orbitals, h.n_electrons, h.core_energy);
    out << buf;
    for (const auto& [pq, v] : h.h) {
        std::snprintf(buf, sizeof buf, "h %d %d %.17g %.17g\n", pq.first, pq.second,
                      v.real(), v.imag());
        out << buf;
    }
    for (const auto& [pqrs, v] : h.g) {
        std::snprintf(buf, sizeof buf, "g %d %d %d %d %.17g %.17g\n", pqrs[0], pqrs[1],
                      pqrs[2], pqrs[3], v.real(), v.imag());
        out << buf;
    }
}

MolecularHamiltonian parse_hamiltonian_file(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path.string());
    std::string first;
    if (!(in >> first)) throw ParseError("empty file " + path.string());
    in.seekg(0);
    if (first == "CHAM") return parse_cham(in);
    if (!first.empty() && first[0] == '&') {
        MolecularHamiltonian h = parse_fcidump(in);
        return h;
    }
    throw ParseError(path.string() + ": unrecognized integral format");
}

}  // namespace qfci
