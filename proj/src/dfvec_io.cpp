#include "dfq/dfvec_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace dfq {

namespace {

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string to_dfvec(const StateVector& psi) {
    std::string out = "dfvec 1 " + std::to_string(psi.n_qubits()) + "\n";
    for (std::uint64_t k = 0; k < psi.dim(); ++k) {
        const Complex a = psi.amp(k);
        if (a == Complex{0.0, 0.0}) continue;
        out += to_bitstring(k, psi.n_qubits());
        out += ' ';
        out += format_number(a.real());
        out += ' ';
        out += format_number(a.imag());
        out += '\n';
    }
    return out;
}

StateVector parse_dfvec(std::istream& in) {
    std::string line;
    int lineno = 1;
    if (!std::getline(in, line)) {
        throw ParseError(1, "missing header");
    }
    std::istringstream header(line);
    std::string magic;
    int version = 0;
    int n_qubits = 0;
    std::string extra;
    if (!(header >> magic >> version >> n_qubits) || magic != "dfvec" ||
        header >> extra) {
        throw ParseError(1, "malformed header, expected 'dfvec 1 <n_qubits>'");
    }
    if (version != 1) {
        throw ParseError(1, "unsupported dfvec version " + std::to_string(version));
    }
    if (n_qubits < 1 || n_qubits > kMaxQubits) {
        throw ParseError(1, "n_qubits out of range 1.." + std::to_string(kMaxQubits));
    }

    std::vector<Complex> amps(std::uint64_t{1} << n_qubits, Complex{0.0, 0.0});
    std::vector<bool> seen(amps.size(), false);
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty()) continue;
        std::istringstream row(line);
        std::string bits;
        double re = 0.0;
        double im = 0.0;
        if (!(row >> bits >> re >> im) || row >> extra) {
            throw ParseError(lineno, "expected '<bitstring> <re> <im>'");
        }
        if (static_cast<int>(bits.size()) != n_qubits) {
            throw ParseError(lineno, "bitstring length does not match n_qubits");
        }
        std::uint64_t index = 0;
        for (char c : bits) {
            if (c != '0' && c != '1') {
                throw ParseError(lineno, "bitstring contains characters other than 0/1");
            }
            index = (index << 1) | static_cast<std::uint64_t>(c == '1');
        }
        if (seen[index]) {
            throw ParseError(lineno, "duplicate bitstring " + bits);
        }
        seen[index] = true;
        amps[index] = Complex{re, im};
    }
    return StateVector(n_qubits, std::move(amps));
}

void write_dfvec(const StateVector& psi, const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw std::runtime_error("cannot open " + path + " for writing");
    }
    out << to_dfvec(psi);
    if (!out) {
        throw std::runtime_error("write to " + path + " failed");
    }
}

StateVector read_dfvec(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return parse_dfvec(in);
}

}  // namespace dfq
