// DFVEC v1 text serialization of state vectors.
//
// Layout:
//   dfvec 1 <n_qubits>
//   <bitstring> <re> <im>        (one line per nonzero amplitude)
//
// Bitstrings have length n with qubit 1 first; numbers are printed with 17
// significant digits so doubles round-trip exactly; writer output is sorted
// by bitstring. The parser accepts unsorted input and rejects duplicate
// bitstrings.

#pragma once

#include <istream>
#include <stdexcept>
#include <string>

#include "dfq/statevec.hpp"

namespace dfq {

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

std::string to_dfvec(const StateVector& psi);
StateVector parse_dfvec(std::istream& in);

void write_dfvec(const StateVector& psi, const std::string& path);
StateVector read_dfvec(const std::string& path);

}  // namespace dfq
