#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "dfq/dfstates.hpp"
#include "dfq/dfvec_io.hpp"
#include "test_helpers.hpp"

using namespace dfq;
using dfq::testing::random_state;

namespace {

StateVector roundtrip(const StateVector& psi) {
    std::istringstream in(to_dfvec(psi));
    return parse_dfvec(in);
}

}  // namespace

TEST_CASE("round trip is exact for random states") {
    Rng rng(101);
    for (int n : {1, 2, 4, 6}) {
        for (int trial = 0; trial < 5; ++trial) {
            const StateVector psi = random_state(n, rng);
            CHECK(roundtrip(psi) == psi);
        }
    }
}

TEST_CASE("round trip is exact for sparse states") {
    Rng rng(103);
    std::vector<Complex> v(64, Complex{0.0, 0.0});
    v[7] = Complex{0.25, -0.5};
    v[56] = Complex{-1.0 / 3.0, 0.0};
    const StateVector psi(6, v);
    const StateVector back = roundtrip(psi);
    CHECK(back == psi);
    // zero amplitudes produce no lines
    const std::string text = to_dfvec(psi);
    CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}

TEST_CASE("writer format") {
    const std::string text = to_dfvec(singlet());
    std::istringstream in(text);
    std::string line;
    std::getline(in, line);
    CHECK(line == "dfvec 1 2");
    std::getline(in, line);
    CHECK(line.substr(0, 3) == "01 ");
    std::getline(in, line);
    CHECK(line.substr(0, 3) == "10 ");
    CHECK_FALSE(std::getline(in, line));
}

TEST_CASE("parser accepts unsorted lines") {
    std::istringstream in("dfvec 1 2\n10 -0.70710678118654746 0\n01 0.70710678118654746 0\n");
    const StateVector psi = parse_dfvec(in);
    CHECK(fidelity(psi, singlet()) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("parser rejects duplicates with the offending line number") {
    std::istringstream in("dfvec 1 2\n01 0.5 0\n01 0.5 0\n");
    try {
        parse_dfvec(in);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
        CHECK(std::string(e.what()).find("duplicate") != std::string::npos);
    }
}

TEST_CASE("parser rejects malformed input") {
    auto expect_error = [](const std::string& text, int line) {
        std::istringstream in(text);
        try {
            parse_dfvec(in);
            FAIL_CHECK("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
        }
    };
    expect_error("", 1);
    expect_error("dfvec 2 2\n", 1);
    expect_error("vector 1 2\n", 1);
    expect_error("dfvec 1 11\n", 1);
    expect_error("dfvec 1 2\n0 1.0 0\n", 2);           // wrong bitstring length
    expect_error("dfvec 1 2\n0a 1.0 0\n", 2);          // bad characters
    expect_error("dfvec 1 2\n01 x 0\n", 2);            // bad number
    expect_error("dfvec 1 2\n01 1.0\n", 2);            // missing field
    expect_error("dfvec 1 2\n01 1.0 0 9\n", 2);        // trailing field
    expect_error("dfvec 1 2\n01 1 0\n10 1 0\n11 z 0\n", 4);
}

TEST_CASE("file write and read") {
    const StateVector psi = six_qubit_state("111");
    const std::string path = "dfvec_io_test_tmp.dfvec";
    write_dfvec(psi, path);
    CHECK(read_dfvec(path) == psi);
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_dfvec("does_not_exist.dfvec"), std::runtime_error);
}
