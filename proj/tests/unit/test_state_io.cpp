#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "entmono/errors.hpp"
#include "entmono/state_io.hpp"

using namespace entmono;

TEST_SUITE("state_io") {
  TEST_CASE("parses a valid record") {
    const PureState s = parse_state_json(R"({"n_qubits": 1, "amplitudes": [[0.6, 0], [0, 0.8]]})");
    CHECK(s.subsystems() == 1);
    CHECK(s.amplitudes()[0] == cplx(0.6, 0.0));
    CHECK(s.amplitudes()[1] == cplx(0.0, 0.8));
  }

  TEST_CASE("normalization tolerance is 1e-9") {
    CHECK_NOTHROW(parse_state_json(R"({"n_qubits": 1, "amplitudes": [[1.0000000001, 0], [0, 0]]})"));
    CHECK_THROWS_AS(parse_state_json(R"({"n_qubits": 1, "amplitudes": [[1.00001, 0], [0, 0]]})"),
                    ParameterError);
  }

  TEST_CASE("schema violations") {
    const char* bad[] = {
        "not json",
        "[1, 2]",
        R"({"amplitudes": [[1, 0], [0, 0]]})",
        R"({"n_qubits": 1.5, "amplitudes": [[1, 0], [0, 0]]})",
        R"({"n_qubits": 1})",
        R"({"n_qubits": 2, "amplitudes": [[1, 0], [0, 0]]})",
        R"({"n_qubits": 1, "amplitudes": [[1, 0, 0], [0, 0]]})",
        R"({"n_qubits": 1, "amplitudes": [["1", 0], [0, 0]]})",
        R"({"n_qubits": 0, "amplitudes": [[1, 0]]})",
        R"({"n_qubits": 13, "amplitudes": []})",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_state_json(text), ParameterError);
    }
  }

  TEST_CASE("round trip through a file") {
    const PureState w = preset_state("w:3");
    const std::string path = "state_io_roundtrip.json";
    {
      std::ofstream f(path);
      f << state_to_json(w);
    }
    const PureState back = load_state_file(path);
    std::remove(path.c_str());
    for (std::size_t i = 0; i < 8; ++i) CHECK(std::abs(back.amplitudes()[i] - w.amplitudes()[i]) < 1e-12);
    CHECK_THROWS_AS(load_state_file("definitely/missing/file.json"), ParameterError);
  }

  TEST_CASE("presets") {
    CHECK(preset_state("example1").subsystems() == 3);
    CHECK(preset_state("bell").subsystems() == 2);
    CHECK(preset_state("ghz:5").subsystems() == 5);
    CHECK(preset_state("w:4").subsystems() == 4);
    for (const char* bad : {"ghz:", "ghz:x", "w:3x", "nope", "ghz:1"}) {
      CAPTURE(bad);
      CHECK_THROWS_AS(preset_state(bad), ParameterError);
    }
  }
}
