#pragma once

#include <string>

#include "qrlab/ball_harmonic.hpp"
#include "qrlab/planar_harmonic.hpp"

namespace qrlab {

// JSON map file:
//   {"kind": "planar", "g": [[re, im], ...], "h": [[re, im], ...]}
//   {"kind": "ball-linear", "n": 3, "A": [row-major reals], "b": [reals]}
// Parse errors carry the offending field (and the parser's byte position).
struct MapFile {
    enum class Kind { planar, ball_linear } kind = Kind::planar;
    PlanarHarmonicMap planar;
    LinearBallMap ball;
};

MapFile parse_map_json(const std::string& text);
MapFile load_map_file(const std::string& path);   // throws std::runtime_error on I/O failure

}  // namespace qrlab
