#include "qrlab/map_file.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qrlab {

namespace {

ComplexSeries parse_series(const nlohmann::json& j, const std::string& field) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("map file: field '" + field +
                                    "' must be a nonempty array of [re, im] pairs");
    std::vector<cplx> coeffs;
    coeffs.reserve(j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& pair = j[i];
        if (!pair.is_array() || pair.size() != 2)
            throw std::invalid_argument("map file: '" + field + "' entry " + std::to_string(i) +
                                        " is not a [re, im] pair");
        coeffs.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    return ComplexSeries(std::move(coeffs));
}

}  // namespace

MapFile parse_map_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("map file: ") + e.what());
    }
    if (!j.contains("kind")) throw std::invalid_argument("map file: missing field 'kind'");
    const std::string kind = j["kind"].get<std::string>();
    MapFile out;
    if (kind == "planar") {
        out.kind = MapFile::Kind::planar;
        if (!j.contains("g")) throw std::invalid_argument("map file: planar map needs field 'g'");
        out.planar.g = parse_series(j["g"], "g");
        out.planar.h = j.contains("h") ? parse_series(j["h"], "h") : ComplexSeries();
    } else if (kind == "ball-linear") {
        out.kind = MapFile::Kind::ball_linear;
        for (const char* field : {"n", "A", "b"})
            if (!j.contains(field))
                throw std::invalid_argument(std::string("map file: ball-linear map needs field '") +
                                            field + "'");
        out.ball.n = j["n"].get<int>();
        out.ball.A = j["A"].get<std::vector<double>>();
        out.ball.b = j["b"].get<std::vector<double>>();
        try {
            out.ball.validate();
        } catch (const std::exception& e) {
            throw std::invalid_argument(std::string("map file: ") + e.what());
        }
    } else {
        throw std::invalid_argument("map file: unknown kind '" + kind +
                                    "' (expected 'planar' or 'ball-linear')");
    }
    return out;
}

MapFile load_map_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open map file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw std::runtime_error("read failure on map file: " + path);
    return parse_map_json(buf.str());
}

}  // namespace qrlab
