#include "tifs/config.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tifs {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* field, const std::string& path) {
    if (!j.is_object() || !j.contains(field))
        throw Error(ErrorKind::ConfigError, path + field + ": missing field");
    return j.at(field);
}

int require_int(const json& j, const char* field, const std::string& path) {
    const json& value = require(j, field, path);
    if (!value.is_number_integer())
        throw Error(ErrorKind::ConfigError, path + field + ": expected an integer");
    return value.get<int>();
}

std::vector<double> require_numbers(const json& j, const char* field, const std::string& path,
                                    std::size_t count) {
    const json& value = require(j, field, path);
    if (!value.is_array() || value.size() != count)
        throw Error(ErrorKind::ConfigError,
                    path + field + ": expected an array of " + std::to_string(count) + " numbers");
    std::vector<double> out;
    out.reserve(count);
    for (const json& item : value) {
        if (!item.is_number())
            throw Error(ErrorKind::ConfigError, path + field + ": expected numbers");
        out.push_back(item.get<double>());
    }
    return out;
}

} // namespace

SystemConfig parse_config(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::ConfigError, std::string("invalid JSON: ") + e.what());
    }

    SystemConfig config;
    config.dimension = require_int(j, "dimension", "");

    const json& ratio = require(j, "base_ratio", "");
    if (!ratio.is_string())
        throw Error(ErrorKind::ConfigError, "base_ratio: expected a decimal string");
    config.base_ratio = ratio.get<std::string>();

    const json& vertices = require(j, "vertices", "");
    if (!vertices.is_array() || vertices.empty())
        throw Error(ErrorKind::ConfigError, "vertices: expected a nonempty array of ids");
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (!vertices[i].is_number_integer())
            throw Error(ErrorKind::ConfigError, "vertices[" + std::to_string(i) + "]: expected an integer id");
        config.vertices.push_back(vertices[i].get<int>());
    }

    const json& maps = require(j, "maps", "");
    if (!maps.is_array() || maps.empty())
        throw Error(ErrorKind::ConfigError, "maps: expected a nonempty array");
    const std::size_t m = static_cast<std::size_t>(config.dimension);
    for (std::size_t i = 0; i < maps.size(); ++i) {
        std::string path = "maps[" + std::to_string(i) + "].";
        SimilitudeSpec spec;
        spec.a = require_int(maps[i], "a", path);
        std::vector<double> o = require_numbers(maps[i], "O", path, m * m);
        spec.rotation = Matrix(config.dimension, config.dimension);
        for (std::size_t r = 0; r < m; ++r)
            for (std::size_t c = 0; c < m; ++c)
                spec.rotation(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = o[r * m + c];
        std::vector<double> q = require_numbers(maps[i], "q", path, m);
        spec.translation = Vector(config.dimension);
        for (std::size_t r = 0; r < m; ++r) spec.translation(static_cast<Eigen::Index>(r)) = q[r];
        spec.tail = require_int(maps[i], "tail", path);
        spec.head = require_int(maps[i], "head", path);
        config.maps.push_back(std::move(spec));
    }
    return config;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ConfigError, "cannot open config file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_config(buffer.str());
}

std::string format_config(const SystemConfig& config) {
    json j;
    j["dimension"] = config.dimension;
    j["base_ratio"] = config.base_ratio;
    j["vertices"] = config.vertices;
    j["maps"] = json::array();
    for (const SimilitudeSpec& spec : config.maps) {
        json entry;
        entry["a"] = spec.a;
        std::vector<double> o;
        for (Eigen::Index r = 0; r < spec.rotation.rows(); ++r)
            for (Eigen::Index c = 0; c < spec.rotation.cols(); ++c) o.push_back(spec.rotation(r, c));
        entry["O"] = o;
        entry["q"] = std::vector<double>(spec.translation.data(),
                                         spec.translation.data() + spec.translation.size());
        entry["tail"] = spec.tail;
        entry["head"] = spec.head;
        j["maps"].push_back(std::move(entry));
    }
    return j.dump(2) + "\n";
}

System load_system(const std::string& path) {
    return make_system(load_config(path));
}

} // namespace tifs
