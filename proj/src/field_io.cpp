#include "gkw/field_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <system_error>

namespace gkw::io {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string field_to_csv(const Field& f) {
    std::string out = "x,value\n";
    out.reserve(out.size() + f.size() * 48);
    for (std::size_t j = 0; j < f.size(); ++j) {
        out += format_double(f.grid().x(j));
        out += ',';
        out += format_double(f[j]);
        out += '\n';
    }
    return out;
}

Field field_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    require(static_cast<bool>(std::getline(in, line)), "empty field CSV");
    require(line.rfind("x,value", 0) == 0, "field CSV must start with an 'x,value' header");

    std::vector<double> xs;
    std::vector<double> values;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        require(comma != std::string::npos, "malformed field CSV row: " + line);
        try {
            xs.push_back(std::stod(line.substr(0, comma)));
            values.push_back(std::stod(line.substr(comma + 1)));
        } catch (const std::exception&) {
            throw InvalidArgument("malformed field CSV row: " + line);
        }
    }
    require(!xs.empty(), "field CSV has no rows");
    const GridSpec grid(-xs.front(), xs.size());
    return Field(grid, std::move(values));
}

nlohmann::json field_to_json(const Field& f) {
    return {{"half_length", f.grid().half_length()},
            {"num_points", f.grid().num_points()},
            {"values", f.data()}};
}

Field field_from_json(const nlohmann::json& j) {
    try {
        const GridSpec grid(j.at("half_length").get<double>(), j.at("num_points").get<std::size_t>());
        return Field(grid, j.at("values").get<std::vector<double>>());
    } catch (const nlohmann::json::exception& e) {
        throw InvalidArgument(std::string("malformed field JSON: ") + e.what());
    }
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
    std::filesystem::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot open " + tmp.string() + " for writing");
        out << content;
        out.flush();
        if (!out) throw Error("failed writing " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw Error("cannot move result into place at " + path.string() + ": " + ec.message());
    }
}

}  // namespace gkw::io
