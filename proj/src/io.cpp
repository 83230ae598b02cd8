#include "torictodd/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace torictodd {

namespace {

using nlohmann::json;

Int int_from(const json& j, const char* what) {
    if (!j.is_number_integer())
        throw parse_error(std::string(what) + " must be an integer");
    return Int(static_cast<long>(j.get<long long>()));
}

long to_long(const Int& x, const char* what) {
    if (!x.fits_slong_p())
        throw parse_error(std::string(what) + " out of serializable range");
    return x.get_si();
}

json parse_json(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw parse_error("input is not valid JSON");
    return j;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot read file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

FanFile parse_fan_file(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object()) throw parse_error("fan file must be a JSON object");
    if (!j.contains("dim") || !j.contains("rays") || !j.contains("max_cones"))
        throw parse_error("fan file needs dim, rays and max_cones");

    FanFile f;
    f.dim = static_cast<int>(int_from(j["dim"], "dim").get_si());
    if (!j["rays"].is_array()) throw parse_error("rays must be an array");
    for (const json& ray : j["rays"]) {
        if (!ray.is_array()) throw parse_error("each ray must be an array");
        std::vector<Int> v;
        for (const json& x : ray) v.push_back(int_from(x, "ray entry"));
        f.rays.push_back(std::move(v));
    }
    if (!j["max_cones"].is_array())
        throw parse_error("max_cones must be an array");
    for (const json& cone : j["max_cones"]) {
        if (!cone.is_array()) throw parse_error("each cone must be an array");
        std::vector<int> c;
        for (const json& x : cone)
            c.push_back(static_cast<int>(int_from(x, "cone index").get_si()));
        f.max_cones.push_back(std::move(c));
    }
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw parse_error("name must be a string");
        f.name = j["name"].get<std::string>();
    }
    return f;
}

std::string serialize_fan_file(const FanFile& f) {
    json j;
    j["dim"] = f.dim;
    j["rays"] = json::array();
    for (const std::vector<Int>& ray : f.rays) {
        json r = json::array();
        for (const Int& x : ray) r.push_back(to_long(x, "ray entry"));
        j["rays"].push_back(std::move(r));
    }
    j["max_cones"] = f.max_cones;
    if (!f.name.empty()) j["name"] = f.name;
    return j.dump(2) + "\n";
}

FanFile read_fan_file(const std::string& path) {
    return parse_fan_file(read_file(path));
}

DivisorFile parse_divisor_file(const std::string& text) {
    json j = parse_json(text);
    if (!j.is_object() || !j.contains("coeffs") || !j["coeffs"].is_array())
        throw parse_error("divisor file must be {\"coeffs\": [...]}");
    DivisorFile d;
    for (const json& x : j["coeffs"])
        d.coeffs.push_back(int_from(x, "divisor coefficient"));
    return d;
}

std::string serialize_divisor_file(const DivisorFile& d) {
    json j;
    j["coeffs"] = json::array();
    for (const Int& x : d.coeffs)
        j["coeffs"].push_back(to_long(x, "divisor coefficient"));
    return j.dump(2) + "\n";
}

DivisorFile read_divisor_file(const std::string& path) {
    return parse_divisor_file(read_file(path));
}

Fan load_fan(const FanFile& file, bool trusted) {
    if (trusted)
        return Fan::trusted(file.dim, file.rays, file.max_cones, file.name);
    return Fan::validated(file.dim, file.rays, file.max_cones, file.name);
}

Divisor load_divisor(const DivisorFile& file, const Fan& f) {
    if (static_cast<int>(file.coeffs.size()) != f.ray_count())
        throw parse_error("divisor has " + std::to_string(file.coeffs.size()) +
                          " coefficients for " + std::to_string(f.ray_count()) +
                          " rays");
    return Divisor{file.coeffs};
}

std::string todd_report_json(const ToddReport& rep) {
    json j = json::object();
    for (size_t k = 0; k < rep.components.size(); ++k) {
        json terms = json::array();
        for (const auto& [cone, coeff] : rep.components[k])
            terms.push_back({{"cone", cone}, {"coeff", to_string(coeff)}});
        j[std::to_string(k)] = std::move(terms);
    }
    return j.dump(2) + "\n";
}

std::string chi_json(const Rat& chi) {
    json j;
    j["chi"] = to_string(chi);
    return j.dump() + "\n";
}

std::string ehrhart_json(const EhrhartResult& r, const std::vector<Int>* counts) {
    json rows = json::array();
    for (size_t n = 0; n < r.chi_table.size(); ++n) {
        json row;
        row["n"] = n;
        row["chi"] = to_string(r.chi_table[n]);
        if (counts) {
            row["count"] = to_string((*counts)[n]);
            row["match"] = (*counts)[n] == r.chi_table[n];
        }
        rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
}

}  // namespace torictodd
