#pragma once

#include <string>
#include <vector>

#include "torictodd/errors.hpp"
#include "torictodd/fan.hpp"
#include "torictodd/polytope.hpp"
#include "torictodd/riemann_roch.hpp"

namespace torictodd {

// Input file is not well-formed (distinct from semantic fan validation).
struct parse_error : error {
    explicit parse_error(const std::string& msg) : error(msg) {}
};

// On-disk fan description.  Ray order is binding: it fixes the indexing of
// divisors, characters and Chow generators everywhere downstream.
struct FanFile {
    int dim = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<int>> max_cones;
    std::string name;

    bool operator==(const FanFile&) const = default;
};

struct DivisorFile {
    std::vector<Int> coeffs;

    bool operator==(const DivisorFile&) const = default;
};

FanFile parse_fan_file(const std::string& text);
std::string serialize_fan_file(const FanFile& f);
FanFile read_fan_file(const std::string& path);

DivisorFile parse_divisor_file(const std::string& text);
std::string serialize_divisor_file(const DivisorFile& d);
DivisorFile read_divisor_file(const std::string& path);

Fan load_fan(const FanFile& file, bool trusted = false);
Divisor load_divisor(const DivisorFile& file, const Fan& f);

// Machine-readable reports ("--json" renderings; all numbers exact strings).
std::string todd_report_json(const ToddReport& rep);
std::string chi_json(const Rat& chi);
// One row per dilation; counts, when given, add count and match fields.
std::string ehrhart_json(const EhrhartResult& r,
                         const std::vector<Int>* counts = nullptr);

}  // namespace torictodd
