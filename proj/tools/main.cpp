#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "torictodd/io.hpp"

namespace tt = torictodd;

namespace {

// Exit codes: 0 success, 1 invalid input, 2 unsupported input,
// 3 internal assertion failure, 4 verification mismatch.
constexpr int kOk = 0;
constexpr int kInvalid = 1;
constexpr int kUnsupported = 2;
constexpr int kInternal = 3;
constexpr int kMismatch = 4;

std::string cone_str(const std::vector<int>& cone) {
    std::string s = "{";
    for (size_t i = 0; i < cone.size(); ++i)
        s += (i ? "," : "") + std::to_string(cone[i]);
    return s + "}";
}

std::string charges_str(const std::vector<tt::Rat>& charges) {
    std::string s = "(";
    for (size_t i = 0; i < charges.size(); ++i)
        s += (i ? ", " : "") + tt::to_string(charges[i]);
    return s + ")";
}

tt::Fan fan_from(const std::string& path, bool trusted) {
    return tt::load_fan(tt::read_fan_file(path), trusted);
}

void require_complete(const tt::Fan& f) {
    if (!f.is_complete())
        throw tt::incomplete_fan_error(
            "fan is not complete; this command needs a complete fan");
}

int run_validate(const std::string& fan_path) {
    tt::FanFile file = tt::read_fan_file(fan_path);
    tt::ValidationReport rep =
        tt::validate_fan(file.dim, file.rays, file.max_cones);
    if (rep.ok()) {
        std::cout << "valid\n";
        return kOk;
    }
    for (const std::string& v : rep.violations) std::cout << v << "\n";
    return kInvalid;
}

int run_info(const std::string& fan_path, bool trusted) {
    tt::Fan f = fan_from(fan_path, trusted);
    if (!f.name().empty()) std::cout << "name: " << f.name() << "\n";
    std::cout << "dim: " << f.dim() << "\n";
    std::cout << "rays: " << f.ray_count() << "\n";
    std::cout << "max cone multiplicities:";
    for (const std::vector<int>& c : f.max_cones())
        std::cout << " " << cone_str(c) << ":" << tt::to_string(f.multiplicity(c));
    std::cout << "\n";
    std::cout << "smooth: " << (f.is_smooth() ? "yes" : "no") << "\n";
    std::cout << "complete: " << (f.is_complete() ? "yes" : "no") << "\n";

    tt::SupportSet ss = tt::support_set(f);
    std::cout << "|G_Sigma|: " << ss.elements.size() << "\n";
    std::cout << "conductor: " << ss.conductor << "\n";
    for (const tt::GroupElement& g : ss.elements)
        std::cout << "  element order " << g.order << ", charges "
                  << charges_str(g.charges) << "\n";
    return kOk;
}

int run_todd(const std::string& fan_path, bool trusted, bool as_json,
             bool verbose) {
    tt::Fan f = fan_from(fan_path, trusted);
    require_complete(f);
    tt::ToddReport rep = tt::todd_class(f, verbose);
    if (as_json) {
        std::cout << tt::todd_report_json(rep);
        return kOk;
    }
    std::cout << "conductor: " << rep.conductor << "\n";
    for (size_t k = 0; k < rep.components.size(); ++k) {
        std::cout << "degree " << k << ":";
        if (rep.components[k].empty()) std::cout << " 0";
        for (const auto& [cone, coeff] : rep.components[k])
            std::cout << "  V" << cone_str(cone) << ": " << tt::to_string(coeff);
        std::cout << "\n";
    }
    std::cout << "integral of top degree: " << tt::to_string(rep.top_integral)
              << "\n";
    if (verbose) {
        std::cout << "per-element contributions (z = primitive root of unity, "
                  << "conductor " << rep.conductor << "):\n";
        for (const tt::PerGContribution& c : rep.contributions) {
            std::cout << "  g with charges " << charges_str(c.element.charges)
                      << ":\n";
            for (const auto& [cone, coeff] : c.assembled.terms())
                std::cout << "    V" << cone_str(cone) << ": " << coeff.str()
                          << "\n";
        }
    }
    return kOk;
}

int run_chi(const std::string& fan_path, const std::string& divisor_path,
            long scale, bool trusted, bool as_json) {
    tt::Fan f = fan_from(fan_path, trusted);
    require_complete(f);
    tt::Divisor d = tt::load_divisor(tt::read_divisor_file(divisor_path), f);
    tt::Rat chi = tt::chi_twisted(f, d, tt::Int(scale));
    if (!tt::is_integer(chi))
        throw tt::rationality_error("chi of an integral divisor must be an "
                                    "integer, got " + tt::to_string(chi));
    if (as_json)
        std::cout << tt::chi_json(chi);
    else
        std::cout << tt::to_string(chi) << "\n";
    return kOk;
}

int run_ehrhart(const std::string& fan_path, const std::string& divisor_path,
                int max_n, bool compare, bool trusted, bool as_json) {
    tt::Fan f = fan_from(fan_path, trusted);
    require_complete(f);
    tt::Divisor d = tt::load_divisor(tt::read_divisor_file(divisor_path), f);
    tt::EhrhartResult r = tt::ehrhart(f, d, max_n);

    bool counting = compare;
    if (compare && !r.nef) {
        std::cerr << "warning: divisor is not nef; count comparison skipped\n";
        counting = false;
    }
    std::vector<tt::Int> counts;
    bool mismatch = false;
    if (counting) {
        for (int n = 0; n <= max_n; ++n) {
            counts.push_back(tt::count_lattice_points(
                tt::polytope_of_divisor(f, d.scaled(n))));
            if (r.chi_table[n] != counts.back()) mismatch = true;
        }
    }

    if (as_json) {
        std::cout << tt::ehrhart_json(r, counting ? &counts : nullptr);
    } else {
        for (int n = 0; n <= max_n; ++n) {
            std::cout << n << " " << tt::to_string(r.chi_table[n]);
            if (counting)
                std::cout << " " << tt::to_string(counts[n]) << " "
                          << (r.chi_table[n] == counts[n] ? "MATCH" : "MISMATCH");
            std::cout << "\n";
        }
        if (r.polynomial) {
            std::cout << "Ehrhart polynomial: E(n) =";
            for (size_t k = 0; k < r.polynomial->size(); ++k) {
                const tt::Rat& c = (*r.polynomial)[k];
                if (c == 0 && k > 0) continue;
                std::cout << (k ? " + " : " ") << tt::to_string(c);
                if (k >= 1) std::cout << "*n";
                if (k >= 2) std::cout << "^" << k;
            }
            std::cout << "\n";
        } else {
            std::cout << "divisor is not Cartier; no single polynomial\n";
        }
    }
    return mismatch ? kMismatch : kOk;
}

int run_count(const std::string& fan_path, const std::string& divisor_path,
              long scale, bool interior, bool trusted) {
    tt::Fan f = fan_from(fan_path, trusted);
    require_complete(f);
    tt::Divisor d = tt::load_divisor(tt::read_divisor_file(divisor_path), f);
    tt::DivisorPolytope p = tt::polytope_of_divisor(f, d.scaled(tt::Int(scale)));
    std::cout << tt::to_string(tt::count_lattice_points(p, interior)) << "\n";
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact Todd classes and Riemann-Roch for simplicial toric "
                 "varieties"};
    app.require_subcommand(1);
    app.fallthrough();

    bool trusted = false;
    app.add_flag("--trust-fan", trusted,
                 "skip the pairwise cone-intersection validation");

    std::string fan_path, divisor_path;
    long scale = 1;
    int max_n = 5;
    bool as_json = false, verbose = false, compare = false, interior = false;

    CLI::App* validate = app.add_subcommand("validate", "check fan structure");
    validate->add_option("fan", fan_path, "fan file")->required();

    CLI::App* info = app.add_subcommand(
        "info", "multiplicities, smoothness, stabilizer elements");
    info->add_option("fan", fan_path, "fan file")->required();

    CLI::App* todd = app.add_subcommand("todd", "Todd class by degree");
    todd->add_option("fan", fan_path, "fan file")->required();
    todd->add_flag("--json", as_json, "machine-readable output");
    todd->add_flag("--verbose", verbose, "per-element contributions");

    CLI::App* chi = app.add_subcommand("chi", "Euler characteristic of O(nD)");
    chi->add_option("fan", fan_path, "fan file")->required();
    chi->add_option("--divisor", divisor_path, "divisor file")->required();
    chi->add_option("--scale", scale, "dilation n (default 1)");
    chi->add_flag("--json", as_json, "machine-readable output");

    CLI::App* ehrhart =
        app.add_subcommand("ehrhart", "table of chi(nD), optional counts");
    ehrhart->add_option("fan", fan_path, "fan file")->required();
    ehrhart->add_option("--divisor", divisor_path, "divisor file")->required();
    ehrhart->add_option("--max-n", max_n, "largest dilation")->required();
    ehrhart->add_flag("--compare-count", compare,
                      "verify each row against brute-force lattice counts");
    ehrhart->add_flag("--json", as_json, "machine-readable output");

    CLI::App* count =
        app.add_subcommand("count", "lattice points of the dilated polytope");
    count->add_option("fan", fan_path, "fan file")->required();
    count->add_option("--divisor", divisor_path, "divisor file")->required();
    count->add_option("--scale", scale, "dilation n (default 1)");
    count->add_flag("--interior", interior, "count interior points only");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInvalid;
    }

    try {
        if (validate->parsed()) return run_validate(fan_path);
        if (info->parsed()) return run_info(fan_path, trusted);
        if (todd->parsed())
            return run_todd(fan_path, trusted, as_json, verbose);
        if (chi->parsed())
            return run_chi(fan_path, divisor_path, scale, trusted, as_json);
        if (ehrhart->parsed())
            return run_ehrhart(fan_path, divisor_path, max_n, compare, trusted,
                               as_json);
        if (count->parsed())
            return run_count(fan_path, divisor_path, scale, interior, trusted);
        return kInvalid;
    } catch (const tt::incomplete_fan_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUnsupported;
    } catch (const tt::rationality_error& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    } catch (const tt::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const tt::invalid_fan_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInvalid;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
