// latroot - batch tool for root systems of integer vector configurations
// and the symmetry analysis of complete non-singular fans.
//
// Exit codes: 0 success, 1 domain error (invalid configuration, fan or
// subset; oracle mismatch), 2 usage error (bad flags, unreadable file,
// malformed JSON).

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "latroot/catalog.hpp"
#include "latroot/classify.hpp"
#include "latroot/configuration.hpp"
#include "latroot/errors.hpp"
#include "latroot/fan.hpp"
#include "latroot/json_io.hpp"
#include "latroot/oracle.hpp"
#include "latroot/root_system.hpp"

namespace {

using latroot::json;

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& msg) : std::runtime_error(msg) {}
};

json parse_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read file '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw UsageError("malformed JSON in '" + path + "' at byte " + std::to_string(e.byte) +
                         ": " + e.what());
    }
}

struct InputOptions {
    std::string input;    // file path, or a catalog name when no such file exists
    std::string catalog;  // explicit catalog name
};

bool wants_catalog(const InputOptions& o, std::string& name) {
    if (!o.catalog.empty()) {
        name = o.catalog;
        return true;
    }
    if (!o.input.empty() && !std::ifstream(o.input).good() && latroot::is_catalog_name(o.input)) {
        name = o.input;
        return true;
    }
    return false;
}

latroot::Fan resolve_fan(const InputOptions& o) {
    std::string name;
    if (wants_catalog(o, name)) return latroot::catalog_fan(name);
    if (o.input.empty()) throw UsageError("no input given; pass a file or --catalog NAME");
    return latroot::fan_from_json(parse_json_file(o.input));
}

latroot::VectorConfiguration resolve_configuration(const InputOptions& o) {
    std::string name;
    if (wants_catalog(o, name)) return latroot::catalog_fan(name).configuration();
    if (o.input.empty()) throw UsageError("no input given; pass a file or --catalog NAME");
    json j = parse_json_file(o.input);
    if (j.is_object() && j.contains("vectors")) return latroot::configuration_from_json(j);
    if (j.is_object() && j.contains("rays"))
        return latroot::fan_from_json(j).configuration();
    throw UsageError("'" + o.input + "' holds neither a configuration nor a fan");
}

latroot::SignAssignment parse_signs(const std::string& spec, std::size_t m) {
    if (spec.rfind("q=", 0) == 0) {
        std::size_t q = 0;
        try {
            q = std::stoul(spec.substr(2));
        } catch (...) {
            throw UsageError("bad sign spec '" + spec + "'");
        }
        if (q > m) throw latroot::InputError("block size " + std::to_string(q) +
                                             " exceeds vector count " + std::to_string(m));
        return latroot::SignAssignment::block(q, m);
    }
    std::vector<int> signs;
    std::stringstream ss(spec);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "+" || tok == "+1") signs.push_back(1);
        else if (tok == "-" || tok == "-1") signs.push_back(-1);
        else throw UsageError("bad sign token '" + tok + "' in '" + spec + "'");
    }
    if (signs.empty()) throw UsageError("empty sign spec");
    return latroot::SignAssignment(std::move(signs));
}

std::string sign_string(const latroot::SignAssignment& omega) {
    std::string s = "(";
    for (std::size_t i = 0; i < omega.size(); ++i) {
        if (i) s += ", ";
        s += omega[i] > 0 ? "+" : "-";
    }
    return s + ")";
}

void print_configuration(std::ostream& os, const latroot::VectorConfiguration& v) {
    os << "configuration: rank " << v.rank() << ", " << v.size() << " vectors\n";
    for (std::size_t i = 0; i < v.size(); ++i) {
        os << "  v" << i + 1 << " = " << latroot::format_vector(v.vector(i));
        if (!v.labels().empty()) os << "  [" << v.labels()[i] << "]";
        os << "\n";
    }
}

void print_root_line(std::ostream& os, const latroot::Root& r) {
    os << "  alpha = " << latroot::format_vector(r.alpha)
       << "  pairing = " << latroot::format_vector(r.pairing);
    if (auto kind = r.kind()) os << "  type " << static_cast<int>(*kind);
    os << "\n";
}

void print_roots_by_component(std::ostream& os, const latroot::RootSystem& rs,
                              const latroot::ClassificationReport& cls) {
    if (rs.empty()) {
        os << "root system: empty\n";
        return;
    }
    os << "root system: " << rs.size() << " roots in " << cls.components.size()
       << (cls.components.size() == 1 ? " component" : " components") << " (" << cls.summary()
       << ")\n";
    for (std::size_t c = 0; c < cls.components.size(); ++c) {
        const auto& comp = cls.components[c];
        os << "component " << c + 1 << ": " << comp.label.str() << " (" << comp.roots.size()
           << " roots)\n";
        for (const latroot::Root& r : comp.roots) print_root_line(os, r);
    }
}

void print_classification(std::ostream& os, const latroot::RootSystem& rs,
                          const latroot::ClassificationReport& cls) {
    if (rs.empty()) {
        os << "root system: empty\n";
        return;
    }
    os << "root system: " << rs.size() << " roots, " << cls.components.size()
       << (cls.components.size() == 1 ? " component" : " components") << "\n";
    for (std::size_t c = 0; c < cls.components.size(); ++c) {
        const auto& comp = cls.components[c];
        os << "component " << c + 1 << ": " << comp.label.str() << ", " << comp.roots.size()
           << " roots\n";
        os << "  simple roots:";
        for (const latroot::Root& s : comp.simple)
            os << " " << latroot::format_vector(s.alpha);
        os << "\n  cartan: [";
        for (std::size_t i = 0; i < comp.cartan.rows(); ++i) {
            if (i) os << "; ";
            for (std::size_t j = 0; j < comp.cartan.cols(); ++j) {
                if (j) os << " ";
                os << comp.cartan(i, j).get_str();
            }
        }
        os << "]\n";
        if (comp.conjugates.empty()) {
            os << "  conjugate pairs: none\n";
        } else {
            os << "  conjugate pairs:";
            for (const auto& [a, b] : comp.conjugates)
                os << " {" << latroot::format_vector(a.alpha) << ", "
                   << latroot::format_vector(b.alpha) << "}";
            os << "\n";
        }
        if (comp.short_roots.empty()) {
            os << "  short roots: none\n";
        } else {
            os << "  short roots:";
            for (const latroot::Root& s : comp.short_roots)
                os << " " << latroot::format_vector(s.alpha);
            os << "\n";
        }
    }
    os << "criteria agreement: " << (cls.criteria_checked ? "yes" : "not applicable") << "\n";
}

void print_partition(std::ostream& os, const latroot::PartitionReport& part) {
    os << "partition of ray indices: " << part.classes.size()
       << (part.classes.size() == 1 ? " class" : " classes") << "\n";
    for (std::size_t c = 0; c < part.classes.size(); ++c) {
        os << "  class " << c + 1 << ": {";
        for (std::size_t i = 0; i < part.classes[c].size(); ++i) {
            if (i) os << ", ";
            os << part.classes[c][i] + 1;
        }
        os << "}";
        if (part.factor_ranks[c] > 0) os << "  factor A" << part.factor_ranks[c];
        else os << "  (no factor)";
        os << "\n";
    }
}

void print_fan_summary(std::ostream& os, const latroot::Fan& f) {
    os << "fan: rank " << f.rank() << ", " << f.ray_count() << " rays, " << f.max_cones().size()
       << " maximal cones\n";
    for (std::size_t i = 0; i < f.ray_count(); ++i)
        os << "  v" << i + 1 << " = " << latroot::format_vector(f.ray(i)) << "\n";
}

int run_roots(const InputOptions& in, const std::string& signed_spec, bool as_json) {
    latroot::VectorConfiguration v = resolve_configuration(in);
    latroot::RootSystem rs =
        signed_spec.empty()
            ? latroot::compute_roots(v)
            : latroot::compute_signed_roots(v, parse_signs(signed_spec, v.size()));
    latroot::ClassificationReport cls = latroot::classify_system(rs);
    if (as_json) {
        json out = latroot::to_json(rs);
        out["classification"] = latroot::to_json(cls);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    print_configuration(std::cout, rs.config);
    if (!signed_spec.empty())
        std::cout << "sign assignment: " << sign_string(parse_signs(signed_spec, v.size()))
                  << "\n";
    print_roots_by_component(std::cout, rs, cls);
    return 0;
}

int run_classify(const InputOptions& in, const std::string& subset_path, bool as_json) {
    latroot::VectorConfiguration v = resolve_configuration(in);
    latroot::RootSystem rs = latroot::compute_roots(v);
    latroot::ClassificationReport cls;
    if (subset_path.empty()) {
        cls = latroot::classify_system(rs);
    } else {
        json j = parse_json_file(subset_path);
        if (!j.is_array()) throw UsageError("subset file must hold an array of vectors");
        std::vector<latroot::IntVec> subset;
        for (const json& a : j) subset.push_back(latroot::ivec_from_json(a, "subset vector"));
        cls = latroot::classify_subsystem(rs, subset);
    }
    if (as_json) {
        std::cout << latroot::to_json(cls).dump(2) << "\n";
        return 0;
    }
    print_configuration(std::cout, v);
    print_classification(std::cout, rs, cls);
    return 0;
}

int run_dual(const InputOptions& in, bool as_json) {
    latroot::VectorConfiguration v = resolve_configuration(in);
    latroot::RootSystem rs = latroot::compute_roots(v);
    latroot::RootSystem dl = latroot::dual(rs);
    latroot::ClassificationReport cls = latroot::classify_system(dl);
    if (as_json) {
        json out = latroot::to_json(dl);
        out["classification"] = latroot::to_json(cls);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    print_configuration(std::cout, v);
    std::cout << "dual of the root system (" << rs.size() << " roots):\n";
    print_roots_by_component(std::cout, dl, cls);
    return 0;
}

int run_oracle(const InputOptions& in, bool as_json) {
    latroot::VectorConfiguration v = resolve_configuration(in);
    latroot::RootSystem solved = latroot::compute_roots(v);
    latroot::RootSystem enumerated = latroot::oracle_roots(v);
    std::vector<latroot::IntVec> missing, extra;
    for (const latroot::Root& r : enumerated.roots)
        if (!solved.contains(r.alpha)) missing.push_back(r.alpha);
    for (const latroot::Root& r : solved.roots)
        if (!enumerated.contains(r.alpha)) extra.push_back(r.alpha);
    bool agrees = missing.empty() && extra.empty();
    if (as_json) {
        json out;
        out["agrees"] = agrees;
        out["count"] = solved.size();
        json m = json::array(), e = json::array();
        for (const auto& a : missing) m.push_back(latroot::to_json(a));
        for (const auto& a : extra) e.push_back(latroot::to_json(a));
        out["missing_from_solver"] = m;
        out["extra_in_solver"] = e;
        std::cout << out.dump(2) << "\n";
        return agrees ? 0 : 1;
    }
    if (agrees) {
        std::cout << "oracle agrees: " << solved.size() << " roots\n";
        return 0;
    }
    std::cout << "oracle mismatch: solver found " << solved.size() << " roots, enumeration found "
              << enumerated.size() << "\n";
    for (const auto& a : missing)
        std::cout << "  missing from solver: " << latroot::format_vector(a) << "\n";
    for (const auto& a : extra)
        std::cout << "  extra in solver: " << latroot::format_vector(a) << "\n";
    return 1;
}

int run_fan_validate(const InputOptions& in, bool as_json) {
    latroot::Fan f = resolve_fan(in);  // throws on any invalid fan
    auto uncovered = latroot::uncovered_grid_point(f, 2);
    if (uncovered)
        throw latroot::NotCompleteError("grid point " + latroot::format_vector(*uncovered) +
                                        " lies in no maximal cone");
    if (as_json) {
        json out = latroot::to_json(f);
        out["valid"] = true;
        out["grid_sample_covered"] = true;
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    print_fan_summary(std::cout, f);
    std::cout << "valid: rays primitive, maximal cones unimodular, wall condition holds\n";
    std::cout << "grid sample: all lattice points within radius 2 are covered\n";
    return 0;
}

int run_fan_roots(const InputOptions& in, const std::string& signed_spec, bool as_json) {
    latroot::Fan f = resolve_fan(in);
    std::optional<latroot::SignAssignment> omega;
    if (!signed_spec.empty()) omega = parse_signs(signed_spec, f.ray_count());
    latroot::RootSystem rs = latroot::fan_roots(f, omega);
    latroot::ClassificationReport cls = latroot::classify_system(rs);
    if (as_json) {
        json out = latroot::to_json(rs);
        out["classification"] = latroot::to_json(cls);
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    print_fan_summary(std::cout, f);
    if (omega) std::cout << "sign assignment: " << sign_string(*omega) << "\n";
    print_roots_by_component(std::cout, rs, cls);
    return 0;
}

int run_fan_partition(const InputOptions& in, bool as_json) {
    latroot::Fan f = resolve_fan(in);
    latroot::PartitionReport part = latroot::reflection_partition(f);
    if (as_json) {
        std::cout << latroot::to_json(part).dump(2) << "\n";
        return 0;
    }
    print_fan_summary(std::cout, f);
    print_partition(std::cout, part);
    return 0;
}

int run_fan_report(const InputOptions& in, const std::string& signed_spec, bool as_json) {
    latroot::Fan f = resolve_fan(in);
    std::optional<latroot::SignAssignment> omega;
    if (!signed_spec.empty()) omega = parse_signs(signed_spec, f.ray_count());
    latroot::SymmetryReport rep = latroot::symmetry_report(f, omega);
    if (as_json) {
        json out = latroot::to_json(rep);
        out["fan"] = latroot::to_json(f);
        std::cout << out.dump(2) << "\n";
        return rep.identity_holds ? 0 : 1;
    }
    print_fan_summary(std::cout, f);
    print_roots_by_component(std::cout, rep.roots, rep.classification);
    print_partition(std::cout, rep.partition);
    std::cout << "structural identity (components = product of A factors over classes): "
              << (rep.identity_holds ? "holds" : "VIOLATED - " + rep.identity_detail) << "\n";
    if (omega) {
        std::cout << "sign assignment: " << sign_string(*omega) << "\n";
        print_roots_by_component(std::cout, *rep.signed_roots, *rep.signed_classification);
        std::cout << "signed roots are a subset of the unsigned roots: "
                  << (rep.signed_subset ? "yes" : "NO") << "\n";
    }
    return rep.identity_holds ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"root systems of integer vector configurations and toric fans"};
    app.require_subcommand(1);

    InputOptions in;
    bool as_json = false;
    std::string signed_spec, subset_path;

    auto add_common = [&](CLI::App* cmd, bool fan_input) {
        cmd->add_option("input", in.input,
                        fan_input ? "fan JSON file or catalog name"
                                  : "configuration/fan JSON file or catalog name");
        cmd->add_option("--catalog", in.catalog, "use a built-in fan by name");
        cmd->add_flag("--json", as_json, "emit JSON instead of a table");
    };

    CLI::App* roots = app.add_subcommand("roots", "compute the root system of a configuration");
    add_common(roots, false);
    roots->add_option("--signed", signed_spec, "sign assignment: +,-,... or q=K");

    CLI::App* classify = app.add_subcommand("classify", "classify a root system into components");
    add_common(classify, false);
    classify->add_option("--subset", subset_path, "classify this subset as a subsystem");

    CLI::App* dualcmd = app.add_subcommand("dual", "dual root system and its classification");
    add_common(dualcmd, false);

    CLI::App* oracle = app.add_subcommand("oracle",
                                          "cross-check the solver against exhaustive enumeration");
    add_common(oracle, false);

    CLI::App* fval = app.add_subcommand("fan-validate", "validate a complete non-singular fan");
    add_common(fval, true);

    CLI::App* froots = app.add_subcommand("fan-roots", "root system of a fan");
    add_common(froots, true);
    froots->add_option("--signed", signed_spec, "sign assignment: +,-,... or q=K");

    CLI::App* fpart = app.add_subcommand("fan-partition", "reflection orbit partition of the rays");
    add_common(fpart, true);

    CLI::App* frep = app.add_subcommand("fan-report", "full symmetry report of a fan");
    add_common(frep, true);
    frep->add_option("--signed", signed_spec, "sign assignment: +,-,... or q=K");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (roots->parsed()) return run_roots(in, signed_spec, as_json);
        if (classify->parsed()) return run_classify(in, subset_path, as_json);
        if (dualcmd->parsed()) return run_dual(in, as_json);
        if (oracle->parsed()) return run_oracle(in, as_json);
        if (fval->parsed()) return run_fan_validate(in, as_json);
        if (froots->parsed()) return run_fan_roots(in, signed_spec, as_json);
        if (fpart->parsed()) return run_fan_partition(in, as_json);
        if (frep->parsed()) return run_fan_report(in, signed_spec, as_json);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const latroot::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
