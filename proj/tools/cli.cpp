#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "fewsphere/catalog.hpp"
#include "fewsphere/error.hpp"
#include "fewsphere/gale.hpp"
#include "fewsphere/json_io.hpp"
#include "fewsphere/oracle.hpp"
#include "fewsphere/recognizer.hpp"

namespace fewsphere::cli {

namespace {

using json_io::Json;

struct CommandArgs {
    std::string input = "-";
    std::string output = "-";
    bool verify = false;
    bool verbose = false;
    bool parallel = false;
    int m = 0;
};

// Input errors are reported separately so they can map to exit status 64.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

Json read_document(const CommandArgs& args, std::istream& in) {
    std::stringstream buffer;
    if (args.input == "-") {
        buffer << in.rdbuf();
    } else {
        std::ifstream file(args.input);
        if (!file) throw InputError("cannot open " + args.input);
        buffer << file.rdbuf();
    }
    try {
        return json_io::parse_text(buffer.str());
    } catch (const Error& e) {
        throw InputError(e.what());
    }
}

template <typename F>
auto parse_or_input_error(F&& parse) {
    try {
        return parse();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::InvalidInput) throw InputError(e.what());
        throw;
    }
}

// A complex document or a non-face document, whichever was given.
SimplicialComplex read_complex_or_nonfaces(const Json& doc) {
    return parse_or_input_error([&] {
        if (doc.is_object() && doc.contains("nonfaces")) return complex_from_nonfaces(json_io::parse_nonfaces(doc));
        return json_io::parse_complex(doc);
    });
}

NonFaceFamily read_nonfaces_or_complex(const Json& doc) {
    return parse_or_input_error([&] {
        if (doc.is_object() && doc.contains("facets")) return minimal_nonfaces(json_io::parse_complex(doc));
        return json_io::parse_nonfaces(doc);
    });
}

void write_document(const CommandArgs& args, std::ostream& out, const Json& doc) {
    const std::string text = json_io::render(doc);
    if (args.output == "-") {
        out << text;
        return;
    }
    std::ofstream file(args.output);
    if (!file) throw InputError("cannot write " + args.output);
    file << text;
}

std::string cyclic_notation(const MaxOddCycle& cert) {
    std::string s;
    for (std::size_t i = 0; i < cert.ordering.size(); ++i) {
        if (i) s += " -- ";
        s += cert.ordering.sets()[i].to_string();
    }
    s += " -- (back to A_0)\nblocks:";
    for (std::size_t i = 0; i < cert.blocks.size(); ++i) {
        s += " B_" + std::to_string(i) + "=" + cert.blocks[i].to_string();
    }
    return s;
}

const MaxOddCycle& require_max_odd_cycle(const Verdict& verdict) {
    if (const auto* s = std::get_if<Sphere>(&verdict)) {
        if (const auto* cert = std::get_if<MaxOddCycle>(&s->certificate)) return *cert;
    }
    throw Error(ErrorCode::NotMaxOddCycle, "the non-face family is not a maximum odd cycle");
}

int cmd_check(const CommandArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const SimplicialComplex c = read_complex_or_nonfaces(read_document(args, in));
    const Verdict verdict = recognize(c);
    write_document(args, out, json_io::to_json(verdict));
    if (args.verbose) {
        if (const auto* s = std::get_if<Sphere>(&verdict)) {
            if (const auto* cert = std::get_if<MaxOddCycle>(&s->certificate)) err << cyclic_notation(*cert) << "\n";
        }
    }
    if (is_sphere(verdict)) return kExitSphere;
    return std::holds_alternative<OutOfScope>(verdict) ? kExitOutOfScope : kExitNotSphere;
}

int cmd_nonfaces(const CommandArgs& args, std::istream& in, std::ostream& out) {
    const Json doc = read_document(args, in);
    const SimplicialComplex c = parse_or_input_error([&] { return json_io::parse_complex(doc); });
    write_document(args, out, json_io::to_json(minimal_nonfaces(c)));
    return kExitOk;
}

int cmd_complex(const CommandArgs& args, std::istream& in, std::ostream& out) {
    const Json doc = read_document(args, in);
    const NonFaceFamily f = parse_or_input_error([&] { return json_io::parse_nonfaces(doc); });
    write_document(args, out, json_io::to_json(complex_from_nonfaces(f)));
    return kExitOk;
}

int cmd_realize(const CommandArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const NonFaceFamily f = read_nonfaces_or_complex(read_document(args, in));
    const Verdict verdict = recognize(f);
    const MaxOddCycle& cert = require_max_odd_cycle(verdict);
    const PointConfiguration points = realize_polytope(cert);
    write_document(args, out, json_io::to_json(points));
    if (args.verify) {
        const bool ok = boundary_complex(points) == complex_from_nonfaces(f);
        err << "verify: hull boundary " << (ok ? "equals" : "DIFFERS FROM") << " the complex\n";
        if (!ok) return kExitFailure;
    }
    return kExitOk;
}

int cmd_hull(const CommandArgs& args, std::istream& in, std::ostream& out) {
    const Json doc = read_document(args, in);
    const PointConfiguration pc = parse_or_input_error([&] { return json_io::parse_points(doc); });
    write_document(args, out, {{"m", pc.size()}, {"facets", json_io::face_list(hull_facets(pc))}});
    return kExitOk;
}

int cmd_homology(const CommandArgs& args, std::istream& in, std::ostream& out) {
    const SimplicialComplex c = read_complex_or_nonfaces(read_document(args, in));
    write_document(args, out, json_io::to_json(betti_mod2(c)));
    return kExitOk;
}

int cmd_catalog(const CommandArgs& args, std::ostream& out) {
    CatalogOptions options;
    options.parallel = args.parallel;
    const CatalogReport report = parse_or_input_error([&] { return catalog(args.m, options); });
    write_document(args, out, json_io::to_json(report));
    return kExitOk;
}

int cmd_verify(const CommandArgs& args, std::istream& in, std::ostream& out, std::ostream& err) {
    const SimplicialComplex c = read_complex_or_nonfaces(read_document(args, in));
    const NonFaceFamily f = minimal_nonfaces(c);
    Json stages = Json::array();
    bool all = true;
    auto stage = [&](const std::string& name, bool ok, const std::string& detail = "") {
        Json s = {{"stage", name}, {"pass", ok}};
        if (!detail.empty()) s["detail"] = detail;
        stages.push_back(std::move(s));
        all = all && ok;
        if (args.verbose) err << name << ": " << (ok ? "pass" : "FAIL") << (detail.empty() ? "" : " (" + detail + ")") << "\n";
    };

    const Verdict verdict = recognize(c);
    const auto* cert = [&]() -> const MaxOddCycle* {
        if (const auto* s = std::get_if<Sphere>(&verdict)) return std::get_if<MaxOddCycle>(&s->certificate);
        return nullptr;
    }();
    stage("recognize", cert != nullptr, json_io::to_json(verdict).value("verdict", ""));
    if (cert != nullptr) {
        try {
            const GaleConfiguration gale = realize_gale_vectors(diagram_from_certificate(*cert));
            const PointConfiguration points = reconstruct_points(gale);
            stage("realize", points.size() == static_cast<std::size_t>(c.vertex_count()));
            stage("hull", boundary_complex(points) == c);
            const int d = c.dimension();
            stage("homology", betti_mod2(c) == sphere_profile(d) && is_pseudomanifold(c) &&
                                  euler_characteristic(c) == 1 + (d % 2 == 0 ? 1 : -1));
            const auto recovered = recover_nonfaces(gale);
            stage("readback", recovered && recovered->family == f);
        } catch (const Error& e) {
            stage("pipeline", false, e.what());
        }
    }
    write_document(args, out, {{"pass", all}, {"stages", std::move(stages)}});
    return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& argv, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Recognize, certify and realize simplicial d-spheres on at most d + 4 vertices"};
    app.require_subcommand(1);
    CommandArgs args;

    auto add_io = [&](CLI::App* sub) {
        sub->add_option("-i,--input", args.input, "input JSON file, - for standard input");
        sub->add_option("-o,--output", args.output, "output JSON file, - for standard output");
        sub->add_flag("--verbose", args.verbose, "print human-readable detail to standard error");
    };
    CLI::App* check = app.add_subcommand("check", "decide sphericity of a complex or non-face family");
    CLI::App* nonfaces = app.add_subcommand("nonfaces", "minimal non-faces of a complex");
    CLI::App* complex = app.add_subcommand("complex", "complex determined by a non-face family");
    CLI::App* realize = app.add_subcommand("realize", "exact polytope whose boundary is the sphere");
    CLI::App* hull = app.add_subcommand("hull", "facets of the convex hull of rational points");
    CLI::App* homology = app.add_subcommand("homology", "reduced Betti numbers over GF(2)");
    CLI::App* cat = app.add_subcommand("catalog", "all d-spheres on m = d + 4 vertices");
    CLI::App* verify = app.add_subcommand("verify", "run every cross-check stage");
    for (CLI::App* sub : {check, nonfaces, complex, realize, hull, homology, verify}) add_io(sub);
    realize->add_flag("--verify", args.verify, "compare the hull boundary with the complex");
    cat->add_option("-o,--output", args.output, "output JSON file, - for standard output");
    cat->add_option("--m", args.m, "number of vertices")->required();
    cat->add_flag("--parallel", args.parallel, "verify bracelets concurrently");

    std::vector<std::string> reversed(argv.rbegin(), argv.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int status = app.exit(e, out, err);
        return status == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (*check) return cmd_check(args, in, out, err);
        if (*nonfaces) return cmd_nonfaces(args, in, out);
        if (*complex) return cmd_complex(args, in, out);
        if (*realize) return cmd_realize(args, in, out, err);
        if (*hull) return cmd_hull(args, in, out);
        if (*homology) return cmd_homology(args, in, out);
        if (*cat) return cmd_catalog(args, out);
        if (*verify) return cmd_verify(args, in, out, err);
    } catch (const InputError& e) {
        err << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitFailure;
    }
    return kExitInputError;
}

}  // namespace fewsphere::cli
